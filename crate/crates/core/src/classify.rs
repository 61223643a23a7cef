//! From orbit partitions to classification reports.
//!
//! Each orbit of marked generating vectors is one equivalence class of free
//! actions on a handlebody of genus `1 + |G|(n − 1)`. The class is
//! orientation-preserving, orientation-reversing or nonorientable according to
//! whether `g_i ↦ v_i` extends to the trivial character, to a nontrivial
//! character, or to no homomorphism G → C₂ at all.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianNormalForm;
use crate::covering::covering_genus;
use crate::error::{Error, Result};
use crate::group::{epi_orbits_under_aut, homs_to_c2, Character, FiniteGroup};
use crate::nielsen::{enumerate_orbits, nielsen_classes, EnumConfig, MarkedVector, Mode, OrbitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    OrientationPreserving,
    OrientationReversing,
    Nonorientable,
}

impl ActionKind {
    pub fn short(self) -> &'static str {
        match self {
            ActionKind::OrientationPreserving => "op",
            ActionKind::OrientationReversing => "or",
            ActionKind::Nonorientable => "nonor",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

/// Classification tag attached to an orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTag {
    pub kind: ActionKind,
    pub character: Option<Character>,
}

/// One equivalence (or weak equivalence) class of free actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionClass {
    pub representative: MarkedVector,
    pub kind: ActionKind,
    /// The associated ω̄; absent exactly for nonorientable classes.
    pub character: Option<Character>,
    pub orbit_size: usize,
}

/// Kind of the action determined by `x`, given Hom(G, C₂).
pub fn orientability_class_in(characters: &[Character], x: &MarkedVector) -> (ActionKind, Option<Character>) {
    // the g_i generate G, so at most one character can match
    let matched = characters
        .iter()
        .find(|c| x.g().iter().zip(x.v().iter()).all(|(&g, &s)| c.value(g) == s));
    match matched {
        Some(c) if c.is_trivial() => (ActionKind::OrientationPreserving, Some(c.clone())),
        Some(c) => (ActionKind::OrientationReversing, Some(c.clone())),
        None => (ActionKind::Nonorientable, None),
    }
}

pub fn orientability_class(group: &FiniteGroup, x: &MarkedVector) -> (ActionKind, Option<Character>) {
    orientability_class_in(&homs_to_c2(group), x)
}

/// Tags every orbit of a signed partition from its representative.
pub fn tag_orbits(characters: &[Character], partition: &mut OrbitPartition) {
    for orbit in partition.orbits_mut() {
        let (kind, character) = orientability_class_in(characters, &orbit.representative);
        orbit.tag = Some(OrbitTag { kind, character });
    }
}

/// A representative as it appears in serialized reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub kind: ActionKind,
    pub vector: String,
    pub character: Option<String>,
    pub orbit_size: usize,
}

/// Per-(G, n) classification of free actions on genus `1 + |G|(n − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: String,
    pub order: usize,
    pub n: usize,
    pub genus: u64,
    pub mu: usize,
    pub h1_rank: usize,
    /// |E_n|, the number of Nielsen classes of generating n-vectors.
    pub nielsen: usize,
    pub op: usize,
    pub or: usize,
    pub nonor: usize,
    pub op_weak: usize,
    pub or_weak: usize,
    pub nonor_weak: usize,
    pub representatives: Vec<Representative>,
    pub weak_representatives: Vec<Representative>,
}

/// The count fields of a report, for comparing enumeration with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub genus: u64,
    pub mu: usize,
    pub h1_rank: usize,
    pub nielsen: usize,
    pub op: usize,
    pub or: usize,
    pub nonor: usize,
    pub op_weak: usize,
    pub or_weak: usize,
    pub nonor_weak: usize,
}

impl ClassificationReport {
    pub fn counts(&self) -> ClassCounts {
        ClassCounts {
            genus: self.genus,
            mu: self.mu,
            h1_rank: self.h1_rank,
            nielsen: self.nielsen,
            op: self.op,
            or: self.or,
            nonor: self.nonor,
            op_weak: self.op_weak,
            or_weak: self.or_weak,
            nonor_weak: self.nonor_weak,
        }
    }

    /// Plain-text table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "group {}  |G|={}  n={}  genus={}  mu={}  rk H1={}  Nielsen classes={}\n",
            self.group, self.order, self.n, self.genus, self.mu, self.h1_rank, self.nielsen
        ));
        out.push_str("kind    equivalence  weak\n");
        for (name, eq, weak) in [
            ("op", self.op, self.op_weak),
            ("or", self.or, self.or_weak),
            ("nonor", self.nonor, self.nonor_weak),
        ] {
            out.push_str(&format!("{name:<7} {eq:>11}  {weak:>4}\n"));
        }
        for (title, reps) in [("classes", &self.representatives), ("weak classes", &self.weak_representatives)] {
            if reps.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            for r in reps {
                out.push_str(&format!(
                    "  {:<5} {}  size={}{}\n",
                    r.kind.short(),
                    r.vector,
                    r.orbit_size,
                    r.character.as_ref().map(|c| format!("  character {c}")).unwrap_or_default()
                ));
            }
        }
        out
    }
}

/// Everything computed by [`classify_detailed`].
#[derive(Clone, Debug)]
pub struct Classification {
    pub report: ClassificationReport,
    pub classes: Vec<ActionClass>,
    pub weak_classes: Vec<ActionClass>,
    pub partition: OrbitPartition,
    pub weak_partition: OrbitPartition,
}

fn h1_rank(characters: &[Character]) -> usize {
    characters.len().trailing_zeros() as usize
}

fn collect_classes(characters: &[Character], partition: &mut OrbitPartition) -> Result<Vec<ActionClass>> {
    tag_orbits(characters, partition);
    partition
        .orbits()
        .iter()
        .map(|o| {
            let tag = o.tag.clone().expect("tagged above");
            let op_by_character = tag.kind == ActionKind::OrientationPreserving;
            if op_by_character != o.representative.v().is_all_plus() {
                return Err(Error::Inconsistent(format!(
                    "orbit of size {} has trivial character {} but all-plus signs {}",
                    o.size,
                    op_by_character,
                    o.representative.v().is_all_plus()
                )));
            }
            Ok(ActionClass {
                representative: o.representative.clone(),
                kind: tag.kind,
                character: tag.character,
                orbit_size: o.size,
            })
        })
        .collect()
}

fn count(classes: &[ActionClass], kind: ActionKind) -> usize {
    classes.iter().filter(|c| c.kind == kind).count()
}

fn render(group: &FiniteGroup, classes: &[ActionClass]) -> Vec<Representative> {
    classes
        .iter()
        .map(|c| Representative {
            kind: c.kind,
            vector: c.representative.to_text(group),
            character: c.character.as_ref().map(|ch| ch.describe(group)),
            orbit_size: c.orbit_size,
        })
        .collect()
}

/// Enumerates both equivalence and weak orbits and aggregates them.
pub fn classify_detailed(group: &FiniteGroup, n: usize, config: &EnumConfig) -> Result<Classification> {
    let characters = homs_to_c2(group);
    let mut partition = enumerate_orbits(group, n, Mode::Equivalence, config)?;
    let mut weak_partition = enumerate_orbits(group, n, Mode::Weak, config)?;
    let classes = collect_classes(&characters, &mut partition)?;
    let weak_classes = collect_classes(&characters, &mut weak_partition)?;
    let nielsen = nielsen_classes(group, n, Mode::Equivalence, config)?.len();

    let report = ClassificationReport {
        group: group.spec().to_string(),
        order: group.order(),
        n,
        genus: covering_genus(group, n),
        mu: group.mu(),
        h1_rank: h1_rank(&characters),
        nielsen,
        op: count(&classes, ActionKind::OrientationPreserving),
        or: count(&classes, ActionKind::OrientationReversing),
        nonor: count(&classes, ActionKind::Nonorientable),
        op_weak: count(&weak_classes, ActionKind::OrientationPreserving),
        or_weak: count(&weak_classes, ActionKind::OrientationReversing),
        nonor_weak: count(&weak_classes, ActionKind::Nonorientable),
        representatives: render(group, &classes),
        weak_representatives: render(group, &weak_classes),
    };
    Ok(Classification { report, classes, weak_classes, partition, weak_partition })
}

pub fn classify_actions(group: &FiniteGroup, n: usize, config: &EnumConfig) -> Result<ClassificationReport> {
    Ok(classify_detailed(group, n, config)?.report)
}

/// Closed-form classification for abelian groups, independent of enumeration.
///
/// At n = k + ℓ (minimal genus): N OP classes forming one weak class,
/// `(2^k − 1)N` OR classes forming `|{e_i}|` weak classes, and no nonorientable
/// action when ℓ = 0, otherwise N classes forming one weak class. Above the
/// minimal genus: one OP class, `2^k − 1` OR classes forming `|{e_i}|` weak
/// classes, and one nonorientable class. Below μ(G) every count is zero.
pub fn abelian_formula(group: &FiniteGroup, n: usize) -> Result<ClassificationReport> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let form = AbelianNormalForm::of_group(group)?;
    let (k, l) = (form.k(), form.l());
    let mu = form.rank();
    let or_per_class = (1usize << k) - 1;
    let (nielsen, nonor) = if n < mu {
        (0, 0)
    } else if n == mu {
        let big_n = form.minimal_class_count() as usize;
        (big_n, if l == 0 { 0 } else { big_n })
    } else {
        (1, 1)
    };
    let or = or_per_class * nielsen;
    let present = |c: usize| usize::from(c > 0);
    Ok(ClassificationReport {
        group: group.spec().to_string(),
        order: group.order(),
        n,
        genus: covering_genus(group, n),
        mu,
        h1_rank: k,
        nielsen,
        op: nielsen,
        or,
        nonor,
        op_weak: present(nielsen),
        or_weak: if or > 0 { form.distinct_even() } else { 0 },
        nonor_weak: present(nonor),
        representatives: Vec::new(),
        weak_representatives: Vec::new(),
    })
}

/// Genera admitting each kind of free action, up to a bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusSpectrum {
    pub orientation_preserving: BTreeSet<u64>,
    pub orientation_reversing: BTreeSet<u64>,
    pub nonorientable: BTreeSet<u64>,
}

impl GenusSpectrum {
    pub fn to_table(&self) -> String {
        let fmt_set = |s: &BTreeSet<u64>| {
            let items: Vec<String> = s.iter().map(u64::to_string).collect();
            format!("{{{}}}", items.join(", "))
        };
        format!(
            "orientation-preserving  {}\norientation-reversing   {}\nnonorientable           {}\n",
            fmt_set(&self.orientation_preserving),
            fmt_set(&self.orientation_reversing),
            fmt_set(&self.nonorientable)
        )
    }
}

/// Genus spectrum from μ(G) and rk H¹(G; Z/2) alone.
///
/// With `A = {1 + |G|(n − 1) : n ≥ μ}`: every genus in A carries an OP action;
/// an OR action iff rk > 0; a nonorientable action iff the genus exceeds the
/// minimal genus or rk < μ.
pub fn genus_spectrum(group: &FiniteGroup, genus_bound: u64) -> GenusSpectrum {
    let mu = group.mu();
    let rank = h1_rank(&homs_to_c2(group));
    let minimal = covering_genus(group, mu);
    let mut spectrum = GenusSpectrum::default();
    let mut n = mu;
    loop {
        let genus = covering_genus(group, n);
        if genus > genus_bound {
            break;
        }
        spectrum.orientation_preserving.insert(genus);
        if rank > 0 {
            spectrum.orientation_reversing.insert(genus);
        }
        if genus > minimal || rank < mu {
            spectrum.nonorientable.insert(genus);
        }
        n += 1;
    }
    spectrum
}

/// Whether all generating n-vectors are Nielsen equivalent.
///
/// When they are, the enumerated report must show one OP class and
/// |Aut(G)-orbits on Epi(G, C₂)| OR weak classes, and above μ(G) exactly one
/// nonorientable class; a violation is returned as [`Error::Inconsistent`].
pub fn single_class_check(group: &FiniteGroup, n: usize, config: &EnumConfig) -> Result<bool> {
    let classes = nielsen_classes(group, n, Mode::Equivalence, config)?;
    if classes.len() != 1 {
        return Ok(false);
    }
    let report = classify_actions(group, n, config)?;
    let epi_orbits = epi_orbits_under_aut(group)?.len();
    let mut problems = Vec::new();
    if report.op != 1 {
        problems.push(format!("op = {} (expected 1)", report.op));
    }
    if report.or_weak != epi_orbits {
        problems.push(format!("or_weak = {} (expected {epi_orbits})", report.or_weak));
    }
    if n > group.mu() && report.nonor != 1 {
        problems.push(format!("nonor = {} (expected 1)", report.nonor));
    }
    if problems.is_empty() {
        Ok(true)
    } else {
        Err(Error::Inconsistent(format!("{} n={}: {}", group.spec(), n, problems.join(", "))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::sign::Sign::{Minus, Plus};

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::build(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    fn key(r: &ClassificationReport) -> (usize, usize, usize, usize, usize, usize) {
        (r.op, r.or, r.nonor, r.op_weak, r.or_weak, r.nonor_weak)
    }

    #[test]
    fn kinds_of_single_vectors() {
        let q = group("quaternion");
        let (i, j) = (q.generators()[0], q.generators()[1]);
        let x = MarkedVector::new(&q, vec![i, j], vec![Plus, Plus]).unwrap();
        assert_eq!(orientability_class(&q, &x).0, ActionKind::OrientationPreserving);
        let x = MarkedVector::new(&q, vec![i, j], vec![Minus, Plus]).unwrap();
        let (kind, ch) = orientability_class(&q, &x);
        assert_eq!(kind, ActionKind::OrientationReversing);
        assert_eq!(ch.unwrap().value(i), Minus);

        let d3 = group("dihedral:3");
        let (s1, s2) = (d3.generators()[0], d3.generators()[1]);
        let x = MarkedVector::new(&d3, vec![s1, d3.mul(s1, s2)], vec![Plus, Minus]).unwrap();
        assert_eq!(orientability_class(&d3, &x), (ActionKind::Nonorientable, None));
    }

    #[test]
    fn report_examples() {
        let r = classify_actions(&group("quaternion"), 2, &cfg()).unwrap();
        assert_eq!((r.op, r.or, r.or_weak, r.nonor, r.genus), (1, 3, 1, 0, 9));
        let r = classify_actions(&group("dihedral:6"), 2, &cfg()).unwrap();
        assert_eq!((r.op, r.or, r.or_weak, r.nonor, r.genus), (1, 3, 2, 0, 13));
        let r = classify_actions(&group("abelian:4,2"), 2, &cfg()).unwrap();
        assert_eq!((r.op, r.or, r.or_weak, r.nonor), (1, 3, 2, 0));
    }

    #[test]
    fn formula_examples() {
        let r = abelian_formula(&group("abelian:2,2"), 2).unwrap();
        assert_eq!(key(&r), (1, 3, 0, 1, 1, 0));
        let r = abelian_formula(&group("cyclic:3"), 1).unwrap();
        assert_eq!(key(&r), (1, 0, 1, 1, 0, 1));
        let r = abelian_formula(&group("abelian:4,2"), 3).unwrap();
        assert_eq!(key(&r), (1, 3, 1, 1, 2, 1));
        assert!(matches!(abelian_formula(&group("quaternion"), 2), Err(Error::NotAbelian(_))));
    }

    #[test]
    fn spectrum_examples() {
        let s = genus_spectrum(&group("quaternion"), 30);
        assert_eq!(s.orientation_preserving, BTreeSet::from([9, 17, 25]));
        assert_eq!(s.orientation_reversing, BTreeSet::from([9, 17, 25]));
        assert_eq!(s.nonorientable, BTreeSet::from([17, 25]));

        let s = genus_spectrum(&group("cyclic:3"), 10);
        assert_eq!(s.orientation_preserving, BTreeSet::from([1, 4, 7, 10]));
        assert!(s.orientation_reversing.is_empty());
        assert_eq!(s.nonorientable, BTreeSet::from([1, 4, 7, 10]));

        let s = genus_spectrum(&group("dihedral:3"), 20);
        assert_eq!(s.nonorientable, BTreeSet::from([7, 13, 19]));
    }

    #[test]
    fn single_class_examples() {
        assert!(single_class_check(&group("quaternion"), 2, &cfg()).unwrap());
        assert!(single_class_check(&group("dihedral:4"), 3, &cfg()).unwrap());
        assert!(!single_class_check(&group("cyclic:5"), 1, &cfg()).unwrap());
    }

    #[test]
    fn report_json_round_trips() {
        let r = classify_actions(&group("dihedral:3"), 2, &cfg()).unwrap();
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
