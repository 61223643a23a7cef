//! Marked generating vectors and the extended Nielsen-move action on them.
//!
//! A marked vector `(g, v)` pairs a generating n-tuple `g` of G with a sign
//! vector `v ∈ {±1}ⁿ`. Identifying `g` with the homomorphism `F_n → G` sending
//! `x_i ↦ g_i` and `v` with `F_n → C₂` sending `x_i ↦ v_i`, an automorphism φ
//! of `F_n` acts by precomposition with φ⁻¹ on both. Every move here rewrites
//! coordinate k as a word of length at most two in the old coordinates, so the
//! sign part is transformed by evaluating that same word in C₂.

mod moves;
mod orbits;

use std::fmt;
use std::ops::Deref;

pub use moves::{Move, Side};
pub use orbits::{
    enumerate_orbits, nielsen_classes, orbit_of, EnumConfig, Mode, NielsenClass, Orbit, OrbitPartition,
    OrbitRecord, DEFAULT_STATE_CAP,
};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::sign::Sign;

/// An n-tuple of group elements (a generating vector when it generates G).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenVector(pub Vec<Elem>);

impl Deref for GenVector {
    type Target = [Elem];

    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

impl GenVector {
    pub fn to_text(&self, group: &FiniteGroup) -> String {
        let names: Vec<&str> = self.0.iter().map(|&x| group.name(x)).collect();
        format!("({})", names.join(","))
    }
}

/// A vector of orientation signs, one per handle of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientVector(pub Vec<Sign>);

impl Deref for OrientVector {
    type Target = [Sign];

    fn deref(&self) -> &[Sign] {
        &self.0
    }
}

impl OrientVector {
    pub fn all_plus(n: usize) -> Self {
        OrientVector(vec![Sign::Plus; n])
    }

    pub fn is_all_plus(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Plus)
    }
}

impl fmt::Display for OrientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<String> = self.0.iter().map(Sign::to_string).collect();
        write!(f, "({})", signs.join(","))
    }
}

/// A pair `(g, v)` with `g` generating G and `|g| = |v| ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedVector {
    g: GenVector,
    v: OrientVector,
}

impl MarkedVector {
    /// Validates lengths, element indices and generation.
    pub fn new(group: &FiniteGroup, g: Vec<Elem>, v: Vec<Sign>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::ZeroLength);
        }
        if g.len() != v.len() {
            return Err(Error::MarkedVector {
                input: format!("{g:?} / {v:?}"),
                reason: format!("group part has length {} but sign part has length {}", g.len(), v.len()),
            });
        }
        for &x in &g {
            group.check_index(x)?;
        }
        if !group.generates(&g) {
            return Err(Error::NotGenerating);
        }
        Ok(MarkedVector { g: GenVector(g), v: OrientVector(v) })
    }

    /// Builds without checking generation; callers guarantee the invariants.
    pub(crate) fn from_parts(g: Vec<Elem>, v: Vec<Sign>) -> Self {
        debug_assert_eq!(g.len(), v.len());
        MarkedVector { g: GenVector(g), v: OrientVector(v) }
    }

    pub fn g(&self) -> &GenVector {
        &self.g
    }

    pub fn v(&self) -> &OrientVector {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.g.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.0.is_empty()
    }

    /// Applies an automorphism-like map to the group part, coordinatewise.
    pub fn map_group_part(&self, f: impl Fn(Elem) -> Elem) -> MarkedVector {
        MarkedVector::from_parts(self.g.iter().map(|&x| f(x)).collect(), self.v.0.clone())
    }

    /// Text form `g=(name,...);v=(+,-,...)`.
    pub fn to_text(&self, group: &FiniteGroup) -> String {
        format!("g={};v={}", self.g.to_text(group), self.v)
    }

    pub fn parse(group: &FiniteGroup, input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MarkedVector { input: input.to_string(), reason: reason.to_string() };
        let (gpart, vpart) = input
            .trim()
            .split_once(';')
            .ok_or_else(|| bad("expected `g=(...);v=(...)`"))?;
        let inner = |part: &str, key: &str| -> Result<Vec<String>> {
            let body = part
                .trim()
                .strip_prefix(key)
                .and_then(|s| s.trim_start().strip_prefix('='))
                .map(str::trim)
                .and_then(|s| s.strip_prefix('('))
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| bad(&format!("expected `{key}=(...)`")))?;
            Ok(body.split(',').map(|t| t.trim().to_string()).collect())
        };
        let g = inner(gpart, "g")?
            .iter()
            .map(|name| group.element_by_name(name).ok_or_else(|| bad(&format!("unknown element `{name}`"))))
            .collect::<Result<Vec<_>>>()?;
        let v = inner(vpart, "v")?
            .iter()
            .map(|t| {
                let mut chars = t.chars();
                match (chars.next().and_then(Sign::from_char), chars.next()) {
                    (Some(s), None) => Ok(s),
                    _ => Err(bad(&format!("bad sign `{t}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        MarkedVector::new(group, g, v)
    }
}

/// The image of `x` under a move. The group part and the sign part are rewritten
/// by the same basis words.
pub fn apply_move(group: &FiniteGroup, m: Move, x: &MarkedVector) -> Result<MarkedVector> {
    m.validate(x.len())?;
    let mut g = x.g.0.clone();
    let mut v = x.v.0.clone();
    m.apply_in_place(&mut g, |a| group.inv(a), |a, b| group.mul(a, b));
    m.apply_in_place(&mut v, |s| s, |a, b| a * b);
    Ok(MarkedVector::from_parts(g, v))
}
