//! Command-line front end: argument definitions and command dispatch. Every
//! command renders into a string so the binary only prints and sets the exit
//! status.

pub mod reports;

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use handlebody::classify::orientability_class_in;
use handlebody::covering::{covering_genus, verdict_on, Letter};
use handlebody::group::homs_to_c2;
use handlebody::{
    abelian_formula, classify_actions, enumerate_orbits, genus_spectrum, nielsen_classes, orbit_of,
    orientability_class, schreier_graph, ActionKind, ClassificationReport, EnumConfig, Error, FiniteGroup, GroupSpec,
    MarkedVector, Mode, OrientationVerdict, SchreierGraph,
};
use serde::Serialize;

use reports::{
    FormulaReport, MatrixRow, NielsenEntry, NielsenReport, OracleEntry, OracleReport, OrbitDetail, OrbitEntry,
    OrbitsReport, SpectrumReport,
};

#[derive(Debug, Parser)]
#[command(name = "handlebody", version, about = "Classify free finite group actions on 3-dimensional handlebodies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count equivalence and weak classes of free actions of each kind.
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        size: Size,
        /// Also list weak class representatives.
        #[arg(long)]
        weak: bool,
        /// Write the Schreier graph of every class representative as an edge list.
        #[arg(long, value_name = "PATH")]
        export_graph: Option<PathBuf>,
    },
    /// Genera admitting orientation-preserving, orientation-reversing and
    /// nonorientable actions.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Largest genus listed.
        #[arg(long, default_value_t = 30)]
        bound: u64,
    },
    /// Orbits of marked generating vectors, or the orbit of one vector.
    Orbits {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        size: Size,
        /// Orbits under moves together with Aut(G).
        #[arg(long)]
        weak: bool,
        /// List the orbit of this vector, e.g. `g=(i,j);v=(+,-)`.
        #[arg(long, value_name = "VECTOR")]
        vector: Option<String>,
    },
    /// Nielsen classes of generating n-vectors.
    Nielsen {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        size: Size,
        /// Classes under moves together with Aut(G).
        #[arg(long)]
        weak: bool,
    },
    /// Compare the algebraic orientability criterion with the covering graph.
    OracleCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        size: Size,
        /// Check only this vector.
        #[arg(long, value_name = "VECTOR")]
        vector: Option<String>,
        /// Write the Schreier graph of the checked vector as an edge list.
        #[arg(long, value_name = "PATH", requires = "vector")]
        export_graph: Option<PathBuf>,
    },
    /// Closed-form counts for an abelian group.
    Formula {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        size: Size,
        /// Also enumerate and report any difference.
        #[arg(long)]
        enumerate: bool,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Group descriptor: cyclic:K, abelian:D1,D2,..., dihedral:R, quaternion
    /// or perm:(1 2 3)(4 5),(1 2).
    pub group: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Largest number of marked vectors enumerated.
    #[arg(long, default_value_t = handlebody::nielsen::DEFAULT_STATE_CAP)]
    pub state_cap: u64,
    /// Largest group order built.
    #[arg(long, default_value_t = handlebody::group::DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Size {
    /// Vector length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Handlebody genus; must be 1 + |G|(n - 1) for some n >= 1.
    #[arg(long)]
    pub genus: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    /// Pretty-printed JSON.
    Machine,
}

/// A failed command: stable kind, message and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub code: u8,
}

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
const EXIT_FAILED: u8 = 1;

impl Failure {
    pub fn usage(kind: &str, message: impl Into<String>) -> Self {
        Failure { kind: kind.into(), message: message.into(), code: EXIT_USAGE }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}: {}", self.kind, self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_cap() {
            EXIT_CAP
        } else if matches!(e, Error::Inconsistent(_)) {
            EXIT_FAILED
        } else {
            EXIT_USAGE
        };
        Failure { kind: e.kind().into(), message: e.to_string(), code }
    }
}

type Outcome = Result<String, Failure>;

impl Common {
    fn build(&self) -> Result<FiniteGroup, Failure> {
        let spec: GroupSpec = self.group.parse()?;
        Ok(FiniteGroup::build_with_cap(&spec, self.order_cap)?)
    }

    fn config(&self) -> EnumConfig {
        EnumConfig { state_cap: self.state_cap, order_cap: self.order_cap }
    }

    fn render<T: Serialize>(&self, value: &T, table: impl FnOnce(&T) -> String) -> Outcome {
        Ok(match self.format {
            Format::Table => table(value),
            Format::Machine => machine(value),
        })
    }
}

/// The machine rendering: pretty JSON with a trailing newline.
pub fn machine<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Converts `genus = 1 + |G|(n − 1)` into n.
pub fn genus_to_n(genus: u64, order: usize) -> Result<usize, Error> {
    let order = order as u64;
    if genus == 0 || !(genus - 1).is_multiple_of(order) {
        return Err(Error::Genus { genus, order: order as usize });
    }
    Ok(1 + ((genus - 1) / order) as usize)
}

impl Size {
    fn resolve(&self, group: &FiniteGroup) -> Result<usize, Failure> {
        match (self.n, self.genus) {
            (Some(0), _) => Err(Error::ZeroLength.into()),
            (Some(n), _) => Ok(n),
            (None, Some(genus)) => Ok(genus_to_n(genus, group.order())?),
            (None, None) => Err(Failure::usage("usage", "one of --n or --genus is required")),
        }
    }

    /// As [`Size::resolve`], with a vector's length as the default and a
    /// consistency check when both are given.
    fn resolve_with(&self, group: &FiniteGroup, vector: Option<&MarkedVector>) -> Result<usize, Failure> {
        let Some(x) = vector else {
            return self.resolve(group);
        };
        if self.n.is_none() && self.genus.is_none() {
            return Ok(x.len());
        }
        let n = self.resolve(group)?;
        if n != x.len() {
            return Err(Failure::usage("bad-vector", format!("vector has length {} but n = {n}", x.len())));
        }
        Ok(n)
    }
}

fn mode_of(weak: bool) -> Mode {
    if weak {
        Mode::Weak
    } else {
        Mode::Equivalence
    }
}

fn mode_name(mode: Mode) -> String {
    match mode {
        Mode::Equivalence => "equivalence",
        Mode::Weak => "weak",
    }
    .to_string()
}

fn word_text(word: &[Letter]) -> String {
    word.iter()
        .map(|l| format!("x{}{}", l.coord + 1, if l.inverse { "^-1" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure {
        kind: "io".into(),
        message: format!("cannot write {}: {e}", path.display()),
        code: EXIT_FAILED,
    })
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { common, size, weak, export_graph } => classify(common, size, *weak, export_graph.as_ref()),
        Command::Spectrum { common, bound } => spectrum(common, *bound),
        Command::Orbits { common, size, weak, vector } => orbits(common, size, *weak, vector.as_deref()),
        Command::Nielsen { common, size, weak } => nielsen(common, size, *weak),
        Command::OracleCheck { common, size, vector, export_graph } => {
            oracle_check(common, size, vector.as_deref(), export_graph.as_ref())
        }
        Command::Formula { common, size, enumerate } => formula(common, size, *enumerate),
    }
}

fn classify(common: &Common, size: &Size, weak: bool, export: Option<&PathBuf>) -> Outcome {
    let group = common.build()?;
    let n = size.resolve(&group)?;
    let mut report = classify_actions(&group, n, &common.config())?;
    if let Some(path) = export {
        let mut out = String::new();
        for r in &report.representatives {
            let x = MarkedVector::parse(&group, &r.vector)?;
            out.push_str(&format!("# {}\n", r.vector));
            out.push_str(&schreier_graph(&group, x.g())?.to_edge_list(&group, &x));
        }
        write_file(path, &out)?;
    }
    if !weak {
        report.weak_representatives.clear();
    }
    common.render(&report, ClassificationReport::to_table)
}

fn spectrum(common: &Common, bound: u64) -> Outcome {
    let group = common.build()?;
    let report = SpectrumReport {
        group: group.spec().to_string(),
        order: group.order(),
        mu: group.mu(),
        h1_rank: homs_to_c2(&group).len().trailing_zeros() as usize,
        bound,
        spectrum: genus_spectrum(&group, bound),
    };
    common.render(&report, SpectrumReport::to_table)
}

fn orbits(common: &Common, size: &Size, weak: bool, vector: Option<&str>) -> Outcome {
    let group = common.build()?;
    let mode = mode_of(weak);
    let x = vector.map(|v| MarkedVector::parse(&group, v)).transpose()?;
    let n = size.resolve_with(&group, x.as_ref())?;
    let genus = covering_genus(&group, n);
    if let Some(x) = x {
        let orbit = orbit_of(&group, &x, mode, &common.config())?;
        let (kind, character) = orientability_class(&group, &x);
        let report = OrbitDetail {
            group: group.spec().to_string(),
            n,
            genus,
            mode: mode_name(mode),
            vector: x.to_text(&group),
            kind,
            character: character.map(|c| c.describe(&group)),
            representative: orbit.representative().to_text(&group),
            size: orbit.size(),
            members: orbit.members().iter().map(|m| m.to_text(&group)).collect(),
        };
        return common.render(&report, OrbitDetail::to_table);
    }
    let partition = enumerate_orbits(&group, n, mode, &common.config())?;
    let report = OrbitsReport {
        group: group.spec().to_string(),
        order: group.order(),
        n,
        genus,
        mode: mode_name(mode),
        states: partition.covered(),
        orbits: partition
            .orbits()
            .iter()
            .map(|o| {
                let (kind, character) = orientability_class(&group, &o.representative);
                OrbitEntry {
                    representative: o.representative.to_text(&group),
                    size: o.size,
                    kind,
                    character: character.map(|c| c.describe(&group)),
                }
            })
            .collect(),
    };
    common.render(&report, OrbitsReport::to_table)
}

fn nielsen(common: &Common, size: &Size, weak: bool) -> Outcome {
    let group = common.build()?;
    let n = size.resolve(&group)?;
    let mode = mode_of(weak);
    let classes = nielsen_classes(&group, n, mode, &common.config())?;
    let report = NielsenReport {
        group: group.spec().to_string(),
        order: group.order(),
        n,
        mode: mode_name(mode),
        classes: classes
            .into_iter()
            .map(|c| NielsenEntry { representative: c.representative.to_text(&group), size: c.size })
            .collect(),
    };
    common.render(&report, NielsenReport::to_table)
}

fn oracle_check(common: &Common, size: &Size, vector: Option<&str>, export: Option<&PathBuf>) -> Outcome {
    let group = common.build()?;
    let x = vector.map(|v| MarkedVector::parse(&group, v)).transpose()?;
    let n = size.resolve_with(&group, x.as_ref())?;
    let characters = homs_to_c2(&group);
    let kinds = [ActionKind::OrientationPreserving, ActionKind::OrientationReversing, ActionKind::Nonorientable];
    let mut matrix: Vec<MatrixRow> = kinds
        .iter()
        .map(|&k| MatrixRow { algebraic: k, covering_orientable: 0, covering_nonorientable: 0 })
        .collect();
    let mut entries = Vec::new();
    let mut mismatches = 0;
    let mut checked = 0;

    let vectors: Vec<MarkedVector> = match &x {
        Some(x) => vec![x.clone()],
        None => {
            let partition = enumerate_orbits(&group, n, Mode::Equivalence, &common.config())?;
            (0..partition.len()).flat_map(|k| partition.members(k)).collect()
        }
    };
    let mut graphs: HashMap<Vec<usize>, SchreierGraph> = HashMap::new();
    for y in &vectors {
        if !graphs.contains_key(&y.g().0[..]) {
            graphs.insert(y.g().0.clone(), schreier_graph(&group, y.g())?);
        }
        let graph = &graphs[&y.g().0[..]];
        let (kind, character) = orientability_class_in(&characters, y);
        let verdict = verdict_on(&group, graph, y)?;
        let agree = match (&verdict, kind) {
            (OrientationVerdict::Nonorientable { .. }, k) => k == ActionKind::Nonorientable,
            (OrientationVerdict::Orientable(_), ActionKind::Nonorientable) => false,
            (OrientationVerdict::Orientable(c), _) => Some(c) == character.as_ref(),
        };
        let row = &mut matrix[kinds.iter().position(|&k| k == kind).expect("known kind")];
        if verdict.is_orientable() {
            row.covering_orientable += 1;
        } else {
            row.covering_nonorientable += 1;
        }
        mismatches += usize::from(!agree);
        checked += 1;
        if x.is_some() {
            entries.push(OracleEntry {
                vector: y.to_text(&group),
                algebraic: kind,
                covering_orientable: verdict.is_orientable(),
                character: character.map(|c| c.describe(&group)),
                witness: match &verdict {
                    OrientationVerdict::Nonorientable { cycle } => Some(word_text(cycle)),
                    OrientationVerdict::Orientable(_) => None,
                },
                agree,
            });
        }
    }
    if let (Some(path), Some(x)) = (export, &x) {
        write_file(path, &schreier_graph(&group, x.g())?.to_edge_list(&group, x))?;
    }
    if mismatches > 0 {
        return Err(Error::Inconsistent(format!("{mismatches} of {checked} vectors disagree with the covering graph")).into());
    }
    let report = OracleReport {
        group: group.spec().to_string(),
        order: group.order(),
        n,
        genus: covering_genus(&group, n),
        basis_cycles: 1 + group.order() * (n - 1),
        checked,
        mismatches,
        matrix,
        entries,
    };
    common.render(&report, OracleReport::to_table)
}

fn formula(common: &Common, size: &Size, enumerate: bool) -> Outcome {
    let group = common.build()?;
    let n = size.resolve(&group)?;
    let closed = abelian_formula(&group, n)?;
    let enumerated = if enumerate { Some(classify_actions(&group, n, &common.config())?) } else { None };
    let mut differences = Vec::new();
    if let Some(e) = &enumerated {
        let fields = |r: &ClassificationReport| {
            [
                ("nielsen", r.nielsen),
                ("op", r.op),
                ("or", r.or),
                ("nonor", r.nonor),
                ("op_weak", r.op_weak),
                ("or_weak", r.or_weak),
                ("nonor_weak", r.nonor_weak),
            ]
        };
        for ((name, a), (_, b)) in fields(&closed).into_iter().zip(fields(e)) {
            if a != b {
                differences.push(format!("{name} formula={a} enumerated={b}"));
            }
        }
    }
    let report = FormulaReport { formula: closed, enumerated, differences };
    common.render(&report, FormulaReport::to_table)
}
