//! Output documents for the subcommands that have no report type in the
//! library, with their table renderings.

use std::fmt::Write as _;

use handlebody::{ActionKind, ClassificationReport, GenusSpectrum};
use serde::{Deserialize, Serialize};

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub representative: String,
    pub size: usize,
    pub kind: ActionKind,
    pub character: Option<String>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub group: String,
    pub order: usize,
    pub n: usize,
    pub genus: u64,
    pub mode: String,
    pub states: usize,
    pub orbits: Vec<OrbitEntry>,
}

impl OrbitsReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  n={}  genus={}  mode={}  orbits={}  states={}\n",
            self.group,
            self.n,
            self.genus,
            self.mode,
            self.orbits.len(),
            self.states
        );
        for o in &self.orbits {
            let _ = writeln!(out, "  {:<5} {}  size={}{}", o.kind.short(), o.representative, o.size, character(&o.character));
        }
        out
    }
}

/// A single orbit listed member by member.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDetail {
    pub group: String,
    pub n: usize,
    pub genus: u64,
    pub mode: String,
    pub vector: String,
    pub kind: ActionKind,
    pub character: Option<String>,
    pub representative: String,
    pub size: usize,
    pub members: Vec<String>,
}

impl OrbitDetail {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  n={}  genus={}  mode={}\norbit of {}: {}{}  size={}  representative {}\n",
            self.group,
            self.n,
            self.genus,
            self.mode,
            self.vector,
            self.kind.short(),
            character(&self.character),
            self.size,
            self.representative
        );
        for m in &self.members {
            let _ = writeln!(out, "  {m}");
        }
        out
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenEntry {
    pub representative: String,
    pub size: usize,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenReport {
    pub group: String,
    pub order: usize,
    pub n: usize,
    pub mode: String,
    pub classes: Vec<NielsenEntry>,
}

impl NielsenReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  n={}  mode={}  Nielsen classes={}\n",
            self.group,
            self.n,
            self.mode,
            self.classes.len()
        );
        for c in &self.classes {
            let _ = writeln!(out, "  {}  size={}", c.representative, c.size);
        }
        out
    }
}

/// One row of the agreement matrix: vectors with a given algebraic verdict,
/// split by the covering verdict.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRow {
    pub algebraic: ActionKind,
    pub covering_orientable: usize,
    pub covering_nonorientable: usize,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub vector: String,
    pub algebraic: ActionKind,
    pub covering_orientable: bool,
    pub character: Option<String>,
    /// A basis cycle with sign −, as a word such as `x1 x2^-1`.
    pub witness: Option<String>,
    pub agree: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub group: String,
    pub order: usize,
    pub n: usize,
    pub genus: u64,
    pub basis_cycles: usize,
    pub checked: usize,
    pub mismatches: usize,
    pub matrix: Vec<MatrixRow>,
    pub entries: Vec<OracleEntry>,
}

impl OracleReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  n={}  genus={}  basis cycles={}  checked={}  mismatches={}\n",
            self.group, self.n, self.genus, self.basis_cycles, self.checked, self.mismatches
        );
        out.push_str("algebraic  covering:orientable  covering:nonorientable\n");
        for r in &self.matrix {
            let _ = writeln!(out, "{:<10} {:>19}  {:>22}", r.algebraic.short(), r.covering_orientable, r.covering_nonorientable);
        }
        for e in &self.entries {
            let _ = writeln!(
                out,
                "  {}  algebraic={}  covering={}{}{}",
                e.vector,
                e.algebraic.short(),
                if e.covering_orientable { "orientable" } else { "nonorientable" },
                character(&e.character),
                e.witness.as_ref().map(|w| format!("  witness {w}")).unwrap_or_default()
            );
        }
        out
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaReport {
    pub formula: ClassificationReport,
    pub enumerated: Option<ClassificationReport>,
    pub differences: Vec<String>,
}

impl FormulaReport {
    pub fn to_table(&self) -> String {
        let f = &self.formula;
        let mut out = format!(
            "group {}  |G|={}  n={}  genus={}  mu={}  rk H1={}\n",
            f.group, f.order, f.n, f.genus, f.mu, f.h1_rank
        );
        let e = self.enumerated.as_ref();
        out.push_str(if e.is_some() { "count    formula  enumerated\n" } else { "count    formula\n" });
        let rows = |r: &ClassificationReport| [r.op, r.or, r.nonor, r.op_weak, r.or_weak, r.nonor_weak];
        let names = ["op", "or", "nonor", "op_weak", "or_weak", "nonor_weak"];
        let enumerated = e.map(rows);
        for (i, (name, value)) in names.iter().zip(rows(f)).enumerate() {
            match enumerated {
                Some(en) => {
                    let _ = writeln!(out, "{name:<10} {value:>5}  {:>10}", en[i]);
                }
                None => {
                    let _ = writeln!(out, "{name:<10} {value:>5}");
                }
            }
        }
        if e.is_some() {
            if self.differences.is_empty() {
                out.push_str("formula and enumeration agree\n");
            } else {
                let _ = writeln!(out, "differences: {}", self.differences.join(", "));
            }
        }
        out
    }
}

fn character(c: &Option<String>) -> String {
    c.as_ref().map(|c| format!("  character {c}")).unwrap_or_default()
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub group: String,
    pub order: usize,
    pub mu: usize,
    pub h1_rank: usize,
    pub bound: u64,
    pub spectrum: GenusSpectrum,
}

impl SpectrumReport {
    pub fn to_table(&self) -> String {
        format!(
            "group {}  |G|={}  mu={}  rk H1={}  genus <= {}\n{}",
            self.group,
            self.order,
            self.mu,
            self.h1_rank,
            self.bound,
            self.spectrum.to_table()
        )
    }
}
