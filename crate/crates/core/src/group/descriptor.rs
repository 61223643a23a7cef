//! The group descriptor mini-language.
//!
//! ```text
//! cyclic:K            C_K, K >= 2
//! abelian:D1,D2,...   C_D1 ⊕ C_D2 ⊕ ...
//! dihedral:R          dihedral group of order 2R, R >= 3
//! quaternion          Q8
//! perm:(1 2 3)(4 5),(1 2)
//!                     closure of permutation generators (1-based points,
//!                     generators separated by commas)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation generator written as a product of cycles on 1-based points.
pub type CycleProduct = Vec<Vec<u32>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Dihedral(u64),
    Quaternion,
    Perm(Vec<CycleProduct>),
}

fn malformed(input: &str, reason: impl Into<String>) -> Error {
    Error::Descriptor {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_positive(input: &str, token: &str) -> Result<u64> {
    token
        .trim()
        .parse::<u64>()
        .map_err(|_| malformed(input, format!("`{}` is not a positive integer", token.trim())))
}

fn parse_cycles(input: &str, generator: &str) -> Result<CycleProduct> {
    let mut rest = generator.trim();
    if rest.is_empty() {
        return Err(malformed(input, "empty permutation generator"));
    }
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| malformed(input, format!("expected `(` in `{generator}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| malformed(input, format!("unclosed cycle in `{generator}`")))?;
        let points = body[..close]
            .split_whitespace()
            .map(|p| match p.parse::<u32>() {
                Ok(0) | Err(_) => Err(malformed(input, format!("bad point `{p}`"))),
                Ok(v) => Ok(v),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut seen = points.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != points.len() {
            return Err(malformed(input, format!("repeated point in `{generator}`")));
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a)),
            None => (s, None),
        };
        match (head.to_ascii_lowercase().as_str(), args) {
            ("quaternion", None) => Ok(GroupSpec::Quaternion),
            ("cyclic", Some(a)) => {
                let k = parse_positive(input, a)?;
                if k < 2 {
                    return Err(malformed(input, "cyclic order must be at least 2"));
                }
                Ok(GroupSpec::Cyclic(k))
            }
            ("abelian", Some(a)) => {
                let factors = a
                    .split(',')
                    .map(|t| parse_positive(input, t))
                    .collect::<Result<Vec<_>>>()?;
                if factors.iter().any(|&d| d < 2) {
                    return Err(malformed(input, "cyclic factors must be at least 2"));
                }
                Ok(GroupSpec::Abelian(factors))
            }
            ("dihedral", Some(a)) => {
                let r = parse_positive(input, a)?;
                if r < 3 {
                    return Err(Error::DihedralTooSmall(r));
                }
                Ok(GroupSpec::Dihedral(r))
            }
            ("perm", Some(a)) => {
                let gens = a
                    .split(',')
                    .map(|g| parse_cycles(input, g))
                    .collect::<Result<Vec<_>>>()?;
                Ok(GroupSpec::Perm(gens))
            }
            (other, _) => Err(malformed(input, format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(k) => write!(f, "cyclic:{k}"),
            GroupSpec::Abelian(ds) => {
                let parts: Vec<String> = ds.iter().map(u64::to_string).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Dihedral(r) => write!(f, "dihedral:{r}"),
            GroupSpec::Quaternion => f.write_str("quaternion"),
            GroupSpec::Perm(gens) => {
                f.write_str("perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    if g.is_empty() {
                        f.write_str("()")?;
                    }
                    for cycle in g {
                        let pts: Vec<String> = cycle.iter().map(u32::to_string).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                Ok(())
            }
        }
    }
}
