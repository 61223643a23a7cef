use std::fmt;

use super::{extend_along_cayley, Automorphism, Elem, FiniteGroup};
use crate::sign::Sign;

/// A homomorphism G → C₂, stored as its value on every element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    values: Vec<Sign>,
}

impl Character {
    pub fn trivial(group: &FiniteGroup) -> Self {
        Character { values: vec![Sign::Plus; group.order()] }
    }

    /// Wraps a value table, returning `None` unless it is a homomorphism.
    pub fn from_values(group: &FiniteGroup, values: Vec<Sign>) -> Option<Self> {
        let c = Character { values };
        (c.values.len() == group.order() && c.is_homomorphism(group)).then_some(c)
    }

    /// Extends `gens[i] ↦ signs[i]`, if that defines a homomorphism on G.
    pub fn extend(group: &FiniteGroup, gens: &[Elem], signs: &[Sign]) -> Option<Self> {
        let map = extend_along_cayley(group, gens, signs, Sign::Plus, |a, b| a * b)?;
        let values = map.into_iter().collect::<Option<Vec<_>>>()?;
        Some(Character { values })
    }

    #[inline]
    pub fn value(&self, x: Elem) -> Sign {
        self.values[x]
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&s| s == Sign::Plus)
    }

    pub fn is_homomorphism(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|x| {
            group
                .elements()
                .all(|y| self.value(group.mul(x, y)) == self.value(x) * self.value(y))
        })
    }

    /// ω̄ ∘ α⁻¹.
    pub fn twisted_by(&self, alpha: &Automorphism) -> Character {
        let inv = alpha.inverse();
        Character {
            values: (0..self.values.len()).map(|x| self.value(inv.apply(x))).collect(),
        }
    }

    /// Values on the descriptor's canonical generators, e.g. `i=-,j=+`.
    pub fn describe(&self, group: &FiniteGroup) -> String {
        group
            .generators()
            .iter()
            .map(|&g| format!("{}={}", group.name(g), self.value(g)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.values {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Hom(G, C₂), trivial character first.
///
/// Each of the 2^μ sign assignments on the fixed minimal generating tuple is
/// tested for extension to a homomorphism.
pub fn homs_to_c2(group: &FiniteGroup) -> Vec<Character> {
    let gens = group.minimal_generating_tuple();
    let mut out: Vec<Character> = (0..1u64 << gens.len())
        .filter_map(|mask| {
            let signs: Vec<Sign> = (0..gens.len()).map(|i| Sign::from_bit(mask >> i & 1 == 1)).collect();
            Character::extend(group, gens, &signs)
        })
        .collect();
    out.sort();
    out
}
