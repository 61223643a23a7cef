use std::collections::BTreeSet;

use super::{extend_along_cayley, Character, Elem, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// An automorphism of a [`FiniteGroup`], stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(group: &FiniteGroup) -> Self {
        Automorphism { images: group.elements().collect() }
    }

    /// Wraps an image table, returning `None` unless it is a bijective
    /// homomorphism.
    pub fn from_images(group: &FiniteGroup, images: Vec<Elem>) -> Option<Self> {
        let a = Automorphism { images };
        a.is_automorphism_of(group).then_some(a)
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Automorphism { images }
    }

    pub fn is_automorphism_of(&self, group: &FiniteGroup) -> bool {
        if self.images.len() != group.order() {
            return false;
        }
        let distinct: BTreeSet<_> = self.images.iter().copied().collect();
        if distinct.len() != group.order() || distinct.iter().any(|&x| x >= group.order()) {
            return false;
        }
        group.elements().all(|x| {
            group
                .elements()
                .all(|y| self.apply(group.mul(x, y)) == group.mul(self.apply(x), self.apply(y)))
        })
    }
}

/// Aut(G) with the default order cap.
pub fn automorphisms(group: &FiniteGroup) -> Result<Vec<Automorphism>> {
    automorphisms_with_cap(group, DEFAULT_ORDER_CAP)
}

/// The full automorphism group, identity first.
///
/// Images of the fixed minimal generating tuple are chosen one generator at a
/// time among elements of matching order; each prefix must extend to an
/// injective homomorphism on the subgroup it generates, otherwise the branch is
/// cut.
pub fn automorphisms_with_cap(group: &FiniteGroup, order_cap: usize) -> Result<Vec<Automorphism>> {
    if group.order() > order_cap {
        return Err(Error::OrderCap { cap: order_cap, reached: group.order() });
    }
    let gens = group.minimal_generating_tuple();
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| group.elements().filter(|&x| orders[x] == orders[g]).collect())
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gens.len());
    search(group, gens, &candidates, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn search(
    group: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    chosen: &mut Vec<Elem>,
    out: &mut Vec<Automorphism>,
) {
    let depth = chosen.len();
    if depth == gens.len() {
        let map = extend_along_cayley(group, gens, chosen, group.identity(), |a, b| group.mul(a, b))
            .expect("prefix already checked");
        let images: Vec<Elem> = map.into_iter().map(|x| x.expect("gens generate")).collect();
        out.push(Automorphism { images });
        return;
    }
    for &c in &candidates[depth] {
        chosen.push(c);
        let prefix = &gens[..=depth];
        if let Some(map) =
            extend_along_cayley(group, prefix, chosen, group.identity(), |a, b| group.mul(a, b))
        {
            let image: BTreeSet<Elem> = map.iter().flatten().copied().collect();
            let domain = map.iter().filter(|m| m.is_some()).count();
            if image.len() == domain {
                search(group, gens, candidates, chosen, out);
            }
        }
        chosen.pop();
    }
}

/// Orbits of Epi(G, C₂) under ω̄ ↦ ω̄ ∘ α⁻¹, each sorted, ordered by first
/// member.
pub fn epi_orbits_under_aut(group: &FiniteGroup) -> Result<Vec<Vec<Character>>> {
    Ok(epi_orbits_with(group, &automorphisms(group)?))
}

/// [`epi_orbits_under_aut`] with a precomputed automorphism list.
pub fn epi_orbits_with(group: &FiniteGroup, auts: &[Automorphism]) -> Vec<Vec<Character>> {
    let mut remaining: BTreeSet<Character> = super::homs_to_c2(group)
        .into_iter()
        .filter(|c| !c.is_trivial())
        .collect();
    let mut orbits = Vec::new();
    while let Some(first) = remaining.pop_first() {
        let mut orbit: BTreeSet<Character> = auts.iter().map(|a| first.twisted_by(a)).collect();
        orbit.insert(first);
        for c in &orbit {
            remaining.remove(c);
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}
