//! Concrete finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..order` with the identity at index 0. Every family
//! in the descriptor language is realised as a permutation group, closed under
//! right multiplication by its canonical generators; the breadth-first word that
//! first reaches an element becomes its printable name.

mod automorphism;
mod character;
mod descriptor;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

pub use automorphism::{
    automorphisms, automorphisms_with_cap, epi_orbits_under_aut, epi_orbits_with, Automorphism,
};
pub use character::{homs_to_c2, Character};
pub use descriptor::{CycleProduct, GroupSpec};

use crate::error::{Error, Result};

/// Element index into a [`FiniteGroup`].
pub type Elem = usize;

/// Default cap on the order of built groups.
pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    names: Vec<String>,
    generators: Vec<Elem>,
    spec: GroupSpec,
    minimal_generators: OnceLock<Vec<Elem>>,
}

/// A permutation on `0..degree`, composed left to right.
type Perm = Vec<u32>;

fn identity_perm(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

fn perm_from_cycles(cycles: &[Vec<u32>], degree: usize) -> Perm {
    let mut p = identity_perm(degree);
    // cycles are applied left to right
    for cycle in cycles {
        let mut step = identity_perm(degree);
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            step[(a - 1) as usize] = b - 1;
        }
        p = p.iter().map(|&x| step[x as usize]).collect();
    }
    p
}

fn quaternion_generators() -> Vec<Perm> {
    // element index = unit + 4 * negative, units ordered 1, i, j, k
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        T[a][b]
    }
    let right_mult = |g: usize| -> Perm {
        (0..8)
            .map(|x| {
                let (neg, u) = unit_mul(x % 4, g % 4);
                let sign = (x >= 4) ^ (g >= 4) ^ neg;
                (u + if sign { 4 } else { 0 }) as u32
            })
            .collect()
    };
    vec![right_mult(1), right_mult(2)]
}

fn letter_names(count: usize, single: &str, indexed: &str) -> Vec<String> {
    if count == 1 {
        vec![single.to_string()]
    } else {
        (1..=count).map(|i| format!("{indexed}{i}")).collect()
    }
}

fn perm_letters(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("g{}", i + 1)
            }
        })
        .collect()
}

fn render_word(word: &[usize], letters: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut k = 0;
    while k < word.len() {
        let mut run = 1;
        while k + run < word.len() && word[k + run] == word[k] {
            run += 1;
        }
        out.push_str(&letters[word[k]]);
        if run > 1 {
            out.push('^');
            out.push_str(&run.to_string());
        }
        k += run;
    }
    out
}

impl FiniteGroup {
    /// Builds a group from a descriptor with the default order cap.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(spec: &GroupSpec, order_cap: usize) -> Result<Self> {
        let (degree, gens, letters): (usize, Vec<Perm>, Vec<String>) = match spec {
            GroupSpec::Cyclic(k) => {
                let k = *k as usize;
                if k > order_cap {
                    return Err(Error::OrderCap { cap: order_cap, reached: k });
                }
                let gen = (0..k as u32).map(|x| (x + 1) % k as u32).collect();
                (k, vec![gen], vec!["s".to_string()])
            }
            GroupSpec::Abelian(ds) => {
                let order = ds.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d));
                match order {
                    Some(o) if o as u128 <= order_cap as u128 => {}
                    _ => {
                        return Err(Error::OrderCap {
                            cap: order_cap,
                            reached: order.unwrap_or(u64::MAX) as usize,
                        })
                    }
                }
                let degree: usize = ds.iter().map(|&d| d as usize).sum();
                let mut offset = 0u32;
                let mut gens = Vec::with_capacity(ds.len());
                for &d in ds {
                    let d = d as u32;
                    let mut p = identity_perm(degree);
                    for x in 0..d {
                        p[(offset + x) as usize] = offset + (x + 1) % d;
                    }
                    gens.push(p);
                    offset += d;
                }
                (degree, gens, letter_names(ds.len(), "s", "s"))
            }
            GroupSpec::Dihedral(r) => {
                if *r < 3 {
                    return Err(Error::DihedralTooSmall(*r));
                }
                if (2 * *r) as u128 > order_cap as u128 {
                    return Err(Error::OrderCap { cap: order_cap, reached: 2 * *r as usize });
                }
                let r = *r as u32;
                let s1 = (0..r).map(|x| (r - x) % r).collect();
                let s2 = (0..r).map(|x| (r + 1 - x) % r).collect();
                (r as usize, vec![s1, s2], letter_names(2, "s", "s"))
            }
            GroupSpec::Quaternion => (8, quaternion_generators(), vec!["i".into(), "j".into()]),
            GroupSpec::Perm(gens) => {
                let degree = gens
                    .iter()
                    .flatten()
                    .flatten()
                    .copied()
                    .max()
                    .unwrap_or(1) as usize;
                let perms = gens.iter().map(|g| perm_from_cycles(g, degree)).collect::<Vec<_>>();
                let letters = perm_letters(perms.len());
                (degree, perms, letters)
            }
        };

        let (elements, words) = close_under_generators(degree, &gens, order_cap)?;
        let order = elements.len();
        if order < 2 {
            return Err(Error::Descriptor {
                input: spec.to_string(),
                reason: "the trivial group is not supported".into(),
            });
        }
        let index: HashMap<&Perm, Elem> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![0; order * order];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                let prod: Perm = pa.iter().map(|&x| pb[x as usize]).collect();
                table[a * order + b] = index[&prod];
            }
        }
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] == 0).expect("closure is a group"))
            .collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let names = words.iter().map(|w| render_word(w, &letters)).collect();

        Ok(FiniteGroup {
            order,
            table,
            inverse,
            names,
            generators,
            spec: spec.clone(),
            minimal_generators: OnceLock::new(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// The descriptor's canonical generators, in descriptor order.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_mask(&self, gens: &[Elem]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[self.identity()] = true;
        let mut queue = vec![self.identity()];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
        }
        mask
    }

    pub fn subgroup_order(&self, gens: &[Elem]) -> usize {
        self.subgroup_mask(gens).iter().filter(|&&m| m).count()
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.subgroup_order(gens) == self.order
    }

    pub fn check_index(&self, a: Elem) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementIndex { index: a, order: self.order })
        }
    }

    /// μ(G): the least size of a generating set.
    pub fn mu(&self) -> usize {
        self.minimal_generating_tuple().len()
    }

    /// A generating tuple of length μ(G), fixed for the lifetime of the group.
    ///
    /// Found by a level-by-level search over the subgroups generated by k
    /// elements, which visits every k-generated subgroup once instead of every
    /// k-tuple.
    pub fn minimal_generating_tuple(&self) -> &[Elem] {
        self.minimal_generators.get_or_init(|| {
            let mut level: HashMap<Vec<bool>, Vec<Elem>> = HashMap::new();
            level.insert(self.subgroup_mask(&[]), Vec::new());
            loop {
                let mut next: HashMap<Vec<bool>, Vec<Elem>> = HashMap::new();
                let mut keys: Vec<_> = level.into_iter().collect();
                keys.sort();
                for (mask, gens) in keys {
                    for x in self.elements() {
                        if mask[x] {
                            continue;
                        }
                        let mut extended = gens.clone();
                        extended.push(x);
                        let grown = self.subgroup_mask(&extended);
                        if grown.iter().all(|&m| m) {
                            return extended;
                        }
                        next.entry(grown).or_insert(extended);
                    }
                }
                level = next;
            }
        })
    }

    /// Checks associativity, identity and inverse laws exhaustively, and name
    /// uniqueness.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let e = self.identity();
        for a in self.elements() {
            if self.mul(a, e) != a || self.mul(e, a) != a {
                return Err(format!("identity law fails at {a}"));
            }
            if self.mul(self.inv(a), a) != e || self.mul(a, self.inv(a)) != e {
                return Err(format!("inverse law fails at {a}"));
            }
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        let unique: HashSet<&String> = self.names.iter().collect();
        if unique.len() != self.order {
            return Err("element names are not unique".into());
        }
        Ok(())
    }
}

/// Extends `gens[i] ↦ images[i]` along the Cayley graph of the subgroup
/// generated by `gens`, into a target with operation `op` and identity `unit`.
///
/// Returns the map on the subgroup (`None` outside it), or `None` overall when
/// some edge `x → x·gens[i]` contradicts `f(x·gens[i]) = f(x)·images[i]`. A
/// consistent extension is a homomorphism on the subgroup.
pub(crate) fn extend_along_cayley<T, F>(
    group: &FiniteGroup,
    gens: &[Elem],
    images: &[T],
    unit: T,
    op: F,
) -> Option<Vec<Option<T>>>
where
    T: Copy + PartialEq,
    F: Fn(T, T) -> T,
{
    let mut map: Vec<Option<T>> = vec![None; group.order()];
    map[group.identity()] = Some(unit);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("queued elements are mapped");
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = op(fx, img);
            match map[y] {
                Some(prev) if prev != fy => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

fn close_under_generators(
    degree: usize,
    gens: &[Perm],
    order_cap: usize,
) -> Result<(Vec<Perm>, Vec<Vec<usize>>)> {
    let id = identity_perm(degree);
    let mut seen: HashMap<Perm, Elem> = HashMap::new();
    seen.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let prod: Perm = elements[x].iter().map(|&p| g[p as usize]).collect();
            if seen.contains_key(&prod) {
                continue;
            }
            if elements.len() == order_cap {
                return Err(Error::OrderCap { cap: order_cap, reached: order_cap + 1 });
            }
            let idx = elements.len();
            seen.insert(prod.clone(), idx);
            elements.push(prod);
            let mut w = words[x].clone();
            w.push(k);
            words.push(w);
            queue.push_back(idx);
        }
    }
    Ok((elements, words))
}
