//! Invariant factors of finite abelian groups and the even/odd normal form
//! `C_{e_1} ⊕ … ⊕ C_{e_k} ⊕ C_{d_1} ⊕ … ⊕ C_{d_ℓ}` with every `e_i` even,
//! every `d_j` odd, `e_{i+1} | e_i`, `d_{j+1} | d_j` and `d_1 | e_k`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m).iter().fold(m, |acc, &(p, _)| acc / p * (p - 1))
}

/// Merges prime-power exponents, per prime, into invariant factors in
/// decreasing divisibility order (`d_{i+1} | d_i`).
fn merge(prime_powers: BTreeMap<u64, Vec<u32>>) -> Vec<u64> {
    let len = prime_powers.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, mut exps) in prime_powers {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            factors[i] *= p.pow(e);
        }
    }
    factors
}

/// Invariant factors of `C_{m_1} ⊕ … ⊕ C_{m_r}`, via elementary divisors.
pub fn invariant_factors_of_cyclic_sum(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &m in orders {
        for (p, e) in factorize(m) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    merge(by_prime)
}

/// Invariant factors read off the multiplication table: for each prime p the
/// number of cyclic p-factors of order at least `p^j` is
/// `log_p |{x : x^{p^j} = 1}| − log_p |{x : x^{p^{j−1}} = 1}|`.
pub fn invariant_factors(group: &FiniteGroup) -> Result<Vec<u64>> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian(group.spec().to_string()));
    }
    let orders: Vec<u64> = group.elements().map(|x| group.element_order(x) as u64).collect();
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, max_e) in factorize(group.order() as u64) {
        let log_count = |j: u32| -> u32 {
            let bound = p.pow(j);
            let count = orders.iter().filter(|&&o| bound % o == 0).count() as u64;
            let mut l = 0;
            let mut c = 1;
            while c < count {
                c *= p;
                l += 1;
            }
            l
        };
        let mut at_least: Vec<u32> = Vec::new();
        for j in 1..=max_e {
            at_least.push(log_count(j) - log_count(j - 1));
        }
        // at_least[j-1] factors have exponent ≥ j
        let mut exps = Vec::new();
        for j in (1..=max_e).rev() {
            let exactly = at_least[j as usize - 1] - at_least.get(j as usize).copied().unwrap_or(0);
            exps.extend(std::iter::repeat_n(j, exactly as usize));
        }
        by_prime.insert(p, exps);
    }
    Ok(merge(by_prime))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianNormalForm {
    /// `e_1, …, e_k`
    pub even: Vec<u64>,
    /// `d_1, …, d_ℓ`
    pub odd: Vec<u64>,
}

impl AbelianNormalForm {
    /// Splits invariant factors given in decreasing divisibility order.
    pub fn from_invariant_factors(factors: &[u64]) -> Self {
        let (even, odd): (Vec<u64>, Vec<u64>) = factors.iter().filter(|&&d| d > 1).partition(|&&d| d % 2 == 0);
        AbelianNormalForm { even, odd }
    }

    pub fn of_group(group: &FiniteGroup) -> Result<Self> {
        Ok(Self::from_invariant_factors(&invariant_factors(group)?))
    }

    pub fn k(&self) -> usize {
        self.even.len()
    }

    pub fn l(&self) -> usize {
        self.odd.len()
    }

    /// μ(G) = k + ℓ.
    pub fn rank(&self) -> usize {
        self.k() + self.l()
    }

    /// `|{e_1, …, e_k}|`.
    pub fn distinct_even(&self) -> usize {
        self.even.iter().collect::<BTreeSet<_>>().len()
    }

    /// N: 1 if `e_k = 2`, otherwise `φ(e_k)/2` when ℓ = 0 and `φ(d_ℓ)/2` when ℓ > 0.
    pub fn minimal_class_count(&self) -> u64 {
        match (self.even.last(), self.odd.last()) {
            (Some(2), _) => 1,
            (Some(&e), None) => euler_phi(e) / 2,
            (_, Some(&d)) => euler_phi(d) / 2,
            (None, None) => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::build(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn phi() {
        assert_eq!(
            (1..=12).map(euler_phi).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        );
    }

    #[test]
    fn merge_from_cyclic_factors() {
        assert_eq!(invariant_factors_of_cyclic_sum(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors_of_cyclic_sum(&[2, 4]), vec![4, 2]);
        assert_eq!(invariant_factors_of_cyclic_sum(&[6, 4]), vec![12, 2]);
        assert_eq!(invariant_factors_of_cyclic_sum(&[3, 9, 2]), vec![18, 3]);
    }

    #[test]
    fn table_agrees_with_descriptor() {
        for (spec, factors) in [
            ("cyclic:6", vec![6]),
            ("abelian:2,3", vec![6]),
            ("abelian:2,4", vec![4, 2]),
            ("abelian:6,4", vec![12, 2]),
            ("abelian:2,2,2", vec![2, 2, 2]),
            ("abelian:3,3", vec![3, 3]),
            ("perm:(1 2)(3 4),(1 3)(2 4)", vec![2, 2]),
        ] {
            assert_eq!(invariant_factors(&group(spec)).unwrap(), factors, "{spec}");
        }
        assert!(matches!(invariant_factors(&group("dihedral:3")), Err(Error::NotAbelian(_))));
    }

    #[test]
    fn normal_form() {
        let f = AbelianNormalForm::from_invariant_factors(&[12, 2]);
        assert_eq!((f.even.clone(), f.odd.clone()), (vec![12, 2], vec![]));
        assert_eq!((f.distinct_even(), f.minimal_class_count()), (2, 1));

        let f = AbelianNormalForm::from_invariant_factors(&[6, 3]);
        assert_eq!((f.even.clone(), f.odd.clone()), (vec![6], vec![3]));
        assert_eq!(f.minimal_class_count(), 1);

        let f = AbelianNormalForm::from_invariant_factors(&[5]);
        assert_eq!((f.k(), f.l(), f.minimal_class_count()), (0, 1, 2));

        let f = AbelianNormalForm::from_invariant_factors(&[8]);
        assert_eq!(f.minimal_class_count(), 2);
    }
}
