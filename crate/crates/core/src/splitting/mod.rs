//! Splitting of rational primes, selection of prime sets `P` with
//! `∏ p > c^d`, and Chebotarev diagnostics.

mod chebotarev;

pub use chebotarev::{
    count_split_primes, frobenius_census, lemma51_report, lo_bound, logarithmic_integral, Census, ChebReport,
};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::modp::factor_mod_p;
use crate::arith::primes::{is_prime, kronecker, primes_up_to};
use crate::arith::Interval;
use crate::field::{Field, NumberField};
use crate::{Error, Result, DEFAULT_PRECISION, MAX_PRECISION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitMethod {
    /// `p` does not divide the polynomial discriminant: read off the
    /// factorization of the defining polynomial mod `p`.
    Generic,
    /// Quadratic field: the maximal order is monogenic, so the
    /// factorization of its generator decides every prime.
    ExactQuadratic,
    Unsupported,
}

/// Decomposition of `p` in the working order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub p: u64,
    /// `(e, f)` per prime above `p`, sorted by `f` then `e`.
    pub pairs: Vec<(u32, u32)>,
    /// Roots mod `p` of the split generator's minimal polynomial, one per
    /// degree-one prime, ascending.
    pub roots: Vec<u64>,
    pub method: SplitMethod,
}

impl SplittingType {
    pub fn degree_sum(&self) -> u32 {
        self.pairs.iter().map(|(e, f)| e * f).sum()
    }

    pub fn splits_completely(&self, d: usize) -> bool {
        self.method != SplitMethod::Unsupported
            && self.pairs.len() == d
            && self.pairs.iter().all(|&p| p == (1, 1))
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(e, fd)| format!("(e={e}, f={fd})")).collect();
        write!(f, "p = {}: {}", self.p, parts.join(" "))
    }
}

fn divides(p: u64, n: &BigInt) -> bool {
    (n % BigInt::from(p)).is_zero()
}

/// Splitting type of the prime `p` in `k`.
pub fn splitting_type(k: &NumberField, p: u64) -> Result<SplittingType> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let d = k.degree();
    let (_, g) = k.split_generator();
    if d == 2 {
        let kr = kronecker(k.field_disc(), p);
        let factors = factor_mod_p(g, p)?;
        let mut roots: Vec<u64> = factors.iter().filter(|(h, _)| h.deg() == 1).flat_map(|(h, _)| h.roots()).collect();
        roots.sort_unstable();
        let pairs = match kr {
            1 => vec![(1, 1), (1, 1)],
            0 => vec![(2, 1)],
            _ => vec![(1, 2)],
        };
        let expected_roots = match kr {
            1 => 2,
            0 => 1,
            _ => 0,
        };
        if roots.len() != expected_roots {
            return Err(Error::internal(format!(
                "Kronecker symbol and factorization of {g} mod {p} disagree"
            )));
        }
        return Ok(SplittingType {
            p,
            pairs,
            roots,
            method: SplitMethod::ExactQuadratic,
        });
    }
    if divides(p, k.poly_disc()) {
        return Ok(SplittingType {
            p,
            pairs: Vec::new(),
            roots: Vec::new(),
            method: SplitMethod::Unsupported,
        });
    }
    let factors = factor_mod_p(g, p)?;
    let mut pairs: Vec<(u32, u32)> = factors.iter().map(|(h, e)| (*e, h.deg() as u32)).collect();
    pairs.sort_by_key(|&(e, f)| (f, e));
    let mut roots: Vec<u64> = factors.iter().filter(|(h, _)| h.deg() == 1).flat_map(|(h, _)| h.roots()).collect();
    roots.sort_unstable();
    Ok(SplittingType {
        p,
        pairs,
        roots,
        method: SplitMethod::Generic,
    })
}

/// `true` if some prime of `k` above `p` has residue degree one.
pub fn has_degree_one_place(k: &NumberField, p: u64) -> bool {
    match splitting_type(k, p) {
        Ok(t) => t.method != SplitMethod::Unsupported && t.pairs.iter().any(|&(_, f)| f == 1),
        Err(_) => false,
    }
}

/// A designated degree-one place: the prime `p` and a root `a` of the split
/// generator's minimal polynomial mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeOnePlace {
    pub p: u64,
    pub root: u64,
}

/// The qualifying prime set of the `p`-adic search.
#[derive(Clone, Debug)]
pub struct PrimeSet {
    pub field: Field,
    /// Ascending by `p`, one designated place each.
    pub places: Vec<DegreeOnePlace>,
    pub product: BigInt,
    /// `c^d` for the working order.
    pub threshold: Interval,
}

impl PrimeSet {
    pub fn primes(&self) -> Vec<u64> {
        self.places.iter().map(|pl| pl.p).collect()
    }

    /// Bound `(∏ p)^(1/d)` on the height of the generator.
    pub fn bound(&self) -> Interval {
        Interval::from_integer(self.product.clone(), DEFAULT_PRECISION)
            .nth_root(self.field.degree() as u32)
            .expect("positive")
    }

    /// Re-check every invariant from scratch.
    pub fn verify(&self) -> Result<bool> {
        let mut ps = self.primes();
        let product: BigInt = ps.iter().map(|&p| BigInt::from(p)).product();
        ps.dedup();
        if ps.len() != self.places.len() || product != self.product {
            return Ok(false);
        }
        for pl in &self.places {
            let t = splitting_type(&self.field, pl.p)?;
            if t.method == SplitMethod::Unsupported || !t.roots.contains(&pl.root) {
                return Ok(false);
            }
        }
        Ok(exceeds_threshold(&self.field, &self.product)?)
    }
}

/// Certified `n > c^d`, escalating precision until the comparison is
/// conclusive.
pub fn exceeds_threshold(k: &NumberField, n: &BigInt) -> Result<bool> {
    let mut prec = DEFAULT_PRECISION;
    loop {
        let t = k.order_constant_pow_d(prec);
        match t.compare_rational(&num_rational::BigRational::from_integer(n.clone())) {
            Some(Ordering::Less) => return Ok(true),
            Some(_) => return Ok(false),
            None if t.lo() >= &num_rational::BigRational::from_integer(n.clone()) => return Ok(false),
            None if prec >= MAX_PRECISION => {
                return Err(Error::Precision {
                    bits: MAX_PRECISION,
                    context: format!("comparing {n} with c^d"),
                })
            }
            None => prec *= 2,
        }
    }
}

/// Qualifying prime set with the least product exceeding `c^d`, over primes
/// up to `bound`.
pub fn find_prime_set(k: &Field, bound: u64) -> Result<PrimeSet> {
    if bound < 2 {
        return Err(Error::domain("prime bound must be at least 2"));
    }
    let mut candidates: Vec<DegreeOnePlace> = Vec::new();
    for p in primes_up_to(bound) {
        let t = splitting_type(k, p)?;
        if t.method != SplitMethod::Unsupported {
            if let Some(&root) = t.roots.first() {
                candidates.push(DegreeOnePlace { p, root });
            }
        }
    }
    let primes: Vec<u64> = candidates.iter().map(|c| c.p).collect();
    let chosen = min_product_subset(&primes, &|n: &BigInt| exceeds_threshold(k, n))?
        .ok_or_else(|| Error::NotFound(format!("no qualifying prime set with primes ≤ {bound}")))?;
    let places: Vec<DegreeOnePlace> = candidates.into_iter().filter(|c| chosen.contains(&c.p)).collect();
    let product = places.iter().map(|c| BigInt::from(c.p)).product();
    let set = PrimeSet {
        field: k.clone(),
        places,
        product,
        threshold: k.order_constant_pow_d(DEFAULT_PRECISION),
    };
    if !set.verify()? {
        return Err(Error::internal("selected prime set failed verification"));
    }
    Ok(set)
}

/// Subset of `primes` (distinct) with the least product `n` satisfying
/// `exceeds(n)`, where `exceeds` is monotone in `n`. Distinct subsets have
/// distinct products, so the minimizer is unique. Returned ascending.
pub fn min_product_subset(
    primes: &[u64],
    exceeds: &dyn Fn(&BigInt) -> Result<bool>,
) -> Result<Option<Vec<u64>>> {
    let mut sorted: Vec<u64> = primes.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    // suffix[i] = product of sorted[i..]
    let mut suffix = vec![BigInt::one(); sorted.len() + 1];
    for i in (0..sorted.len()).rev() {
        suffix[i] = &suffix[i + 1] * sorted[i];
    }
    if !exceeds(&suffix[0])? {
        return Ok(None);
    }
    let mut best: Option<(BigInt, Vec<u64>)> = None;
    let mut stack = Vec::new();
    search(&sorted, &suffix, 0, &BigInt::one(), &mut stack, &mut best, exceeds)?;
    Ok(best.map(|(_, mut s)| {
        s.sort_unstable();
        s
    }))
}

fn search(
    sorted: &[u64],
    suffix: &[BigInt],
    start: usize,
    prod: &BigInt,
    stack: &mut Vec<u64>,
    best: &mut Option<(BigInt, Vec<u64>)>,
    exceeds: &dyn Fn(&BigInt) -> Result<bool>,
) -> Result<()> {
    if exceeds(prod)? {
        if best.as_ref().is_none_or(|(b, _)| prod < b) {
            *best = Some((prod.clone(), stack.clone()));
        }
        return Ok(());
    }
    if !exceeds(&(prod * &suffix[start]))? {
        return Ok(());
    }
    for j in start..sorted.len() {
        let next = prod * sorted[j];
        if best.as_ref().is_some_and(|(b, _)| &next >= b) {
            continue;
        }
        if !exceeds(&(prod * &suffix[j]))? {
            // the remaining primes are smaller still
            break;
        }
        stack.push(sorted[j]);
        search(sorted, suffix, j + 1, &next, stack, best, exceeds)?;
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_from_i64s, quadratic_field};

    #[test]
    fn splitting_types() {
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        let t = splitting_type(&k, 5).unwrap();
        assert_eq!(t.pairs, vec![(1, 1), (1, 1)]);
        assert_eq!(t.roots, vec![2, 3]);
        assert_eq!(splitting_type(&k, 2).unwrap().pairs, vec![(2, 1)]);
        assert_eq!(splitting_type(&k, 3).unwrap().pairs, vec![(1, 2)]);
        let k = field_from_i64s(&[41, 1, 1]).unwrap();
        assert_eq!(splitting_type(&k, 41).unwrap().pairs, vec![(1, 1), (1, 1)]);
        assert!(has_degree_one_place(&k, 41));
        assert!(has_degree_one_place(&k, 163));
        assert!(!has_degree_one_place(&k, 3));
        assert!(splitting_type(&k, 4).is_err());
    }

    #[test]
    fn non_maximal_quadratic_polynomial() {
        // x^2 + 7: 2 divides the polynomial discriminant but splits in Q(√-7)
        let k = field_from_i64s(&[7, 0, 1]).unwrap();
        let t = splitting_type(&k, 2).unwrap();
        assert_eq!(t.pairs, vec![(1, 1), (1, 1)]);
        assert_eq!(t.method, SplitMethod::ExactQuadratic);
    }

    #[test]
    fn cubic() {
        let k = field_from_i64s(&[-1, -1, 0, 1]).unwrap();
        assert_eq!(splitting_type(&k, 23).unwrap().method, SplitMethod::Unsupported);
        assert!(!has_degree_one_place(&k, 23));
        for p in primes_up_to(200) {
            let t = splitting_type(&k, p).unwrap();
            if t.method == SplitMethod::Generic {
                assert_eq!(t.degree_sum(), 3);
            }
        }
    }

    #[test]
    fn prime_sets() {
        let k = field_from_i64s(&[41, 1, 1]).unwrap();
        let s = find_prime_set(&k, 100).unwrap();
        assert_eq!(s.primes(), vec![41]);
        assert!((s.threshold.value() - 8.127_817_16).abs() < 1e-7);
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        assert_eq!(find_prime_set(&k, 100).unwrap().primes(), vec![2]);
        let k = quadratic_field(-163).unwrap();
        assert!(matches!(find_prime_set(&k, 5), Err(Error::NotFound(_))));
    }

    #[test]
    fn subset_products() {
        let eleven = |n: &BigInt| Ok(n > &BigInt::from(11));
        let s = min_product_subset(&[2, 3, 5, 7, 11, 13], &eleven).unwrap();
        assert_eq!(s, Some(vec![13]));
        let s = min_product_subset(&[2, 3, 5, 7], &eleven).unwrap();
        assert_eq!(s, Some(vec![2, 7]));
        let s = min_product_subset(&[2, 3], &eleven).unwrap();
        assert_eq!(s, None);
    }
}
