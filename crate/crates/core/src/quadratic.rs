//! Heights of imaginary quadratic generators and the sharpness check.
//!
//! A root of an irreducible `ax² + bx + c` with `b² - 4ac = de² < 0`
//! has height `max(a, c)^(1/2)`, so the least height of a generator of
//! `Q(√d)` is found by enumerating such triples by `max(a, c)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;

use crate::arith::primes::is_squarefree_int;
use crate::field::{quadratic_field, FieldElement};
use crate::splitting::find_prime_set;
use crate::{Error, IntPoly, Result};

/// `ax² + bx + c` with `b² - 4ac = de²`, `d` squarefree and negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPoly {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
    pub d: i64,
}

fn check_d(d: i64) -> Result<()> {
    if d > -1 || !is_squarefree_int(&BigInt::from(d)) {
        return Err(Error::domain(format!("{d} is not a squarefree negative integer")));
    }
    Ok(())
}

impl QuadPoly {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<Self> {
        check_d(d)?;
        let q = QuadPoly { a, b, c, e, d };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let QuadPoly { a, b, c, e, d } = *self;
        if a < 1 || c < 1 || e == 0 {
            return Err(Error::domain("need a ≥ 1, c ≥ 1 and e ≠ 0"));
        }
        if a.gcd(&b).gcd(&c) != 1 {
            return Err(Error::domain("coefficients are not coprime"));
        }
        let lhs = b as i128 * b as i128 - 4 * a as i128 * c as i128;
        if lhs != d as i128 * e as i128 * e as i128 {
            return Err(Error::domain(format!("b² - 4ac = {lhs} ≠ d·e² = {}", d as i128 * (e as i128).pow(2))));
        }
        check_d(d)
    }

    pub fn poly(&self) -> IntPoly {
        IntPoly::from_i64s(&[self.c, self.b, self.a])
    }

    /// The root `(-b + e√d) / 2a` in `Q[x]/(x² - d)`.
    pub fn root_element(&self) -> Result<FieldElement> {
        let k = quadratic_field(self.d)?;
        let den = BigInt::from(2 * self.a);
        FieldElement::new(
            &k,
            vec![
                BigRational::new((-self.b).into(), den.clone()),
                BigRational::new(self.e.into(), den),
            ],
        )
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// Squared height `max(a, c)` of a root.
pub fn quad_root_height(q: &QuadPoly) -> Result<i64> {
    q.validate()?;
    Ok(q.a.max(q.c))
}

/// `e > 0` with `b² - 4ac = de²`, if any.
fn cofactor(a: i64, b: i64, c: i64, d: i64) -> Option<i64> {
    let disc = b as i128 * b as i128 - 4 * a as i128 * c as i128;
    if disc >= 0 || disc % d as i128 != 0 {
        return None;
    }
    let e2 = disc / d as i128;
    let e = e2.sqrt();
    (e * e == e2).then_some(e as i64)
}

/// Generators with `max(a, c) = m`, ordered by `a`, `c`, `|b|`, then
/// positive `b` first.
fn shell(d: i64, m: i64) -> Vec<QuadPoly> {
    let mut out = Vec::new();
    for a in 1..=m {
        let cs: Vec<i64> = if a == m { (1..=m).collect() } else { vec![m] };
        for c in cs {
            let bmax = (4 * a as i128 * c as i128).sqrt() as i64;
            for babs in 0..=bmax {
                let signs: &[i64] = if babs == 0 { &[1] } else { &[1, -1] };
                for &sign in signs {
                    let b = sign * babs;
                    if a.gcd(&b).gcd(&c) != 1 {
                        continue;
                    }
                    if let Some(e) = cofactor(a, b, c, d) {
                        out.push(QuadPoly { a, b, c, e, d });
                    }
                }
            }
        }
    }
    out
}

/// All generators with `max(a, c) ≤ bound`, ordered by `max(a, c)` and
/// then as in each shell.
pub fn enumerate_quad_generators(d: i64, bound: i64) -> Result<Vec<QuadPoly>> {
    check_d(d)?;
    if bound < 1 {
        return Err(Error::domain("bound must be at least 1"));
    }
    Ok((1..=bound).flat_map(|m| shell(d, m)).collect())
}

/// Least squared height of a generator of `Q(√d)`, with the first witness.
pub fn minimal_quad_generator_height(d: i64) -> Result<(i64, QuadPoly)> {
    check_d(d)?;
    // x² - d, or x² - x + (1 - d)/4, always qualifies
    let b0 = if d.rem_euclid(4) == 1 { (1 - d) / 4 } else { -d };
    for m in 1..=b0 {
        if let Some(q) = shell(d, m).into_iter().next() {
            return Ok((m, q));
        }
    }
    Err(Error::internal("standard generator missing from the enumeration"))
}

#[derive(Clone, Debug)]
pub struct SharpnessReport {
    pub d: i64,
    pub primes: Vec<u64>,
    /// `∏ p`, the square of the bound `(∏ p)^(1/2)`.
    pub bound_square: BigInt,
    pub minimal_square: i64,
    pub witness: QuadPoly,
    pub sharp: bool,
}

/// Compare the `p`-adic bound with the true least height.
pub fn sharpness_check(d: i64, prime_bound: u64) -> Result<SharpnessReport> {
    check_d(d)?;
    let k = quadratic_field(d)?;
    let set = find_prime_set(&k, prime_bound)?;
    let (minimal_square, witness) = minimal_quad_generator_height(d)?;
    Ok(SharpnessReport {
        d,
        primes: set.primes(),
        sharp: set.product == BigInt::from(minimal_square),
        bound_square: set.product,
        minimal_square,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::weil_height;

    #[test]
    fn validation() {
        assert_eq!(quad_root_height(&QuadPoly::new(1, 1, 41, -163, 1).unwrap()).unwrap(), 41);
        assert_eq!(quad_root_height(&QuadPoly::new(1, 0, 1, -1, 2).unwrap()).unwrap(), 1);
        assert_eq!(quad_root_height(&QuadPoly::new(2, -2, 1, -1, 2).unwrap()).unwrap(), 2);
        assert!(QuadPoly::new(2, 0, 2, -1, 4).is_err());
        assert!(QuadPoly::new(1, 1, 41, -163, 2).is_err());
        assert!(QuadPoly::new(1, 0, 4, -4, 2).is_err());
    }

    #[test]
    fn enumeration() {
        let all = enumerate_quad_generators(-163, 41).unwrap();
        assert!(all.contains(&QuadPoly::new(1, 1, 41, -163, 1).unwrap()));
        assert!(all.contains(&QuadPoly::new(1, -1, 41, -163, 1).unwrap()));
        assert!(enumerate_quad_generators(-163, 40).unwrap().is_empty());
        assert_eq!(enumerate_quad_generators(-1, 1).unwrap(), vec![QuadPoly::new(1, 0, 1, -1, 2).unwrap()]);
    }

    #[test]
    fn minima() {
        let (m, w) = minimal_quad_generator_height(-163).unwrap();
        assert_eq!((m, w.poly()), (41, IntPoly::from_i64s(&[41, 1, 1])));
        assert_eq!(minimal_quad_generator_height(-1).unwrap().0, 1);
        let (m, w) = minimal_quad_generator_height(-7).unwrap();
        assert_eq!(m, 2);
        assert_eq!((w.a, w.b.abs(), w.c), (1, 1, 2));
        assert_eq!(minimal_quad_generator_height(-3).unwrap().0, 1);
    }

    #[test]
    fn sharpness() {
        let r = sharpness_check(-163, 100).unwrap();
        assert!(r.sharp);
        assert_eq!(r.bound_square, BigInt::from(41));
        let r = sharpness_check(-1, 100).unwrap();
        assert!(!r.sharp);
        assert_eq!((r.bound_square, r.minimal_square), (BigInt::from(2), 1));
    }

    #[test]
    fn lemma_against_mahler() {
        for q in enumerate_quad_generators(-7, 8).unwrap() {
            let h = weil_height(&q.root_element().unwrap()).unwrap();
            assert_eq!(h.exact_square, Some(BigInt::from(q.a.max(q.c))));
            assert_eq!(q.root_element().unwrap().min_poly(), q.poly());
        }
    }
}
