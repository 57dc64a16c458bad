//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use smallgen::adelic::{ideal_inverse, ideal_product, prime_ideal, IdealLattice};
use smallgen::field::{Field, FieldElement};
use smallgen::splitting::splitting_type;

/// Squarefree `m` for the quadratic test fields `Q[x]/(x² - m)`.
pub const QUADRATIC_TEST_FIELDS: &[i64] = &[-1, -2, -3, -5, -7, -11, -163, 2, 3, 5, 6, 7, 13, 17];

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Sign of `a + b√m` for `m > 0` not a square.
pub fn sign_surd(a: &BigRational, b: &BigRational, m: i64) -> Ordering {
    let sa = a.cmp(&BigRational::zero());
    let sb = b.cmp(&BigRational::zero());
    if sa == sb || sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(b * b * BigRational::from_integer(m.into()))) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Exact box membership for `x0 + x1√m`, places ordered as the roots of
/// `x² - m` ascending.
pub fn in_quadratic_box(m: i64, x: &[BigRational], radii: &[BigRational]) -> bool {
    if m < 0 {
        let n = &x[0] * &x[0] + &x[1] * &x[1] * BigRational::from_integer((-m).into());
        return n < &radii[0] * &radii[0];
    }
    [(0, -1), (1, 1)].iter().all(|&(v, s)| {
        let b = &x[1] * BigRational::from_integer(s.into());
        let r = &radii[v];
        sign_surd(&(&x[0] - r), &b, m) == Ordering::Less && sign_surd(&(&x[0] + r), &b, m) == Ordering::Greater
    })
}

/// All nonzero points of `ideal` in the box, by a scan over a coordinate
/// range that contains every candidate. Sorted by power-basis coordinates.
pub fn naive_box_scan(m: i64, ideal: &IdealLattice, radii: &[BigRational]) -> Vec<Vec<BigRational>> {
    let r: Vec<f64> = radii.iter().map(|x| x.to_f64().unwrap()).collect();
    let am = (m.abs() as f64).sqrt();
    let (x0, x1) = if m < 0 {
        (r[0], r[0] / am)
    } else {
        ((r[0] + r[1]) / 2.0, (r[0] + r[1]) / (2.0 * am))
    };
    let inv = ideal.basis().inverse().expect("full rank");
    let f = |i: usize, j: usize| inv.row(i)[j].to_f64().unwrap().abs();
    let na = (x0 * f(0, 0) + x1 * f(1, 0)).ceil() as i64 + 1;
    let nb = (x0 * f(0, 1) + x1 * f(1, 1)).ceil() as i64 + 1;
    let b = ideal.basis();
    let mut out = Vec::new();
    for a in -na..=na {
        for c in -nb..=nb {
            if a == 0 && c == 0 {
                continue;
            }
            let (a, c) = (BigRational::from_integer(a.into()), BigRational::from_integer(c.into()));
            let x: Vec<BigRational> = (0..2).map(|j| &a * &b.row(0)[j] + &c * &b.row(1)[j]).collect();
            if in_quadratic_box(m, &x, radii) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

/// The order, and for the first two primes with a degree-one place the
/// prime ideal, its inverse, and the product of the two inverses.
pub fn test_ideals(k: &Field) -> Vec<IdealLattice> {
    let mut out = vec![IdealLattice::unit(k)];
    let mut inverses = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        if inverses.len() == 2 {
            break;
        }
        let t = splitting_type(k, p).unwrap();
        if let Some(&root) = t.roots.first() {
            let pi = prime_ideal(k, p, root).unwrap();
            let inv = ideal_inverse(&pi).unwrap();
            out.push(pi);
            out.push(inv.clone());
            inverses.push(inv);
        }
    }
    if inverses.len() == 2 {
        out.push(ideal_product(&inverses[0], &inverses[1]).unwrap());
    }
    // keep point counts at desk scale
    let limit = BigRational::from_integer(60.into());
    out.retain(|i| i.norm() <= &limit && i.norm().recip() <= limit);
    out
}

/// Radii vectors with entries at most 4, one per archimedean place.
pub fn test_radii(m: i64) -> Vec<Vec<BigRational>> {
    let values = [q(1, 2), q(1, 1), q(3, 2), q(2, 1), q(283, 100), q(7, 2), q(4, 1)];
    if m < 0 {
        values.iter().map(|r| vec![r.clone()]).collect()
    } else {
        let pick = [q(1, 2), q(1, 1), q(2, 1), q(283, 100), q(4, 1)];
        pick.iter()
            .flat_map(|a| pick.iter().map(move |b| vec![a.clone(), b.clone()]))
            .collect()
    }
}

/// Least product among subsets of `primes` exceeding `threshold`, by
/// listing every subset.
pub fn brute_force_min_subset(primes: &[u64], threshold: &BigInt) -> Option<Vec<u64>> {
    let n = primes.len();
    let mut best: Option<(BigInt, Vec<u64>)> = None;
    for mask in 1u32..(1 << n) {
        let set: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
        let prod: BigInt = set.iter().map(|&p| BigInt::from(p)).product();
        if &prod > threshold && best.as_ref().is_none_or(|(b, _)| &prod < b) {
            best = Some((prod, set));
        }
    }
    best.map(|(_, mut s)| {
        s.sort_unstable();
        s
    })
}

/// A random element with small rational coordinates.
pub fn random_element(k: &Field, rng: &mut impl Rng, nonzero: bool) -> FieldElement {
    loop {
        let coords: Vec<BigRational> = (0..k.degree())
            .map(|_| q(rng.gen_range(-30..=30), rng.gen_range(1..=12)))
            .collect();
        let a = FieldElement::new(k, coords).unwrap();
        if !nonzero || !a.is_zero() {
            return a;
        }
    }
}

pub fn abs_f64(x: &BigRational) -> f64 {
    x.abs().to_f64().unwrap()
}
