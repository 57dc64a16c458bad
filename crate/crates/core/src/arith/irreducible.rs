//! Irreducibility certificates for integer polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::factor_degrees;
use super::primes::primes_up_to;
use super::resultant::poly_discriminant;
use crate::{IntPoly, RatPoly};

/// Evidence behind a proof of irreducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityProof {
    /// Linear polynomial.
    Linear,
    /// Irreducible modulo `p`, with `p` not dividing the leading
    /// coefficient or the discriminant.
    ModP(u64),
    /// Factor-degree patterns modulo these primes admit no common proper
    /// factor degree.
    DegreePatterns(Vec<u64>),
    /// Degree 2 or 3 without rational roots.
    NoRationalRoot,
    /// Degree 4 without rational roots and without quadratic factors within
    /// the coefficient bound.
    NoQuadraticFactor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    ProvedIrreducible(IrreducibilityProof),
    /// Contains an exact proper factor.
    ProvedReducible(IntPoly),
    Unknown,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::ProvedIrreducible(_))
    }
}

const MOD_P_PRIMES: u64 = 600;
const DIVISOR_LIMIT: u64 = 1_000_000;
const QUADRATIC_SEARCH_LIMIT: u64 = 50_000_000;

/// Decide irreducibility over the rationals where a certificate is cheap.
pub fn irreducibility_check(f: &IntPoly) -> Irreducibility {
    let Some(d) = f.degree() else {
        return Irreducibility::Unknown;
    };
    if d == 0 {
        return Irreducibility::Unknown;
    }
    let f = f.primitive_part();
    if d == 1 {
        return Irreducibility::ProvedIrreducible(IrreducibilityProof::Linear);
    }
    let disc = poly_discriminant(&f).expect("degree ≥ 1");
    if disc.is_zero() {
        // repeated factor: gcd(f, f') is a proper factor
        let g = f.to_rational().gcd(&f.derivative().to_rational());
        return Irreducibility::ProvedReducible(g.to_primitive_integer());
    }
    if let Some(factor) = rational_root_factor(&f) {
        return Irreducibility::ProvedReducible(factor);
    }
    if d <= 3 {
        if rational_root_search_complete(&f) {
            return Irreducibility::ProvedIrreducible(IrreducibilityProof::NoRationalRoot);
        }
    }
    if let Some(proof) = mod_p_certificate(&f, &disc) {
        return Irreducibility::ProvedIrreducible(proof);
    }
    if d == 4 && rational_root_search_complete(&f) {
        match quadratic_factor(&f) {
            Some(Some(q)) => return Irreducibility::ProvedReducible(q),
            Some(None) => return Irreducibility::ProvedIrreducible(IrreducibilityProof::NoQuadraticFactor),
            None => {}
        }
    }
    Irreducibility::Unknown
}

fn mod_p_certificate(f: &IntPoly, disc: &BigInt) -> Option<IrreducibilityProof> {
    let d = f.deg();
    let lc = f.lc();
    // proper factor degrees still possible
    let mut possible: BTreeSet<usize> = (1..d).collect();
    let mut used = Vec::new();
    for p in primes_up_to(MOD_P_PRIMES) {
        let pb = BigInt::from(p);
        if (&lc % &pb).is_zero() || (disc % &pb).is_zero() {
            continue;
        }
        let degs = factor_degrees(f, p).ok()?;
        if degs.len() == 1 {
            return Some(IrreducibilityProof::ModP(p));
        }
        let sums = subset_sums(&degs);
        let before = possible.len();
        possible.retain(|k| sums.contains(k));
        if possible.len() < before {
            used.push(p);
        }
        if possible.is_empty() {
            return Some(IrreducibilityProof::DegreePatterns(used));
        }
    }
    None
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0usize]);
    for &d in degs {
        let next: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(next);
    }
    s
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT * DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
        if i > DIVISOR_LIMIT {
            return None;
        }
    }
    out.sort();
    Some(out)
}

fn rational_root_search_complete(f: &IntPoly) -> bool {
    f.coeff(0).is_zero() || (divisors(&f.coeff(0)).is_some() && divisors(&f.lc()).is_some())
}

/// A linear factor `b·x - a` from the rational root test.
fn rational_root_factor(f: &IntPoly) -> Option<IntPoly> {
    if f.coeff(0).is_zero() {
        return Some(IntPoly::from_i64s(&[0, 1]));
    }
    let nums = divisors(&f.coeff(0))?;
    let dens = divisors(&f.lc())?;
    let fr: RatPoly = f.to_rational();
    for b in &dens {
        for a in &nums {
            if !a.gcd(b).is_one() {
                continue;
            }
            for a in [a.clone(), -a.clone()] {
                let x = num_rational::BigRational::new(a.clone(), b.clone());
                if fr.eval(&x).is_zero() {
                    return Some(IntPoly::new(vec![-a, b.clone()]));
                }
            }
        }
    }
    None
}

/// Search for a quadratic factor of a quartic.
///
/// `Some(Some(q))`: factor found; `Some(None)`: proved none exists;
/// `None`: search too large.
fn quadratic_factor(f: &IntPoly) -> Option<Option<IntPoly>> {
    // a factor g has M(g) ≤ M(f) ≤ ‖f‖₂, so |g_1| ≤ 2‖f‖₂, |g_0|, |g_2| ≤ ‖f‖₂
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = norm2.sqrt() + BigInt::one();
    let lead = divisors(&f.lc())?;
    let consts = divisors(&f.coeff(0))?;
    let span = (&bound * BigInt::from(4) + BigInt::one()).to_u64()?;
    let work = (lead.len() as u64)
        .checked_mul(consts.len() as u64 * 2)?
        .checked_mul(span)?;
    if work > QUADRATIC_SEARCH_LIMIT {
        return None;
    }
    let b2 = &bound * BigInt::from(2);
    for l in &lead {
        if l > &bound {
            continue;
        }
        for c0 in &consts {
            if c0 > &bound {
                continue;
            }
            for c0 in [c0.clone(), -c0.clone()] {
                let mut c1 = -b2.clone();
                while c1 <= b2 {
                    let g = IntPoly::new(vec![c0.clone(), c1.clone(), l.clone()]);
                    if f.exact_div(&g).is_some() {
                        return Some(Some(g));
                    }
                    c1 += 1;
                }
            }
        }
    }
    Some(None)
}
