//! Empirical checks around the Chebotarev density theorem for the trivial
//! class: primes splitting completely, `Li(x)`, and the conditional error
//! term, plus Frobenius pattern censuses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Float, Signed, ToPrimitive};

use super::{splitting_type, SplitMethod};
use crate::arith::modp::factor_degrees;
use crate::arith::primes::primes_up_to;
use crate::field::NumberField;
use crate::heights::ln_bigint;
use crate::{Error, Result};

fn simpson<F: Float>(a: F, b: F, fa: F, fm: F, fb: F) -> F {
    (b - a) / F::from(6).unwrap() * (fa + F::from(4).unwrap() * fm + fb)
}

fn adaptive<F: Float>(f: &impl Fn(F) -> F, a: F, b: F, fa: F, fm: F, fb: F, whole: F, tol: F, depth: u32) -> F {
    let two = F::from(2).unwrap();
    let m = (a + b) / two;
    let lm = (a + m) / two;
    let rm = (m + b) / two;
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= F::from(15).unwrap() * tol {
        return left + right + delta / F::from(15).unwrap();
    }
    adaptive(f, a, m, fa, flm, fm, left, tol / two, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, tol / two, depth - 1)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn integrate<F: Float>(f: impl Fn(F) -> F, a: F, b: F, tol: F) -> F {
    let m = (a + b) / F::from(2).unwrap();
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `Li(x) = ∫_2^x dt / log t`.
pub fn logarithmic_integral(x: f64) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::domain("Li(x) needs x ≥ 2"));
    }
    if x == 2.0 {
        return Ok(0.0);
    }
    // split at powers of two so that each piece is smooth on its own scale
    let mut total = 0.0;
    let mut a = 2.0;
    while a < x {
        let b = (2.0 * a).min(x);
        total += integrate(|t: f64| 1.0 / t.ln(), a, b, 1e-12);
        a = b;
    }
    Ok(total)
}

/// `c1 x^(1/2) (log|Δ| + n log x)`.
pub fn lo_bound(log_abs_disc: f64, degree: u32, x: f64, c1: f64) -> Result<f64> {
    if !(c1 > 0.0) {
        return Err(Error::domain("c1 must be positive"));
    }
    if !(x >= 2.0) {
        return Err(Error::domain("x must be at least 2"));
    }
    Ok(c1 * x.sqrt() * (log_abs_disc + degree as f64 * x.ln()))
}

fn splits_completely(k: &NumberField, p: u64) -> Result<bool> {
    if (k.poly_disc() % BigInt::from(p)) == BigInt::from(0) {
        return Ok(false);
    }
    let t = splitting_type(k, p)?;
    Ok(t.method != SplitMethod::Unsupported && t.splits_completely(k.degree()))
}

/// Primes `p ≤ x`, `p ∤ disc(f)`, splitting completely in `k`.
pub fn count_split_primes(k: &NumberField, x: u64) -> Result<u64> {
    let mut n = 0;
    for p in primes_up_to(x) {
        if splits_completely(k, p)? {
            n += 1;
        }
    }
    Ok(n)
}

/// Factorization patterns of the defining polynomial mod `p` for the
/// unramified primes up to `x`.
#[derive(Clone, Debug)]
pub struct Census {
    pub x: u64,
    pub counts: BTreeMap<Vec<usize>, u64>,
    pub total: u64,
    pub li: f64,
}

impl Census {
    pub fn proportion(&self, pattern: &[usize]) -> f64 {
        let c = self.counts.get(pattern).copied().unwrap_or(0);
        c as f64 / self.total.max(1) as f64
    }
}

pub fn frobenius_census(k: &NumberField, x: u64) -> Result<Census> {
    let mut counts = BTreeMap::new();
    let mut total = 0;
    for p in primes_up_to(x) {
        if (k.poly_disc() % BigInt::from(p)) == BigInt::from(0) {
            continue;
        }
        *counts.entry(factor_degrees(k.defining_poly(), p)?).or_insert(0) += 1;
        total += 1;
    }
    Ok(Census {
        x,
        counts,
        total,
        li: logarithmic_integral(x.max(2) as f64)?,
    })
}

/// Diagnostics for the statement that a prime splitting completely lies in
/// `(|Δ|^(1/2), 2|Δ|^(1/2)]` once `|Δ| ≥ 15^20 c1^20 (d!)^60`.
#[derive(Clone, Debug)]
pub struct ChebReport {
    pub c1: f64,
    pub degree: usize,
    pub abs_disc: String,
    /// `15^20 c1^20 (d!)^60`.
    pub cheb20_lhs: f64,
    pub hypothesis_met: bool,
    pub window: (f64, f64),
    pub window_primes: Vec<u64>,
    pub window_count: u64,
    /// `2 c1 (d!)^2 x^(1/2) (log|Δ| + log x)` at `x = 2|Δ|^(1/2)`.
    pub cheb23_rhs: f64,
}

pub fn lemma51_report(k: &NumberField, c1: f64) -> Result<ChebReport> {
    let d = k.degree();
    if d < 2 {
        return Err(Error::domain("degree must be at least 2"));
    }
    if !(c1 > 0.0) {
        return Err(Error::domain("c1 must be positive"));
    }
    let disc = k.field_disc().abs();
    let log_disc = ln_bigint(&disc);
    let log_fact: f64 = (2..=d).map(|i| (i as f64).ln()).sum();
    let log_lhs = 20.0 * 15f64.ln() + 20.0 * c1.ln() + 60.0 * log_fact;
    let hypothesis_met = log_disc >= log_lhs;
    let root = (log_disc / 2.0).exp();
    // p in the window iff |Δ| < p^2 ≤ 4|Δ|, decided exactly
    let upper = (&disc * 4u32).sqrt();
    let upper = upper
        .to_u64()
        .ok_or_else(|| Error::Cap("discriminant too large for a prime sieve".into()))?;
    let mut window_primes = Vec::new();
    for p in primes_up_to(upper) {
        let p2 = BigInt::from(p) * p;
        if p2 > disc && splits_completely(k, p)? {
            window_primes.push(p);
        }
    }
    let x = 2.0 * root;
    Ok(ChebReport {
        c1,
        degree: d,
        abs_disc: disc.to_string(),
        cheb20_lhs: log_lhs.exp(),
        hypothesis_met,
        window: (root, x),
        window_count: window_primes.len() as u64,
        window_primes,
        cheb23_rhs: 2.0 * c1 * (2.0 * log_fact).exp() * x.sqrt() * (log_disc + x.ln()),
    })
}
