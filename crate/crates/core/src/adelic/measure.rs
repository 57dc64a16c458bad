use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Signed;

use super::IdealLattice;
use crate::arith::Interval;
use crate::field::{Field, NumberField};
use crate::{Error, Result, DEFAULT_PRECISION, MAX_PRECISION};

/// `(∏_v |γ_v|_v)^d / N(I)`: the `d`-th power of the product of all
/// normalized radii, archimedean and finite.
fn radii_pow_d(k: &NumberField, gamma_abs: &[Interval], ideal_norm: &BigRational, prec: u32) -> Result<Interval> {
    if gamma_abs.len() != k.place_count() {
        return Err(Error::domain(format!(
            "expected {} archimedean radii, got {}",
            k.place_count(),
            gamma_abs.len()
        )));
    }
    if gamma_abs.iter().any(|g| !g.is_positive()) || !ideal_norm.is_positive() {
        return Err(Error::domain("radii and ideal norm must be positive"));
    }
    let d = k.degree() as u32;
    let prod = gamma_abs
        .iter()
        .fold(Interval::from_integer(1, prec), |acc, g| &acc * g);
    prod.powi(d).div(&Interval::point(ideal_norm.clone(), prec))
}

/// Haar measure `2^d c^-d (∏_v |γ_v|_v)^d` of the box with archimedean
/// normalized radii `gamma_abs` and finite part the fractional ideal of
/// norm `ideal_norm`.
pub fn box_measure(k: &NumberField, gamma_abs: &[Interval], ideal_norm: &BigRational) -> Result<Interval> {
    let prec = DEFAULT_PRECISION;
    let d = k.degree() as u32;
    let two_d = Interval::from_integer(1u64 << d, prec);
    let r = radii_pow_d(k, gamma_abs, ideal_norm, prec)?;
    (&two_d * &r).div(&k.order_constant_pow_d(prec))
}

/// Certified `c < ∏_v |γ_v|_v`, i.e. the box contains a nonzero point by
/// Minkowski's theorem.
pub fn minkowski_guarantee(k: &NumberField, gamma_abs: &[Interval], ideal_norm: &BigRational) -> Result<bool> {
    let mut prec = DEFAULT_PRECISION;
    loop {
        let r = radii_pow_d(k, gamma_abs, ideal_norm, prec)?;
        match k.order_constant_pow_d(prec).compare(&r) {
            Some(Ordering::Less) => return Ok(true),
            Some(_) => return Ok(false),
            None if prec >= MAX_PRECISION => {
                return Err(Error::Precision {
                    bits: MAX_PRECISION,
                    context: "Minkowski condition".into(),
                })
            }
            None => prec *= 2,
        }
    }
}

/// The archimedean radii and finite ideal of an adelic box, with its
/// measure.
#[derive(Clone, Debug)]
pub struct BoxSpec {
    pub field: Field,
    pub gamma_abs: Vec<Interval>,
    pub ideal: IdealLattice,
    pub measure: Interval,
}

impl BoxSpec {
    pub fn new(ideal: IdealLattice, gamma_abs: Vec<Interval>) -> Result<Self> {
        let field = ideal.field().clone();
        let measure = box_measure(&field, &gamma_abs, ideal.norm())?;
        Ok(BoxSpec {
            field,
            gamma_abs,
            ideal,
            measure,
        })
    }

    /// Unnormalized radii `‖γ_v‖ = |γ_v|_v^(d/d_v)`.
    pub fn abs_radii(&self) -> Vec<Interval> {
        let d = self.field.degree() as u32;
        self.gamma_abs
            .iter()
            .enumerate()
            .map(|(v, g)| {
                let dv = self.field.local_degree(v);
                g.pow_ratio(d, dv).expect("positive radius")
            })
            .collect()
    }

    pub fn guaranteed(&self) -> Result<bool> {
        minkowski_guarantee(&self.field, &self.gamma_abs, self.ideal.norm())
    }
}
