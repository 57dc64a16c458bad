use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::enumerate::{compare_abs, enumerate_box, in_box};
use super::{ideal_inverse, ideal_product, place_ideal, BoxSpec, IdealLattice};
use crate::arith::{lattice, rational_from_f64, Interval};
use crate::field::{Field, FieldElement};
use crate::heights::{height_embedding_route, weil_height, HeightValue};
use crate::splitting::{exceeds_threshold, DegreeOnePlace, PrimeSet};
use crate::{Error, IntPoly, Result, DEFAULT_PRECISION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremTag {
    /// Archimedean search around a real place.
    Thm1,
    /// `p`-adic search with a qualifying prime set.
    Thm31,
}

/// One archimedean box condition `‖α‖_v < R_v`.
#[derive(Clone, Debug)]
pub struct ArchCheck {
    pub place: usize,
    pub local_degree: u32,
    pub radius: BigRational,
    pub value: Interval,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub enum PlaceRecord {
    Real {
        w: usize,
        eps: f64,
        arch: Vec<ArchCheck>,
        /// `‖α‖_w > 1`.
        exceeds_one_at_w: bool,
        /// `H(α) ≤ c`; `None` when the comparison is not conclusive.
        within_field_constant: Option<bool>,
    },
    Padic {
        arch: Vec<ArchCheck>,
        designated: Vec<DegreeOnePlace>,
        /// `[O : D]` for the denominator ideal `D = {x ∈ O : xα ∈ O}`.
        denominator_index: BigInt,
        /// Designated places where `|α|_w = p^(1/d)`; `D` is the product of
        /// their prime ideals.
        equality_places: Vec<DegreeOnePlace>,
    },
}

#[derive(Clone, Debug)]
pub struct SearchStats {
    pub points_in_box: usize,
    pub ideal_norm: BigRational,
    pub measure: Interval,
    pub minkowski_guarantee: bool,
}

/// A generator together with everything needed to re-check it.
#[derive(Clone, Debug)]
pub struct GeneratorCertificate {
    pub theorem: TheoremTag,
    pub alpha: FieldElement,
    pub min_poly: IntPoly,
    pub height: HeightValue,
    pub height_by_places: Interval,
    /// `R_w = ρ^d` for the archimedean search, `∏ p` for the `p`-adic one.
    pub bound_pow_d: BigRational,
    pub bound: Interval,
    pub place_record: PlaceRecord,
    pub search: SearchStats,
}

impl GeneratorCertificate {
    pub fn field(&self) -> &Field {
        self.alpha.field()
    }
}

fn arch_checks(alpha: &FieldElement, radii: &[BigRational]) -> Result<Vec<ArchCheck>> {
    let emb = alpha.embed()?;
    radii
        .iter()
        .enumerate()
        .map(|(v, r)| {
            Ok(ArchCheck {
                place: v,
                local_degree: emb[v].local_degree,
                radius: r.clone(),
                value: emb[v].abs.clone(),
                passed: compare_abs(alpha, v, r)? == Ordering::Less,
            })
        })
        .collect()
}

fn nth_root_rational(x: &BigRational, d: u32) -> Interval {
    Interval::point(x.clone(), DEFAULT_PRECISION)
        .nth_root(d)
        .expect("positive")
}

/// Minimal-height generator in the box around the real place `w`, radius
/// `ρ^d` at `w` and `1` elsewhere, `ρ = c (1 + eps)`.
pub fn find_generator_real(k: &Field, w: usize, eps: f64, cap: usize) -> Result<GeneratorCertificate> {
    let d = k.degree();
    let (r, s) = k.signature();
    if d < 2 {
        return Err(Error::domain("degree-one fields are generated by 1"));
    }
    if w >= r {
        return Err(Error::domain(format!("place {w} is not a real place (r = {r})")));
    }
    let eps_q = rational_from_f64(eps)
        .filter(|e| e > &BigRational::zero())
        .ok_or_else(|| Error::domain("eps must be positive and finite"))?;
    let prec = DEFAULT_PRECISION;
    let inflate = Interval::point(BigRational::one() + &eps_q, prec).powi(d as u32);
    let rho_d = (&k.order_constant_pow_d(prec) * &inflate).hi().clone();
    let mut radii = vec![BigRational::one(); r + s];
    radii[w] = rho_d.clone();

    let order = IdealLattice::unit(k);
    let points = enumerate_box(&order, &radii, cap)?;
    if points.is_empty() {
        return Err(Error::internal("empty box despite the volume condition"));
    }
    let count = points.len();
    let chosen = points
        .into_iter()
        .find(|p| p.alpha.min_poly().deg() == d)
        .ok_or_else(|| Error::NotFound("no point of full degree in the box".into()))?;

    let bound = nth_root_rational(&rho_d, d as u32);
    let mut gamma = vec![Interval::from_integer(1, prec); r + s];
    gamma[w] = bound.clone();
    let boxspec = BoxSpec::new(order, gamma)?;
    let alpha = chosen.alpha;
    let arch = arch_checks(&alpha, &radii)?;
    let exceeds_one_at_w = compare_abs(&alpha, w, &BigRational::one())? == Ordering::Greater;
    let within_field_constant = chosen.height.value.compare(&k.field_constant(prec)).map(|o| o != Ordering::Greater);
    let cert = GeneratorCertificate {
        theorem: TheoremTag::Thm1,
        min_poly: alpha.min_poly(),
        height_by_places: height_embedding_route(&alpha)?,
        height: chosen.height,
        bound_pow_d: rho_d,
        bound,
        place_record: PlaceRecord::Real {
            w,
            eps,
            arch,
            exceeds_one_at_w,
            within_field_constant,
        },
        search: SearchStats {
            points_in_box: count,
            ideal_norm: BigRational::one(),
            measure: boxspec.measure.clone(),
            minkowski_guarantee: boxspec.guaranteed()?,
        },
        alpha,
    };
    if !exceeds_one_at_w {
        return Err(Error::internal("integral point with ‖α‖_w ≤ 1"));
    }
    if !verify_certificate(&cert) {
        return Err(Error::internal("certificate failed its own verification"));
    }
    Ok(cert)
}

/// `∏ 𝔭⁻¹` over the designated places.
pub fn padic_ideal(k: &Field, places: &[DegreeOnePlace]) -> Result<IdealLattice> {
    let mut acc = IdealLattice::unit(k);
    for pl in places {
        acc = ideal_product(&acc, &ideal_inverse(&place_ideal(k, pl)?)?)?;
    }
    Ok(acc)
}

/// The designated places whose prime ideals make up the denominator ideal
/// of `α`, if it is such a product.
fn denominator_places(alpha: &FieldElement, places: &[DegreeOnePlace]) -> Result<Option<(BigInt, Vec<DegreeOnePlace>)>> {
    let k = alpha.field();
    let den = alpha.denominator_ideal()?;
    let index = lattice::index(k.order_basis(), &den);
    if !index.is_integer() {
        return Ok(None);
    }
    let index = index.to_integer();
    let e: Vec<DegreeOnePlace> = places
        .iter()
        .filter(|pl| (&index % BigInt::from(pl.p)).is_zero())
        .copied()
        .collect();
    let mut prod = IdealLattice::unit(k);
    for pl in &e {
        prod = ideal_product(&prod, &place_ideal(k, pl)?)?;
    }
    if e.is_empty() || prod.basis() != &den {
        return Ok(None);
    }
    Ok(Some((index, e)))
}

/// Minimal-height point of `∏ 𝔭⁻¹` with all archimedean absolute values
/// below one.
pub fn find_generator_padic(set: &PrimeSet, cap: usize) -> Result<GeneratorCertificate> {
    let k = &set.field;
    let d = k.degree();
    if d < 2 {
        return Err(Error::domain("degree-one fields are generated by 1"));
    }
    if !set.verify()? {
        return Err(Error::domain("prime set does not satisfy the threshold condition"));
    }
    let ideal = padic_ideal(k, &set.places)?;
    let radii = vec![BigRational::one(); k.place_count()];
    let points = enumerate_box(&ideal, &radii, cap)?;
    let count = points.len();
    let chosen = points
        .into_iter()
        .next()
        .ok_or_else(|| Error::internal("empty box despite the threshold condition"))?;
    let prec = DEFAULT_PRECISION;
    let boxspec = BoxSpec::new(ideal, vec![Interval::from_integer(1, prec); k.place_count()])?;
    let alpha = chosen.alpha;
    let (denominator_index, equality_places) = denominator_places(&alpha, &set.places)?
        .ok_or_else(|| Error::internal("denominator ideal is not a product of designated primes"))?;
    let bound_pow_d = BigRational::from_integer(set.product.clone());
    let cert = GeneratorCertificate {
        theorem: TheoremTag::Thm31,
        min_poly: alpha.min_poly(),
        height_by_places: height_embedding_route(&alpha)?,
        height: chosen.height,
        bound: nth_root_rational(&bound_pow_d, d as u32),
        bound_pow_d,
        place_record: PlaceRecord::Padic {
            arch: arch_checks(&alpha, &radii)?,
            designated: set.places.clone(),
            denominator_index,
            equality_places,
        },
        search: SearchStats {
            points_in_box: count,
            ideal_norm: boxspec.ideal.norm().clone(),
            measure: boxspec.measure.clone(),
            minkowski_guarantee: boxspec.guaranteed()?,
        },
        alpha,
    };
    if !verify_certificate(&cert) {
        return Err(Error::internal("certificate failed its own verification"));
    }
    Ok(cert)
}

fn overlaps(a: &Interval, b: &Interval) -> bool {
    !matches!(a.compare(b), Some(Ordering::Less) | Some(Ordering::Greater))
}

/// `H ≤ B`, exactly when both squares are integers, else by certified
/// comparison (failing only when `H > B` is proved).
fn height_within(h: &HeightValue, bound_pow_d: &BigRational, d: usize, bound: &Interval) -> bool {
    if d == 2 {
        if let Some(sq) = &h.exact_square {
            return &BigRational::from_integer(sq.clone()) <= bound_pow_d;
        }
    }
    h.value.compare(bound) != Some(Ordering::Greater)
}

/// Recompute every recorded check.
pub fn verify_certificate(cert: &GeneratorCertificate) -> bool {
    check(cert).unwrap_or(false)
}

fn check(cert: &GeneratorCertificate) -> Result<bool> {
    let alpha = &cert.alpha;
    let k = alpha.field();
    let d = k.degree();
    let f = alpha.min_poly();
    if d < 2 || f.deg() != d || f != cert.min_poly {
        return Ok(false);
    }
    let h = weil_height(alpha)?;
    let hp = height_embedding_route(alpha)?;
    if !overlaps(&h.value, &hp) || !overlaps(&h.value, &cert.height.value) || h.exact_square != cert.height.exact_square {
        return Ok(false);
    }
    let bound = nth_root_rational(&cert.bound_pow_d, d as u32);
    if !overlaps(&bound, &cert.bound) {
        return Ok(false);
    }
    if !height_within(&h, &cert.bound_pow_d, d, &bound) || !height_within(&h, &cert.bound_pow_d, d, &cert.bound) {
        return Ok(false);
    }
    let one = BigRational::one();
    match &cert.place_record {
        PlaceRecord::Real {
            w,
            arch,
            exceeds_one_at_w,
            ..
        } => {
            let (r, s) = k.signature();
            if cert.theorem != TheoremTag::Thm1 || *w >= r || arch.len() != r + s {
                return Ok(false);
            }
            let mut radii = vec![one.clone(); r + s];
            radii[*w] = cert.bound_pow_d.clone();
            let radii_match = arch.iter().zip(&radii).all(|(a, r)| &a.radius == r && a.passed);
            let above = compare_abs(alpha, *w, &one)? == Ordering::Greater;
            // the radius must give a box of measure above 2^d
            let admissible = exceeds_threshold_rational(k, &cert.bound_pow_d)?;
            Ok(alpha.is_integral()
                && radii_match
                && in_box(alpha, &radii)?
                && above
                && *exceeds_one_at_w
                && admissible)
        }
        PlaceRecord::Padic {
            arch,
            designated,
            denominator_index,
            equality_places,
        } => {
            if cert.theorem != TheoremTag::Thm31 || designated.is_empty() {
                return Ok(false);
            }
            let mut ps: Vec<u64> = designated.iter().map(|pl| pl.p).collect();
            ps.sort_unstable();
            ps.dedup();
            let product: BigInt = ps.iter().map(|&p| BigInt::from(p)).product();
            if ps.len() != designated.len() || BigRational::from_integer(product.clone()) != cert.bound_pow_d {
                return Ok(false);
            }
            if !exceeds_threshold(k, &product)? {
                return Ok(false);
            }
            let ideal = padic_ideal(k, designated)?;
            let radii = vec![one.clone(); k.place_count()];
            let radii_match = arch.len() == radii.len() && arch.iter().all(|a| a.radius == one && a.passed);
            let Some((index, e)) = denominator_places(alpha, designated)? else {
                return Ok(false);
            };
            Ok(ideal.contains(alpha)
                && radii_match
                && in_box(alpha, &radii)?
                && &index == denominator_index
                && &e == equality_places)
        }
    }
}

/// Certified `x > c^d` for a rational `x`.
fn exceeds_threshold_rational(k: &Field, x: &BigRational) -> Result<bool> {
    // x > c^d iff floor-free comparison of x·den > c^d·den; reuse the
    // integer routine on a scaled copy of the threshold
    if x.is_integer() {
        return exceeds_threshold(k, &x.to_integer());
    }
    let mut prec = DEFAULT_PRECISION;
    loop {
        match k.order_constant_pow_d(prec).compare_rational(x) {
            Some(Ordering::Less) => return Ok(true),
            Some(_) => return Ok(false),
            None if prec >= crate::MAX_PRECISION => {
                return Err(Error::Precision {
                    bits: prec,
                    context: "box radius against c^d".into(),
                })
            }
            None => prec *= 2,
        }
    }
}
