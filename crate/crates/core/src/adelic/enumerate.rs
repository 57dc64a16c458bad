use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use super::ideal::minkowski_rows;
use super::IdealLattice;
use crate::arith::Matrix;
use crate::field::FieldElement;
use crate::heights::{weil_height, HeightValue};
use crate::{Error, Result, DEFAULT_PRECISION, MAX_PRECISION};

/// Default bound on the number of lattice points visited by one search.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Sign of `a + b√D` for `D > 0` not a square.
fn sign_surd(a: &BigRational, b: &BigRational, disc: &BigRational) -> Ordering {
    let (sa, sb) = (a.cmp(&BigRational::zero()), b.cmp(&BigRational::zero()));
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(b * b * disc)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// For a real quadratic field, `α` at place `v` as `a + b√D` with `D` the
/// discriminant of the defining polynomial.
fn real_quadratic_parts(alpha: &FieldElement, v: usize) -> Option<(BigRational, BigRational, BigRational)> {
    let k = alpha.field();
    if k.degree() != 2 || k.signature().0 != 2 {
        return None;
    }
    let f = k.defining_poly();
    let p = BigRational::from_integer(f.coeff(1));
    let disc = BigRational::from_integer(k.poly_disc().clone());
    let two = BigRational::from_integer(2.into());
    let (x0, x1) = (&alpha.coords()[0], &alpha.coords()[1]);
    // roots ascending: θ_v = (-p ∓ √D) / 2
    let a = x0 - x1 * &p / &two;
    let b = if v == 0 { -x1 / &two } else { x1 / &two };
    Some((a, b, disc))
}

/// Sign of a nonzero element at a real place, by precision escalation.
pub fn real_sign(alpha: &FieldElement, v: usize) -> Result<Ordering> {
    if alpha.is_rational() {
        return Ok(alpha.coords()[0].cmp(&BigRational::zero()));
    }
    if let Some((a, b, disc)) = real_quadratic_parts(alpha, v) {
        return Ok(sign_surd(&a, &b, &disc));
    }
    let mut bits = DEFAULT_PRECISION;
    loop {
        let pv = &alpha.embed_at(bits)?[v];
        if let Some(o) = pv.re.compare_rational(&BigRational::zero()) {
            return Ok(o);
        }
        if bits >= MAX_PRECISION {
            return Err(Error::Precision {
                bits,
                context: format!("sign of {alpha} at place {v}"),
            });
        }
        bits *= 2;
    }
}

/// Exact comparison of `‖α‖_v` with a rational radius.
pub fn compare_abs(alpha: &FieldElement, v: usize, radius: &BigRational) -> Result<Ordering> {
    let k = alpha.field();
    if alpha.is_rational() {
        return Ok(alpha.coords()[0].abs().cmp(radius));
    }
    if let Some((a, b, disc)) = real_quadratic_parts(alpha, v) {
        let below = sign_surd(&(radius - &a), &-&b, &disc);
        let above = sign_surd(&(radius + &a), &b, &disc);
        return Ok(match (below, above) {
            (Ordering::Greater, Ordering::Greater) => Ordering::Less,
            (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
            _ => Ordering::Greater,
        });
    }
    if k.degree() == 2 {
        // the single complex place: ‖α‖² = N(α)
        return Ok(alpha.norm().cmp(&(radius * radius)));
    }
    let pv = &alpha.embed()?[v];
    if let Some(o) = pv.abs.compare_rational(radius) {
        return Ok(o);
    }
    let (r, _) = k.signature();
    if v < r {
        // ‖α‖ < R iff R - α > 0 and R + α > 0 at v
        let rq = FieldElement::from_rational(k, radius.clone());
        let below = real_sign(&rq.sub(alpha)?, v)?;
        let above = real_sign(&rq.add(alpha)?, v)?;
        return Ok(match (below, above) {
            (Ordering::Greater, Ordering::Greater) => Ordering::Less,
            _ => Ordering::Greater,
        });
    }
    if k.degree() == 2 {
        // the single complex place: ‖α‖² = N(α)
        return Ok(alpha.norm().cmp(&(radius * radius)));
    }
    let mut bits = 2 * DEFAULT_PRECISION;
    while bits <= MAX_PRECISION {
        if let Some(o) = alpha.embed_at(bits)?[v].abs.compare_rational(radius) {
            return Ok(o);
        }
        bits *= 2;
    }
    Err(Error::Precision {
        bits: MAX_PRECISION,
        context: format!("|{alpha}| against {radius} at place {v}"),
    })
}

/// `true` if `‖α‖_v < R_v` at every archimedean place.
pub fn in_box(alpha: &FieldElement, radii: &[BigRational]) -> Result<bool> {
    for (v, r) in radii.iter().enumerate() {
        if compare_abs(alpha, v, r)? != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer vectors `x ≠ 0` with `x G xᵀ ≤ bound` (Fincke–Pohst).
pub fn fincke_pohst<F: Float>(gram: &Matrix<F>, bound: F, cap: usize) -> Result<Vec<Vec<i64>>>
where
    F: crate::FieldScalar,
{
    let n = gram.nrows();
    // q[i][i] > 0 and q[i][j] (j > i) with Q(x) = Σ q_ii (x_i + Σ_j q_ij x_j)²
    let mut q = gram.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            q[(j, i)] = q[(i, j)];
            q[(i, j)] = q[(i, j)] / q[(i, i)];
        }
        for k in (i + 1)..n {
            for l in k..n {
                q[(k, l)] = q[(k, l)] - q[(k, i)] * q[(i, l)];
            }
        }
        if !(q[(i, i)] > F::zero()) {
            return Err(Error::Precision {
                bits: 53,
                context: "Gram matrix is numerically singular".into(),
            });
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let mut visited = 0usize;
    let slack = F::from(1e-9).unwrap();
    fn rec<F: Float + crate::FieldScalar>(
        q: &Matrix<F>,
        i: usize,
        remaining: F,
        x: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        visited: &mut usize,
        cap: usize,
        slack: F,
    ) -> Result<()> {
        let n = x.len();
        let mut c = F::zero();
        for j in (i + 1)..n {
            c = c - q[(i, j)] * F::from(x[j]).unwrap();
        }
        let width = (remaining.max(F::zero()) / q[(i, i)]).sqrt() + slack;
        let lo = (c - width).ceil().to_i64().unwrap_or(i64::MIN);
        let hi = (c + width).floor().to_i64().unwrap_or(i64::MAX);
        for xi in lo..=hi {
            x[i] = xi;
            let t = F::from(xi).unwrap() - c;
            let rest = remaining - q[(i, i)] * t * t;
            if rest < -slack {
                continue;
            }
            if i == 0 {
                *visited += 1;
                if *visited > cap {
                    return Err(Error::Cap(format!("more than {cap} lattice points in the search ellipsoid")));
                }
                if x.iter().any(|&v| v != 0) {
                    out.push(x.clone());
                }
            } else {
                rec(q, i - 1, rest, x, out, visited, cap, slack)?;
            }
        }
        x[i] = 0;
        Ok(())
    }
    if n > 0 {
        rec(&q, n - 1, bound, &mut x, &mut out, &mut visited, cap, slack)?;
    }
    Ok(out)
}

/// Candidate integer coordinates covering the box: the ellipsoid
/// `Σ_v ‖α‖_v² / R_v² ≤ r + s` (with slack) contains it.
fn candidates(ideal: &IdealLattice, radii: &[BigRational], cap: usize) -> Result<Vec<Vec<i64>>> {
    let k = ideal.field();
    let (r, s) = k.signature();
    if radii.len() != r + s || radii.iter().any(|x| !x.is_positive()) {
        return Err(Error::domain(format!("expected {} positive radii", r + s)));
    }
    let emb = minkowski_rows(k, ideal.basis())?;
    let weights: Vec<f64> = (0..r)
        .map(|v| radii[v].to_f64().unwrap_or(f64::NAN).recip())
        .chain((r..r + s).flat_map(|v| {
            let w = radii[v].to_f64().unwrap_or(f64::NAN).recip();
            [w, w]
        }))
        .collect();
    let scaled = Matrix::from_rows(
        emb.rows()
            .map(|row| row.iter().zip(&weights).map(|(a, w)| a * w).collect())
            .collect(),
    );
    let gram = scaled.mul(&scaled.transpose());
    let bound = (r + s) as f64 * (1.0 + 1e-6) + 1e-9;
    fincke_pohst(&gram, bound, cap)
}

/// A point of a box with its height, as returned by [`enumerate_box`].
#[derive(Clone, Debug)]
pub struct BoxPoint {
    pub alpha: FieldElement,
    pub height: HeightValue,
}

/// Ordering by height, then by power-basis coordinates.
pub fn compare_points(a: &BoxPoint, b: &BoxPoint) -> Ordering {
    let h = match (&a.height.exact_square, &b.height.exact_square) {
        (Some(x), Some(y)) => x.cmp(y),
        _ => a
            .height
            .value
            .compare(&b.height.value)
            .unwrap_or_else(|| a.height.value.mid().cmp(&b.height.value.mid())),
    };
    h.then_with(|| a.alpha.coords().cmp(b.alpha.coords()))
}

/// Nonzero points of `I` with `‖α‖_v < R_v` at every archimedean place,
/// ordered by height then coordinates.
pub fn enumerate_box(ideal: &IdealLattice, radii: &[BigRational], cap: usize) -> Result<Vec<BoxPoint>> {
    let mut out = Vec::new();
    for x in candidates(ideal, radii, cap)? {
        let c: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        let alpha = ideal.element(&c);
        if in_box(&alpha, radii)? {
            let height = weil_height(&alpha)?;
            out.push(BoxPoint { alpha, height });
        }
    }
    out.sort_by(compare_points);
    Ok(out)
}

/// As [`enumerate_box`], returning the elements only.
pub fn enumerate_box_elements(ideal: &IdealLattice, radii: &[BigRational], cap: usize) -> Result<Vec<FieldElement>> {
    Ok(enumerate_box(ideal, radii, cap)?.into_iter().map(|p| p.alpha).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelic::{ideal_inverse, prime_ideal};
    use crate::field::{field_from_i64s, quadratic_field};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gaussian_boxes() {
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        let inv = ideal_inverse(&prime_ideal(&k, 2, 1).unwrap()).unwrap();
        let pts = enumerate_box_elements(&inv, &[q(1, 1)], DEFAULT_ENUMERATION_CAP).unwrap();
        let coords: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![
                vec![q(-1, 2), q(-1, 2)],
                vec![q(-1, 2), q(1, 2)],
                vec![q(1, 2), q(-1, 2)],
                vec![q(1, 2), q(1, 2)],
            ]
        );
        let o = IdealLattice::unit(&k);
        assert!(enumerate_box(&o, &[q(1, 1)], DEFAULT_ENUMERATION_CAP).unwrap().is_empty());
        // the boundary |1| = 1 is excluded, |1 + i| < 2 is not
        let pts = enumerate_box(&o, &[q(2, 1)], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(pts.len(), 8);
    }

    #[test]
    fn real_quadratic_box() {
        let k = quadratic_field(2).unwrap();
        let o = IdealLattice::unit(&k);
        let pts = enumerate_box_elements(&o, &[q(1, 1), q(283, 100)], DEFAULT_ENUMERATION_CAP).unwrap();
        let coords: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![q(-1, 1), q(-1, 1)], vec![q(1, 1), q(1, 1)]]);
        let pts = enumerate_box_elements(&o, &[q(283, 100), q(1, 1)], DEFAULT_ENUMERATION_CAP).unwrap();
        let coords: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![q(-1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]]);
    }

    #[test]
    fn cap() {
        let k = quadratic_field(2).unwrap();
        let o = IdealLattice::unit(&k);
        assert!(matches!(enumerate_box(&o, &[q(100, 1), q(100, 1)], 10), Err(Error::Cap(_))));
    }
}
