use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldElement;
use crate::arith::roots::{CertifiedRoot, GaussRat};
use crate::arith::Interval;
use crate::{Result, DEFAULT_PRECISION};

/// Certified image of an element at one archimedean place.
#[derive(Clone, Debug)]
pub struct PlaceValue {
    pub index: usize,
    pub local_degree: u32,
    pub re: Interval,
    pub im: Interval,
    /// `‖α‖_v`: the ordinary absolute value of the embedding.
    pub abs: Interval,
    /// `|α|_v = ‖α‖_v^(d_v/d)`.
    pub normalized: Interval,
}

/// Evaluate `p(z)` at a disk center and bound `|p(ζ) - p(z)|` over the disk.
fn eval_with_error(coords: &[BigRational], root: &CertifiedRoot, prec: u32) -> (GaussRat, BigRational) {
    let mut acc = GaussRat::zero();
    for c in coords.iter().rev() {
        acc = acc.mul(&root.center).add(&GaussRat::real(c.clone()));
    }
    let t = Interval::point(root.center.norm_sqr(), prec)
        .sqrt()
        .expect("nonnegative")
        .hi()
        .clone();
    let r = &root.radius;
    let mut err = BigRational::zero();
    if !r.is_zero() {
        let mut pt = BigRational::one();
        let mut ptr = BigRational::one();
        let tr = &t + r;
        for c in coords.iter().skip(1) {
            pt *= &t;
            ptr *= &tr;
            err += c.abs() * (&ptr - &pt);
        }
    }
    (acc, err)
}

impl FieldElement {
    /// Certified embeddings at every archimedean place.
    pub fn embed(&self) -> Result<Vec<PlaceValue>> {
        self.embed_at(DEFAULT_PRECISION)
    }

    /// As [`FieldElement::embed`] with roots isolated to `2^-bits`.
    pub fn embed_at(&self, bits: u32) -> Result<Vec<PlaceValue>> {
        let k = self.field();
        let d = k.degree() as u32;
        let prec = bits + 32;
        let roots = k.place_roots(bits)?;
        let mut out = Vec::with_capacity(roots.len());
        for (i, root) in roots.iter().enumerate() {
            let dv = k.local_degree(i);
            let (val, err) = eval_with_error(self.coords(), root, prec);
            let re = Interval::ball(val.re.clone(), err.clone(), prec);
            let (im, abs) = if root.is_real {
                (Interval::from_integer(0, prec), re.abs())
            } else {
                let m = Interval::point(val.norm_sqr(), prec).sqrt()?;
                let lo = (m.lo() - &err).max(BigRational::zero());
                (
                    Interval::ball(val.im.clone(), err.clone(), prec),
                    Interval::new(lo, m.hi() + &err, prec),
                )
            };
            let normalized = abs.pow_ratio(dv, d)?;
            out.push(PlaceValue {
                index: i,
                local_degree: dv,
                re,
                im,
                abs,
                normalized,
            });
        }
        Ok(out)
    }

    /// Floating-point images at all `d` complex embeddings, in the order of
    /// [`super::NumberField::roots`].
    pub fn embeddings_f64(&self) -> Result<Vec<Complex64>> {
        let roots = self.field().roots(DEFAULT_PRECISION)?;
        Ok(roots
            .iter()
            .map(|r| {
                let z = r.approx();
                self.coords()
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, c| {
                        acc * z + num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
                    })
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use crate::field::{field_from_i64s, quadratic_field};

    #[test]
    fn gaussian_embedding() {
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        let v = k.element(&[1, 1]).embed().unwrap();
        assert_eq!(v.len(), 1);
        assert!((v[0].abs.value() - 2f64.sqrt()).abs() < 1e-30);
        assert!((v[0].normalized.value() - 2f64.sqrt()).abs() < 1e-15);
        assert!(v[0].abs.error() < 1e-30);
    }

    #[test]
    fn real_embeddings() {
        let k = quadratic_field(2).unwrap();
        let v = k.element(&[0, 1]).embed().unwrap();
        assert_eq!(v.len(), 2);
        assert!((v[0].re.value() + 2f64.sqrt()).abs() < 1e-15);
        assert!((v[1].re.value() - 2f64.sqrt()).abs() < 1e-15);
        assert!((v[1].normalized.value() - 2f64.sqrt().sqrt()).abs() < 1e-15);
        let e = k.element(&[3, 2]).embeddings_f64().unwrap();
        assert!((e[1].re - (3.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn cubic_product_of_embeddings_is_norm() {
        let k = field_from_i64s(&[-2, 0, 0, 1]).unwrap();
        let a = k.element(&[1, -1, 3]);
        let v = a.embed().unwrap();
        let prod: f64 = v.iter().map(|p| p.abs.value().powi(p.local_degree as i32)).product();
        let n: f64 = num_traits::ToPrimitive::to_f64(&a.norm()).unwrap();
        assert!((prod - n.abs()).abs() < 1e-9 * n.abs());
    }
}
