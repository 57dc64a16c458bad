use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Poly;
use crate::{Error, IntPoly, Result};

/// Resultant of two nonzero integer polynomials by the subresultant PRS.
///
/// Sign convention is that of the Sylvester determinant:
/// `res(f, g) = lc(f)^deg(g) · ∏ g(α)` over the roots `α` of `f`.
pub fn poly_resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("resultant of the zero polynomial"));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
    }
    if b.deg() == 0 {
        return Ok(sign * num_traits::pow(b.lc(), a.deg()));
    }
    let (ca, cb) = (a.content(), b.content());
    let t = num_traits::pow(ca.clone(), b.deg()) * num_traits::pow(cb.clone(), a.deg());
    a = Poly::new(a.coeffs().iter().map(|c| c / &ca).collect());
    b = Poly::new(b.coeffs().iter().map(|c| c / &cb).collect());
    let mut g_acc = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let div = &g_acc * num_traits::pow(h.clone(), delta);
        b = Poly::new(r.coeffs().iter().map(|c| c / &div).collect());
        g_acc = a.lc();
        // h <- g^delta / h^(delta - 1), exact
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g_acc.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.deg() == 0 {
            let da = a.deg();
            let hb = if da == 0 {
                h.clone()
            } else {
                num_traits::pow(b.lc(), da) / num_traits::pow(h.clone(), da - 1)
            };
            return Ok(sign * t * hb);
        }
    }
}

/// `(-1)^(d(d-1)/2) · res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::domain("discriminant of a constant polynomial"))?;
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = poly_resultant(f, &f.derivative())?;
    let mut disc = r / f.lc();
    if (d * (d - 1) / 2) % 2 == 1 {
        disc = -disc;
    }
    Ok(disc)
}

/// Sign helper used by callers that only need nonvanishing.
pub fn is_squarefree(f: &IntPoly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => poly_discriminant(f).map(|d| !d.is_zero()).unwrap_or(false),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Matrix;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        Poly::from_i64s(c)
    }

    /// Sylvester determinant oracle.
    fn sylvester(f: &IntPoly, g: &IntPoly) -> BigInt {
        let (m, n) = (f.deg(), g.deg());
        let size = m + n;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut r = vec![BigRational::zero(); size];
            for (j, c) in f.coeffs().iter().rev().enumerate() {
                r[i + j] = BigRational::from_integer(c.clone());
            }
            rows.push(r);
        }
        for i in 0..m {
            let mut r = vec![BigRational::zero(); size];
            for (j, c) in g.coeffs().iter().rev().enumerate() {
                r[i + j] = BigRational::from_integer(c.clone());
            }
            rows.push(r);
        }
        Matrix::from_rows(rows).det().to_integer()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(poly_resultant(&ip(&[-2, 1]), &ip(&[-3, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(poly_resultant(&ip(&[-2, 0, 1]), &ip(&[-3, 0, 1])).unwrap(), BigInt::from(1));
        assert_eq!(poly_resultant(&ip(&[41, 1, 1]), &ip(&[1, 2])).unwrap(), BigInt::from(163));
        assert!(poly_resultant(&ip(&[]), &ip(&[1, 1])).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(poly_discriminant(&ip(&[41, 1, 1])).unwrap(), BigInt::from(-163));
        assert_eq!(poly_discriminant(&ip(&[1, 0, 1])).unwrap(), BigInt::from(-4));
        assert_eq!(poly_discriminant(&ip(&[-1, -1, 0, 1])).unwrap(), BigInt::from(-23));
        assert!(poly_discriminant(&ip(&[5])).is_err());
        // b^2 - 4ac with a non-monic quadratic
        assert_eq!(poly_discriminant(&ip(&[1, -2, 2])).unwrap(), BigInt::from(-4));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-6i64..=6, 1..=5)
            .prop_map(|v| ip(&v))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn matches_sylvester(f in small_poly(), g in small_poly()) {
            prop_assume!(f.deg() + g.deg() >= 1);
            prop_assert_eq!(poly_resultant(&f, &g).unwrap(), sylvester(&f, &g));
        }

        #[test]
        fn multiplicative(f in small_poly(), g in small_poly(), h in small_poly()) {
            let gh = &g * &h;
            let lhs = poly_resultant(&f, &gh).unwrap();
            let rhs = poly_resultant(&f, &g).unwrap() * poly_resultant(&f, &h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
