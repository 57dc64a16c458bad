//! Certified isolation of the complex roots of squarefree integer
//! polynomials.
//!
//! Approximations come from Aberth iteration in double precision, are
//! polished by Newton steps on dyadic rationals, and are then certified a
//! posteriori: with Weierstrass corrections `W_i = f(z_i) / (lc ∏_{j≠i}(z_i - z_j))`
//! every root lies in the union of the disks `D(z_i, n|W_i|)`, and a disk
//! disjoint from all others holds exactly one root. All certification
//! arithmetic is exact.

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use super::interval::{round_dyadic, Interval};
use super::resultant::is_squarefree;
use super::sturm::real_root_count;
use crate::{Error, IntPoly, Result, MAX_PRECISION};

/// Gaussian rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(BigRational::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GaussRat::new(&self.re * c, &self.im * c)
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(self.mul(&o.conj()).scale(&n.recip()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn round(&self, prec: u32) -> Self {
        GaussRat::new(round_dyadic(&self.re, prec, false), round_dyadic(&self.im, prec, false))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Evaluate an integer polynomial exactly.
    pub fn eval(f: &IntPoly, z: &GaussRat) -> GaussRat {
        f.coeffs().iter().rev().fold(GaussRat::zero(), |acc, c| {
            let mut t = acc.mul(z);
            t.re += BigRational::from_integer(c.clone());
            t
        })
    }
}

/// A disk containing exactly one root of the source polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedRoot {
    /// Disk center; its imaginary part is exactly zero for real roots.
    pub center: GaussRat,
    /// Radius (exact rational upper bound).
    pub radius: BigRational,
    pub is_real: bool,
}

impl CertifiedRoot {
    pub fn re(&self) -> f64 {
        self.center.re.to_f64().unwrap_or(f64::NAN)
    }

    pub fn im(&self) -> f64 {
        self.center.im.to_f64().unwrap_or(f64::NAN)
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn approx(&self) -> Complex64 {
        self.center.to_c64()
    }

    /// Enclosure of the modulus of the root.
    pub fn modulus(&self, prec: u32) -> Interval {
        let c = Interval::point(self.center.norm_sqr(), prec)
            .sqrt()
            .expect("nonnegative");
        let r = Interval::point(self.radius.clone(), prec);
        let lo = (c.lo() - r.hi()).max(BigRational::zero());
        Interval::new(lo, c.hi() + r.hi(), prec)
    }

    /// `true` if the point `z` lies in the closed disk.
    pub fn contains(&self, z: &GaussRat) -> bool {
        z.sub(&self.center).norm_sqr() <= &self.radius * &self.radius
    }
}

/// Roots of a squarefree polynomial, each isolated in a disk of radius at
/// most `target_radius`.
///
/// Ordering: real roots ascending, then the representatives with positive
/// imaginary part ascending by imaginary part, then their conjugates in the
/// same order.
pub fn certified_roots(f: &IntPoly, target_radius: f64) -> Result<Vec<CertifiedRoot>> {
    let target = BigRational::from_float(target_radius.max(0.0))
        .ok_or_else(|| Error::domain("target radius must be finite"))?;
    certified_roots_from(f, &target, crate::DEFAULT_PRECISION)
}

/// As [`certified_roots`] with an exact target radius, starting the
/// precision schedule at `prec` bits.
pub fn certified_roots_from(f: &IntPoly, target: &BigRational, prec: u32) -> Result<Vec<CertifiedRoot>> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::domain("roots of a constant polynomial"))?;
    if !is_squarefree(f) {
        return Err(Error::domain("polynomial is not squarefree"));
    }
    if n == 1 {
        let root = BigRational::new(-f.coeff(0), f.coeff(1));
        return Ok(vec![CertifiedRoot {
            center: GaussRat::real(root),
            radius: BigRational::zero(),
            is_real: true,
        }]);
    }
    let real_count = real_root_count(f)?;
    let mut approx = aberth(f);
    let mut prec = prec.max(64);
    loop {
        let (reals, reps) = split_real_complex(&approx, real_count);
        let reals: Vec<BigRational> = reals
            .into_iter()
            .map(|x| newton_real(f, BigRational::from_float(x).unwrap_or_default(), prec))
            .collect();
        let reps: Vec<GaussRat> = reps
            .into_iter()
            .map(|z| {
                let z0 = GaussRat::new(
                    BigRational::from_float(z.re).unwrap_or_default(),
                    BigRational::from_float(z.im).unwrap_or_default(),
                );
                newton_complex(f, z0, prec)
            })
            .collect();
        if let Some(roots) = certify(f, &reals, &reps, target, prec) {
            return Ok(roots);
        }
        if prec >= MAX_PRECISION {
            return Err(Error::Precision {
                bits: MAX_PRECISION,
                context: format!("isolating the roots of {f}"),
            });
        }
        prec = (prec * 2).min(MAX_PRECISION);
        // refresh starting points from the polished values
        let mut next: Vec<Complex64> = reals.iter().map(|x| Complex64::new(x.to_f64().unwrap_or(0.0), 0.0)).collect();
        for z in &reps {
            let c = z.to_c64();
            next.push(c);
            next.push(c.conj());
        }
        if next.len() == n {
            approx = next;
        }
    }
}

fn split_real_complex(approx: &[Complex64], real_count: usize) -> (Vec<f64>, Vec<Complex64>) {
    let mut by_im: Vec<Complex64> = approx.to_vec();
    by_im.sort_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap_or(Ordering::Equal));
    let mut reals: Vec<f64> = by_im[..real_count].iter().map(|z| z.re).collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    let mut rest: Vec<Complex64> = by_im[real_count..].to_vec();
    rest.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal));
    let pairs = rest.len() / 2;
    let mut reps: Vec<Complex64> = rest[..pairs]
        .iter()
        .map(|z| Complex64::new(z.re, z.im.abs()))
        .collect();
    reps.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal));
    (reals, reps)
}

fn newton_real(f: &IntPoly, mut x: BigRational, prec: u32) -> BigRational {
    let fr = f.to_rational();
    let df = fr.derivative();
    let tol = BigRational::new(One::one(), num_bigint::BigInt::one() << (prec as usize));
    for _ in 0..(prec as usize / 8 + 40) {
        let d = df.eval(&x);
        if d.is_zero() {
            break;
        }
        let step = fr.eval(&x) / d;
        x = round_dyadic(&(&x - &step), prec + 8, false);
        let scale = x.abs().max(One::one());
        if step.abs() <= &tol * scale {
            break;
        }
    }
    x
}

fn newton_complex(f: &IntPoly, mut z: GaussRat, prec: u32) -> GaussRat {
    let df = f.derivative();
    let tol = BigRational::new(One::one(), num_bigint::BigInt::one() << (2 * prec as usize));
    for _ in 0..(prec as usize / 8 + 40) {
        let Some(step) = GaussRat::eval(f, &z).div(&GaussRat::eval(&df, &z)) else {
            break;
        };
        z = z.sub(&step).round(prec + 8);
        let scale = z.norm_sqr().max(One::one());
        if step.norm_sqr() <= &tol * scale {
            break;
        }
    }
    z
}

/// Radius `n|W_i|` rounded up, as an exact rational.
fn weierstrass_radius(f: &IntPoly, zs: &[GaussRat], i: usize, prec: u32) -> BigRational {
    let fz = GaussRat::eval(f, &zs[i]);
    if fz.is_zero() {
        return BigRational::zero();
    }
    let lc = BigRational::from_integer(f.lc());
    let mut den = &lc * &lc;
    for (j, zj) in zs.iter().enumerate() {
        if j != i {
            den *= zs[i].sub(zj).norm_sqr();
        }
    }
    if den.is_zero() {
        // coincident centers: no certification possible
        return BigRational::from_integer(num_bigint::BigInt::one() << 64);
    }
    let n = BigRational::from_integer(zs.len().into());
    let r2 = &n * &n * fz.norm_sqr() / den;
    Interval::point(r2, prec).sqrt().expect("nonnegative").hi().clone()
}

fn certify(
    f: &IntPoly,
    reals: &[BigRational],
    reps: &[GaussRat],
    target: &BigRational,
    prec: u32,
) -> Option<Vec<CertifiedRoot>> {
    let mut zs: Vec<GaussRat> = reals.iter().cloned().map(GaussRat::real).collect();
    zs.extend(reps.iter().cloned());
    zs.extend(reps.iter().map(GaussRat::conj));
    if zs.len() != f.deg() {
        return None;
    }
    let radii: Vec<BigRational> = (0..zs.len()).map(|i| weierstrass_radius(f, &zs, i, prec)).collect();
    if radii.iter().any(|r| r > target) {
        return None;
    }
    for i in 0..zs.len() {
        for j in (i + 1)..zs.len() {
            let s = &radii[i] + &radii[j];
            if zs[i].sub(&zs[j]).norm_sqr() <= &s * &s {
                return None;
            }
        }
    }
    // a real center with an isolated disk holds a real root (the disk is
    // conjugation invariant); an isolated disk with its conjugate disk also
    // isolated holds a non-real root
    Some(
        zs.into_iter()
            .zip(radii)
            .enumerate()
            .map(|(i, (center, radius))| CertifiedRoot {
                center,
                radius,
                is_real: i < reals.len(),
            })
            .collect(),
    )
}

/// Aberth–Ehrlich iteration in floating point.
pub fn aberth_generic<F: Float>(coeffs: &[F], max_iter: usize) -> Vec<num_complex::Complex<F>> {
    use num_complex::Complex;
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let two = F::one() + F::one();
    // Cauchy-type radius for the initial circle
    let mut radius = F::zero();
    for c in &coeffs[..n] {
        radius = radius.max((*c / lc).abs());
    }
    let radius = (F::one() + radius).min(F::from(1e150).unwrap());
    let offset = F::from(0.4).unwrap();
    let tau = F::from(std::f64::consts::TAU).unwrap();
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let ang = tau * F::from(k).unwrap() / F::from(n).unwrap() + offset;
            Complex::new(ang.cos(), ang.sin()) * (radius / two)
        })
        .collect();
    let eval = |x: Complex<F>| -> (Complex<F>, Complex<F>) {
        let mut p = Complex::new(F::zero(), F::zero());
        let mut dp = Complex::new(F::zero(), F::zero());
        for c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + Complex::new(*c, F::zero());
        }
        (p, dp)
    };
    let eps = F::epsilon() * F::from(16).unwrap();
    for _ in 0..max_iter {
        let mut moved = F::zero();
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == F::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex::new(F::zero(), F::zero());
            for j in 0..n {
                if j != i {
                    s = s + Complex::new(F::one(), F::zero()) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex::new(F::one(), F::zero()) - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] = z[i] - w;
                moved = moved.max(w.norm() / z[i].norm().max(F::one()));
            }
        }
        if moved < eps {
            break;
        }
    }
    z
}

fn aberth(f: &IntPoly) -> Vec<Complex64> {
    let coeffs: Vec<f64> = f.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
    aberth_generic(&coeffs, 500)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn sqrt2() {
        let r = certified_roots(&ip(&[-2, 0, 1]), 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.is_real && x.radius_f64() <= 1e-12));
        assert!((r[0].re() + std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!((r[1].re() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn heegner_pair() {
        let r = certified_roots(&ip(&[41, 1, 1]), 1e-20).unwrap();
        assert_eq!(r.len(), 2);
        assert!(!r[0].is_real && !r[1].is_real);
        assert!(r[0].im() > 0.0);
        assert_eq!(r[1].center, r[0].center.conj());
        for x in &r {
            assert!((x.modulus(128).value() - 41f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn linear_is_exact() {
        let r = certified_roots(&ip(&[-3, 1]), 0.0).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].is_real);
        assert!(r[0].radius.is_zero());
        assert_eq!(r[0].center.re, BigRational::from_integer(3.into()));
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(certified_roots(&ip(&[1, 2, 1]), 1e-6).is_err());
    }

    #[test]
    fn roots_of_unity_and_clusters() {
        // cyclotomic Φ_7 and a Mignotte-like polynomial with close roots
        let phi7 = ip(&[1, 1, 1, 1, 1, 1, 1]);
        let r = certified_roots(&phi7, 1e-30).unwrap();
        assert_eq!(r.len(), 6);
        for x in &r {
            assert!((x.approx().norm() - 1.0).abs() < 1e-14);
        }
        let close = ip(&[2, -40, 200, 0, 0, 1]); // x^5 + 200x^2 - 40x + 2 (near double root 0.1)
        let r = certified_roots(&close, 1e-25).unwrap();
        assert_eq!(r.len(), 5);
        assert_eq!(r.iter().filter(|x| x.is_real).count(), real_root_count(&close).unwrap());
    }
}
