//! Certified reals as closed intervals with rational endpoints.
//!
//! Endpoints are rounded outward to a dyadic with a fixed number of
//! significant bits after each operation, which keeps sizes bounded while
//! preserving containment.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
    prec: u32,
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << (e as usize))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// floor(log2 |x|) for nonzero `x`, off by at most one.
fn approx_log2(x: &BigRational) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

/// Round `x` to a dyadic with about `prec` significant bits, toward -inf
/// (`up = false`) or +inf (`up = true`).
pub(crate) fn round_dyadic(x: &BigRational, prec: u32, up: bool) -> BigRational {
    if x.is_zero() || x.denom().is_one() && x.numer().bits() <= prec as u64 {
        return x.clone();
    }
    let k = prec as i64 - approx_log2(x);
    let scaled = x * pow2(k);
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    BigRational::new(n, BigInt::one()) * pow2(-k)
}

/// Largest `r` with `r ≤ x^(1/n)` at dyadic scale `2^-k`, for `x ≥ 0`.
fn nth_root_bound(x: &BigRational, n: u32, k: i64, up: bool) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let scaled = x * pow2(k * n as i64);
    let t = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let mut r = t.nth_root(n);
    if up && num_traits::pow(r.clone(), n as usize) < t {
        r += 1;
    }
    BigRational::from_integer(r) * pow2(-k)
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval {
            lo: round_dyadic(&lo, prec, false),
            hi: round_dyadic(&hi, prec, true),
            prec,
        }
    }

    /// Exact point interval (not rounded).
    pub fn point(x: BigRational, prec: u32) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>, prec: u32) -> Self {
        Self::point(BigRational::from_integer(n.into()), prec)
    }

    /// Exact enclosure of a finite double.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        Self::point(BigRational::from_float(x).expect("finite"), prec)
    }

    /// Ball `center ± radius`.
    pub fn ball(center: BigRational, radius: BigRational, prec: u32) -> Self {
        Self::new(&center - &radius, &center + &radius, prec)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(mut self, prec: u32) -> Self {
        self.prec = prec;
        self
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Midpoint as a double.
    pub fn value(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    /// Half-width as a double, rounded up.
    pub fn error(&self) -> f64 {
        let r = self.width() / BigRational::from_integer(2.into());
        let f = r.to_f64().unwrap_or(f64::INFINITY);
        if f == 0.0 {
            0.0
        } else {
            f * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Certified comparison: `Some(Less)` if every point is below every
    /// point of `other`, `Some(Greater)` for the converse, `Some(Equal)`
    /// only for identical point intervals, `None` when they overlap.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified comparison against an exact rational.
    pub fn compare_rational(&self, x: &BigRational) -> Option<Ordering> {
        self.compare(&Interval::point(x.clone(), self.prec))
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    /// Interval of `max(self, x)` for a rational `x`.
    pub fn max_rational(&self, x: &BigRational) -> Interval {
        Interval {
            lo: self.lo.clone().max(x.clone()),
            hi: self.hi.clone().max(x.clone()),
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self.clone()
        } else {
            Interval {
                lo: BigRational::zero(),
                hi: self.hi.clone().max(-self.lo.clone()),
                prec: self.prec,
            }
        }
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Interval::new(self.hi.recip(), self.lo.recip(), self.prec))
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        Ok(self * &other.recip()?)
    }

    pub fn powi(&self, n: u32) -> Interval {
        let mut acc = Interval::from_integer(1, self.prec);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Principal `n`-th root of a nonnegative interval.
    pub fn nth_root(&self, n: u32) -> Result<Interval> {
        assert!(n >= 1);
        if self.lo.is_negative() {
            return Err(Error::domain("root of a negative interval"));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mag = if self.hi.is_zero() {
            0
        } else {
            approx_log2(&self.hi) / n as i64
        };
        let k = self.prec as i64 + 2 - mag;
        Ok(Interval {
            lo: nth_root_bound(&self.lo, n, k, false),
            hi: nth_root_bound(&self.hi, n, k, true),
            prec: self.prec,
        })
    }

    pub fn sqrt(&self) -> Result<Interval> {
        self.nth_root(2)
    }

    /// `self^(num/den)` for a nonnegative interval.
    pub fn pow_ratio(&self, num: u32, den: u32) -> Result<Interval> {
        self.powi(num).nth_root(den)
    }

    /// Enclosure of pi with about `prec` bits.
    pub fn pi(prec: u32) -> Interval {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239), fixed point with guard bits
        let w = prec as usize + 32;
        let (lo5, hi5) = atan_inv_fixed(5, w);
        let (lo239, hi239) = atan_inv_fixed(239, w);
        let lo = BigInt::from(16) * lo5 - BigInt::from(4) * hi239;
        let hi = BigInt::from(16) * hi5 - BigInt::from(4) * lo239;
        let scale = BigInt::one() << w;
        Interval::new(
            BigRational::new(lo, scale.clone()),
            BigRational::new(hi, scale),
            prec,
        )
    }

    /// Enclosure of the natural logarithm as doubles; adequate for reporting
    /// and for residual checks at double tolerance.
    pub fn ln_f64(&self) -> (f64, f64) {
        let lo = self.lo.to_f64().unwrap_or(0.0);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        (lo.ln(), hi.ln())
    }
}

/// Bounds on `atan(1/m)·2^w` as integers.
fn atan_inv_fixed(m: u64, w: usize) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let m2 = BigInt::from(m * m);
    let mut power = &one / BigInt::from(m); // floor(2^w / m^(2k+1))
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    let mut terms = 0u64;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        terms += 1;
        power /= &m2;
        k += 1;
    }
    // each truncated division loses < 1 unit, twice per term; the tail is < 1 unit
    let slack = BigInt::from(2 * terms + 2);
    (&sum - &slack, &sum + &slack)
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi, prec)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo, prec)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let prec = self.prec.max(rhs.prec);
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi, prec)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
            prec: self.prec,
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo.to_f64().unwrap_or(f64::NAN), self.hi.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.1e}", format_decimal(&self.mid(), 15), self.error())
    }
}

/// Decimal rendering of a rational with `digits` digits after the point
/// (truncated toward zero).
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (a * BigRational::from_integer(scale.clone())).floor().to_integer();
    let (int, frac) = (&scaled / &scale, &scaled % &scale);
    let mut s = String::new();
    if neg && scaled.sign() != Sign::NoSign {
        s.push('-');
    }
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    s
}
