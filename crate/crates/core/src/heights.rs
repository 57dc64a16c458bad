//! Weil heights.
//!
//! Two independent routes are provided: the Mahler measure of the minimal
//! polynomial, `H(α) = M(f)^(1/deg f)`, and the product over all places of
//! `max(1, |α|_v)`, whose finite part is read off the denominator ideal.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::roots::certified_roots_from;
use crate::arith::{real_roots_in_open_interval, Interval};
use crate::field::FieldElement;
use crate::{Error, IntPoly, Result, DEFAULT_PRECISION, MAX_PRECISION};

/// A certified height, with the exact square when it is an integer.
#[derive(Clone, Debug)]
pub struct HeightValue {
    pub value: Interval,
    pub exact_square: Option<BigInt>,
}

impl HeightValue {
    pub fn value_f64(&self) -> f64 {
        self.value.value()
    }

    pub fn error(&self) -> f64 {
        self.value.error()
    }
}

/// Squarefree decomposition over `Q`: primitive integer factors `g_i` with
/// `pp(f) = ± ∏ g_i^i` (Yun).
pub fn squarefree_factors(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let f = f.to_rational();
    if f.deg() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.to_primitive_integer(), i));
        }
        b = b.div_rem(&a).0;
        if b.deg() == 0 {
            break;
        }
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// `∏ max(1, |z|)` over the roots of a squarefree polynomial.
fn root_product(g: &IntPoly) -> Result<Interval> {
    let prec = DEFAULT_PRECISION;
    // exact unit-circle roots only occur when g shares a factor with its reciprocal
    let may_touch_circle = g.to_rational().gcd(&g.reversed().to_rational()).deg() > 0;
    let mut bits = DEFAULT_PRECISION;
    loop {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let roots = certified_roots_from(g, &target, bits + 8)?;
        let one = BigRational::one();
        let mut acc = Interval::from_integer(1, prec + bits);
        let mut straddle = false;
        for r in roots.iter() {
            let m = r.modulus(prec + bits);
            match m.compare_rational(&one) {
                Some(Ordering::Greater) => acc = &acc * &m,
                Some(_) => {}
                None if m.lo() >= &one => acc = &acc * &m,
                None if m.hi() <= &one => {}
                None => {
                    straddle = true;
                    acc = &acc * &m.max_rational(&one);
                }
            }
        }
        if !straddle || may_touch_circle || bits >= MAX_PRECISION {
            return Ok(acc.with_prec(prec));
        }
        bits *= 2;
    }
}

/// Mahler measure `|lc f| ∏ max(1, |z|)`, certified.
pub fn mahler_measure(f: &IntPoly) -> Result<Interval> {
    if f.is_zero() {
        return Err(Error::domain("Mahler measure of the zero polynomial"));
    }
    let prec = DEFAULT_PRECISION;
    let mut acc = Interval::from_integer(f.content(), prec);
    for (g, mult) in squarefree_factors(f) {
        let lc = Interval::from_integer(g.lc().abs(), prec);
        let m = &lc * &root_product(&g)?;
        acc = &acc * &m.powi(mult);
    }
    Ok(acc)
}

/// Exact Mahler measure of an irreducible polynomial of degree at most 2,
/// when it is an integer.
fn exact_small_measure(f: &IntPoly) -> Option<BigInt> {
    match f.deg() {
        1 => Some(f.coeff(0).abs().max(f.coeff(1).abs())),
        2 => {
            let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
            if &b * &b < BigInt::from(4) * &a * &c {
                // complex pair of modulus (c/a)^(1/2)
                return Some(a.abs().max(c.abs()));
            }
            let one = BigRational::one();
            match real_roots_in_open_interval(f, &-one.clone(), &one).ok()? {
                0 => Some(c.abs()),
                2 => Some(a.abs()),
                _ => None,
            }
        }
        _ => None,
    }
}

/// `(|b| + √Δ) / 2` for an irreducible `ax² + bx + c` with real roots, one
/// of them inside the unit interval.
fn split_quadratic_measure(f: &IntPoly) -> Result<Option<Interval>> {
    if f.deg() != 2 {
        return Ok(None);
    }
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    let one = BigRational::one();
    if !disc.is_positive() || real_roots_in_open_interval(f, &-one.clone(), &one)? != 1 {
        return Ok(None);
    }
    let prec = DEFAULT_PRECISION;
    let root = Interval::from_integer(disc, prec).sqrt()?;
    let sum = &Interval::from_integer(b.abs(), prec) + &root;
    Ok(Some(sum.div(&Interval::from_integer(2, prec))?))
}

/// Weil height of an element, as an algebraic number.
pub fn weil_height(alpha: &FieldElement) -> Result<HeightValue> {
    let prec = DEFAULT_PRECISION;
    if alpha.is_zero() {
        return Ok(HeightValue {
            value: Interval::from_integer(1, prec),
            exact_square: Some(BigInt::one()),
        });
    }
    poly_height(&alpha.min_poly())
}

/// Height of a root of the irreducible polynomial `f`.
pub fn poly_height(f: &IntPoly) -> Result<HeightValue> {
    let prec = DEFAULT_PRECISION;
    let m = f.deg() as u32;
    if let Some(exact) = exact_small_measure(f) {
        let value = if m == 1 {
            Interval::from_integer(exact.clone(), prec)
        } else {
            Interval::from_integer(exact.clone(), prec).sqrt()?
        };
        let exact_square = if m == 1 { &exact * &exact } else { exact };
        return Ok(HeightValue {
            value,
            exact_square: Some(exact_square),
        });
    }
    let measure = match split_quadratic_measure(f)? {
        Some(x) => x,
        None => mahler_measure(f)?,
    };
    let value = measure.nth_root(m)?;
    Ok(HeightValue {
        value,
        exact_square: None,
    })
}

/// `H(α) = ∏_v max(1, |α|_v)`: archimedean factors from the certified
/// embeddings, finite factor `N(D)^(1/d)` for the denominator ideal `D`.
pub fn height_embedding_route(alpha: &FieldElement) -> Result<Interval> {
    if alpha.is_zero() {
        return Err(Error::domain("height by places is undefined at 0"));
    }
    let prec = DEFAULT_PRECISION;
    let d = alpha.field().degree() as u32;
    let one = BigRational::one();
    let mut acc = Interval::from_integer(1, prec);
    for pv in alpha.embed()? {
        acc = &acc * &pv.normalized.max_rational(&one);
    }
    let den = alpha.denominator_index()?;
    let fin = Interval::from_integer(den, prec).nth_root(d)?;
    Ok(&acc * &fin)
}

/// Natural logarithm of a positive integer as a double.
pub fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    (n >> shift as usize).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `log |α|_v` over the places of the field, split into the archimedean
/// terms and the total over finite places.
#[derive(Clone, Debug)]
pub struct PlaceLogs {
    pub archimedean: Vec<f64>,
    /// `(log N(D) - log N(αD)) / d`: the finite places together.
    pub finite: f64,
}

impl PlaceLogs {
    pub fn residual(&self) -> f64 {
        self.archimedean.iter().sum::<f64>() + self.finite
    }
}

/// Logarithmic absolute values entering the product formula.
pub fn place_logs(alpha: &FieldElement) -> Result<PlaceLogs> {
    if alpha.is_zero() {
        return Err(Error::domain("product formula needs α ≠ 0"));
    }
    let k = alpha.field();
    let d = k.degree() as f64;
    let archimedean = alpha
        .embed()?
        .iter()
        .map(|pv| {
            let (lo, hi) = pv.abs.ln_f64();
            pv.local_degree as f64 / d * 0.5 * (lo + hi)
        })
        .collect();
    let order = k.order_basis();
    let den = alpha.denominator_ideal()?;
    let num = alpha.numerator_ideal()?;
    let n_den = crate::arith::lattice::index(order, &den);
    let n_num = crate::arith::lattice::index(order, &num);
    let finite = (ln_bigint(n_den.numer()) - ln_bigint(n_den.denom()) - ln_bigint(n_num.numer())
        + ln_bigint(n_num.denom()))
        / d;
    Ok(PlaceLogs { archimedean, finite })
}

/// Height of a rational number `a/b` in lowest terms.
pub fn rational_height(q: &BigRational) -> BigInt {
    if q.is_zero() {
        return BigInt::one();
    }
    q.numer().abs().max(q.denom().clone())
}
