use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::resultant::is_squarefree;
use crate::{Error, IntPoly, RatPoly, Result};

/// Sturm chain `f, f', -rem(f, f'), ...`.
fn sturm_chain(f: &IntPoly) -> Vec<RatPoly> {
    let mut chain = vec![f.to_rational(), f.derivative().to_rational()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at_infinity(p: &RatPoly, positive: bool) -> i8 {
    let s = sign(&p.lc());
    if positive || p.deg() % 2 == 0 {
        s
    } else {
        -s
    }
}

fn check(f: &IntPoly) -> Result<()> {
    if f.degree().is_none() {
        return Err(Error::domain("zero polynomial"));
    }
    if !is_squarefree(f) {
        return Err(Error::domain("polynomial is not squarefree"));
    }
    Ok(())
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn real_root_count(f: &IntPoly) -> Result<usize> {
    check(f)?;
    let chain = sturm_chain(f);
    let neg = variations(chain.iter().map(|p| sign_at_infinity(p, false)));
    let pos = variations(chain.iter().map(|p| sign_at_infinity(p, true)));
    Ok(neg - pos)
}

/// Number of real roots in the open interval `(a, b)`.
pub fn real_roots_in_open_interval(f: &IntPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    check(f)?;
    if a >= b {
        return Ok(0);
    }
    let chain = sturm_chain(f);
    let at = |x: &BigRational| variations(chain.iter().map(|p| sign(&p.eval(x))));
    // Sturm counts roots in (a, b]; drop b itself if it is a root
    let fr = f.to_rational();
    let at_b = usize::from(fr.eval(b).is_zero());
    Ok(at(a) - at(b) - at_b)
}
