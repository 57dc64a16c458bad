//! Polynomials over a prime field and their factorization: squarefree
//! decomposition, distinct-degree splitting, then randomized equal-degree
//! splitting with a fixed seed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::primes::{is_prime, pow_mod, reduce};
use crate::{Error, IntPoly, Result};

const EDF_SEED: u64 = 0x5eed_f00d;

/// Polynomial over `F_p`, coefficients ascending in `[0, p)`, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    addm(a, p - b % p, p)
}

fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod p");
    pow_mod(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| reduce(c, p)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| addm(mulm(acc, x, self.p), c, self.p))
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = invm(lc, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&c| mulm(c, inv, self.p)).collect())
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| addm(self.c(i), o.c(i), self.p))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| subm(self.c(i), o.c(i), self.p))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(a, b, self.p), self.p);
            }
        }
        Self::new(self.p, out)
    }

    fn c(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = d.deg();
        let inv = invm(*d.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mulm(rem[i + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = subm(rem[i + j], mulm(c, dc, p), p);
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        (Self::new(p, q), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Roots in `F_p` of a polynomial, via its linear factors.
    pub fn roots(&self) -> Vec<u64> {
        let mut r: Vec<u64> = factor(self)
            .into_iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, _)| subm(0, g.coeffs[0], self.p))
            .collect();
        r.sort_unstable();
        r
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coeffs, self.p)
    }
}

/// Factor `f` modulo the prime `p` into monic irreducible powers.
///
/// The product of the returned `g^m` equals `f / lc(f) mod p`. Factors are
/// sorted by degree, then coefficients.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(ModPoly, u32)>> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let g = ModPoly::from_int_poly(f, p);
    if g.is_zero() {
        return Err(Error::domain(format!("polynomial vanishes mod {p}")));
    }
    Ok(factor(&g))
}

/// Sorted multiset of factor degrees of `f mod p`, with multiplicity.
pub fn factor_degrees(f: &IntPoly, p: u64) -> Result<Vec<usize>> {
    let mut d: Vec<usize> = factor_mod_p(f, p)?
        .iter()
        .flat_map(|(g, m)| std::iter::repeat_n(g.deg(), *m as usize))
        .collect();
    d.sort_unstable();
    Ok(d)
}

fn factor(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let f = f.monic();
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    for (sq, mult) in squarefree(&f) {
        for (d, part) in distinct_degree(&sq) {
            for g in equal_degree(&part, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs, a.1).cmp(&(b.0.deg(), &b.0.coeffs, b.1)));
    out
}

/// Squarefree decomposition of a monic polynomial.
fn squarefree(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.deg() > 0 {
        // c is a polynomial in x^p
        let root = ModPoly::new(
            p,
            c.coeffs.iter().step_by(p as usize).copied().collect(),
        );
        for (g, m) in squarefree(&root.monic()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial.
fn distinct_degree(f: &ModPoly) -> Vec<(usize, ModPoly)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut h = f.clone();
    let x = ModPoly::x(p);
    let mut xq = x.clone();
    let mut d = 0;
    while h.deg() >= 2 * (d + 1) {
        d += 1;
        xq = xq.pow_mod(p as u128, &h);
        let g = h.gcd(&xq.sub(&x));
        if g.deg() > 0 {
            h = h.div_rem(&g).0;
            xq = xq.rem(&h);
            out.push((d, g));
        }
    }
    if h.deg() > 0 {
        out.push((h.deg(), h.monic()));
    }
    out
}

/// Split a monic squarefree product of degree-`d` irreducibles.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let p = f.p;
    if f.deg() == d {
        return vec![f.monic()];
    }
    loop {
        let a = ModPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            a.pow_mod(e, f).sub(&ModPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_rem(&g).0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}
