//! Full-rank lattices in `Q^n` given by rational row bases.
//!
//! Bases are kept in Hermite normal form: lower triangular (row `i` has
//! support in columns `0..=i`), positive diagonal, and entries left of the
//! diagonal reduced into `[0, diagonal)`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{common_denominator, Matrix};
use crate::{Error, Result};

/// Hermite normal form of the integer lattice spanned by `rows`.
///
/// Returns an `n × n` basis; fails if the rows do not span a full-rank
/// lattice.
pub fn hnf_integer(rows: &[Vec<BigInt>], n: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut pool: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut basis: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    for col in (0..n).rev() {
        // gcd-eliminate column `col` across the pool
        loop {
            let mut nz: Vec<usize> = (0..pool.len()).filter(|&i| !pool[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by(|&a, &b| pool[a][col].abs().cmp(&pool[b][col].abs()));
            let p = nz[0];
            let pivot_row = pool[p].clone();
            for &i in &nz[1..] {
                let q = pool[i][col].div_floor(&pivot_row[col]);
                for (x, y) in pool[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
            pool.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
        let Some(p) = (0..pool.len()).find(|&i| !pool[i][col].is_zero()) else {
            return Err(Error::domain("lattice is not of full rank"));
        };
        let mut row = pool.swap_remove(p);
        if row[col].is_negative() {
            row.iter_mut().for_each(|x| *x = -x.clone());
        }
        basis[col] = row;
    }
    if pool.iter().any(|r| r.iter().any(|x| !x.is_zero())) {
        return Err(Error::internal("HNF left residual rows"));
    }
    // reduce entries left of the diagonal
    for i in 0..n {
        for j in (0..i).rev() {
            let q = basis[i][j].div_floor(&basis[j][j]);
            if q.is_zero() {
                continue;
            }
            let bj = basis[j].clone();
            for (x, y) in basis[i].iter_mut().zip(&bj) {
                *x -= &q * y;
            }
        }
    }
    Ok(basis)
}

/// Hermite normal form of the rational lattice spanned by the rows of `m`.
pub fn hnf(m: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    let n = m.ncols();
    let den = common_denominator(m.rows().flatten());
    let denq = BigRational::from_integer(den.clone());
    let int_rows: Vec<Vec<BigInt>> = m
        .rows()
        .map(|r| r.iter().map(|x| (x * &denq).to_integer()).collect())
        .collect();
    let h = hnf_integer(&int_rows, n)?;
    Ok(Matrix::from_rows(
        h.into_iter()
            .map(|r| r.into_iter().map(|x| BigRational::new(x, den.clone())).collect())
            .collect(),
    ))
}

/// Covolume of a full-rank square basis.
pub fn covolume(basis: &Matrix<BigRational>) -> BigRational {
    basis.det().abs()
}

/// Lattice sum `L1 + L2`.
pub fn sum(a: &Matrix<BigRational>, b: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    hnf(&a.vstack(b))
}

/// Dual lattice `{y : <x, y> ∈ Z for all x ∈ L}`.
pub fn dual(basis: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::domain("singular lattice basis"))?;
    hnf(&inv.transpose())
}

/// Intersection of two full-rank lattices, via `(L1* + L2*)*`.
pub fn intersect(a: &Matrix<BigRational>, b: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    dual(&sum(&dual(a)?, &dual(b)?)?)
}

/// Coordinates of `v` in the given basis; `None` unless all are integers.
pub fn integral_coordinates(basis: &Matrix<BigRational>, v: &[BigRational]) -> Option<Vec<BigInt>> {
    let inv = basis.inverse()?;
    let c = inv.vec_mul(v);
    c.iter()
        .all(|x| x.is_integer())
        .then(|| c.into_iter().map(|x| x.to_integer()).collect())
}

/// `true` if every row of `sub` lies in the lattice spanned by `sup`.
pub fn contains(sup: &Matrix<BigRational>, sub: &Matrix<BigRational>) -> bool {
    sub.rows().all(|r| integral_coordinates(sup, r).is_some())
}

/// Index `[L : M]` of a full-rank sublattice, as a rational (integral when
/// `M ⊆ L`).
pub fn index(l: &Matrix<BigRational>, m: &Matrix<BigRational>) -> BigRational {
    covolume(m) / covolume(l)
}
