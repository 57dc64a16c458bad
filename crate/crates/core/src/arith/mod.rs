//! Exact arithmetic: integers, rationals, polynomials, matrices, lattices,
//! mod-p factorization, real root counting, certified roots and intervals.

pub mod interval;
pub mod irreducible;
pub mod lattice;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod primes;
pub mod resultant;
pub mod roots;
pub mod sturm;

pub use interval::Interval;
pub use irreducible::{irreducibility_check, Irreducibility};
pub use matrix::Matrix;
pub use modp::{factor_mod_p, ModPoly};
pub use poly::Poly;
pub use resultant::{poly_discriminant, poly_resultant};
pub use roots::{certified_roots, CertifiedRoot};
pub use sturm::{real_root_count, real_roots_in_open_interval};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Exact conversion of a finite `f64` to a rational.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// `true` if `n` is the square of an integer.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `true` if the rational `q` is the square of a rational.
pub fn is_rational_square(q: &BigRational) -> bool {
    is_square(q.numer()) && is_square(q.denom())
}
