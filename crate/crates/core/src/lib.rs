//! Small-height generators of number fields.
//!
//! The crate computes generators of algebraic number fields whose absolute
//! multiplicative Weil height is bounded by invariants of the field, and
//! emits certificates that can be re-checked from scratch:
//!
//! * [`arith`]: big-integer polynomials, resultants, mod-p factorization,
//!   Sturm chains, certified complex roots and rational interval arithmetic.
//! * [`field`]: number fields, element arithmetic, minimal polynomials,
//!   the field constant and archimedean embeddings.
//! * [`heights`]: the Weil height by the Mahler-measure route and by the
//!   product over places.
//! * [`splitting`]: splitting of rational primes, prime-set selection and
//!   empirical Chebotarev diagnostics.
//! * [`adelic`]: ideal lattices, adelic box measures, box enumeration and
//!   the two generator searches.
//! * [`quadratic`]: exact heights of imaginary quadratic generators and the
//!   sharpness check.
//!
//! Core routines are generic over the scalar type through [`Scalar`] and
//! [`FieldScalar`]; the aliases below fix the concrete types used by the
//! number-theoretic layers.

pub mod adelic;
pub mod arith;
pub mod error;
pub mod field;
pub mod heights;
pub mod quadratic;
pub mod report;
pub mod spec;
pub mod splitting;

pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{FieldScalar, Scalar};

/// Arbitrary precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary precision rational with positive denominator in lowest terms.
pub type Rational = num_rational::BigRational;
/// Polynomial with integer coefficients.
pub type IntPoly = arith::Poly<Integer>;
/// Polynomial with rational coefficients.
pub type RatPoly = arith::Poly<Rational>;
/// Dense rational matrix.
pub type RatMatrix = arith::Matrix<Rational>;
/// Dense double precision matrix.
pub type RealMatrix = arith::Matrix<f64>;
/// Certified real number: a closed interval with rational endpoints.
pub type CertifiedReal = arith::Interval;

/// Default working precision in bits for certified reals.
pub const DEFAULT_PRECISION: u32 = 128;
/// Precision cap; certification that needs more than this fails.
pub const MAX_PRECISION: u32 = 4096;
