use std::fmt::Debug;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::Num;

/// Commutative ring element usable as a polynomial or matrix entry.
pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + Debug {}

/// Scalars whose `Div` is exact field division.
///
/// `BigInt` implements `Num` with truncating division, so the marker has to
/// be opted into per type.
pub trait FieldScalar: Scalar {}

impl FieldScalar for BigRational {}
impl FieldScalar for f64 {}
impl FieldScalar for f32 {}
