use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, NumberField};
use crate::arith::{lattice, Matrix};
use crate::{Error, IntPoly, RatMatrix, RatPoly, Result};

/// Element of a number field in power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coords: Vec<BigRational>,
}

fn modulus(f: &IntPoly) -> RatPoly {
    f.to_rational()
}

fn to_coords(p: &RatPoly, d: usize) -> Vec<BigRational> {
    (0..d).map(|i| p.coeff(i)).collect()
}

pub(super) fn mul_coords(f: &IntPoly, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let pa = RatPoly::new(a.to_vec());
    let pb = RatPoly::new(b.to_vec());
    to_coords(&(&pa * &pb).rem(&modulus(f)), f.deg())
}

/// Minimal polynomial of the element with the given coordinates, primitive
/// with positive leading coefficient.
pub(super) fn min_poly_of_coords(f: &IntPoly, coords: &[BigRational]) -> IntPoly {
    let d = f.deg();
    let mut one = vec![BigRational::zero(); d];
    one[0] = BigRational::one();
    // power stack 1, α, α², ... until the first linear dependence
    let mut powers: Vec<Vec<BigRational>> = vec![one];
    loop {
        let next = mul_coords(f, powers.last().unwrap(), coords);
        powers.push(next);
        let m = Matrix::from_rows(powers.clone());
        let kernel = m.left_kernel();
        if let Some(v) = kernel.into_iter().next() {
            // the dependence involves the newest power with a nonzero coefficient
            return RatPoly::new(v).to_primitive_integer();
        }
        assert!(powers.len() <= d + 1, "power stack exceeded the degree");
    }
}

impl FieldElement {
    pub fn new(field: &Field, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::domain(format!(
                "expected {} coordinates, got {}",
                field.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement {
            field: field.clone(),
            coords,
        })
    }

    pub fn from_i64s(field: &Field, coords: &[i64]) -> Result<Self> {
        Self::new(
            field,
            coords.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    /// Element with the given coordinates in the working-order basis.
    pub fn from_order_coords(field: &Field, c: &[BigInt]) -> Result<Self> {
        let v: Vec<BigRational> = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        Self::new(field, field.order_basis().vec_mul(&v))
    }

    pub fn from_rational(field: &Field, q: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = q;
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_rational(field, BigRational::zero())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    /// The generator `θ` (a root of the defining polynomial).
    pub fn theta(field: &Field) -> Self {
        if field.degree() == 1 {
            return Self::from_rational(field, BigRational::from_integer(-field.defining_poly().coeff(0)));
        }
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[1] = BigRational::one();
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `true` if the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coords(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coords(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect()))
    }

    pub fn neg(&self) -> Self {
        self.with_coords(self.coords.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coords(mul_coords(self.field.defining_poly(), &self.coords, &other.coords)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.with_coords(self.coords.iter().map(|a| a * q).collect())
    }

    /// Inverse through the extended gcd with the defining polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = modulus(self.field.defining_poly());
        let (g, s, _) = self.as_poly().ext_gcd(&f);
        if g.deg() != 0 {
            return Err(Error::internal("defining polynomial is not irreducible"));
        }
        Ok(self.with_coords(to_coords(&s.rem(&f), self.field.degree())))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(&self.field), |acc, _| acc.mul(self).expect("same field"))
    }

    fn with_coords(&self, coords: Vec<BigRational>) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    /// Matrix of multiplication by `self` on the power basis: row `j` holds
    /// the coordinates of `self·θ^j`.
    pub fn multiplication_matrix(&self) -> RatMatrix {
        let d = self.field.degree();
        let f = self.field.defining_poly();
        let rows = (0..d)
            .map(|j| {
                let mut e = vec![BigRational::zero(); d];
                e[j] = BigRational::one();
                mul_coords(f, &e, &self.coords)
            })
            .collect();
        Matrix::from_rows(rows)
    }

    /// Minimal polynomial over `Z`: primitive, positive leading coefficient.
    pub fn min_poly(&self) -> IntPoly {
        min_poly_of_coords(self.field.defining_poly(), &self.coords)
    }

    /// `(norm, trace)` of multiplication by `self`.
    pub fn norm_trace(&self) -> (BigRational, BigRational) {
        let m = self.multiplication_matrix();
        (m.det(), m.trace())
    }

    pub fn norm(&self) -> BigRational {
        self.multiplication_matrix().det()
    }

    /// `true` if the element lies in the working order.
    pub fn is_integral(&self) -> bool {
        lattice::integral_coordinates(self.field.order_basis(), &self.coords).is_some()
    }

    /// Coordinates in the working-order basis (rational in general).
    pub fn order_coords(&self) -> Vec<BigRational> {
        self.field
            .order_basis()
            .inverse()
            .expect("order basis is invertible")
            .vec_mul(&self.coords)
    }

    /// Image of a lattice (rows in power coordinates) under multiplication
    /// by `self`.
    pub fn mul_lattice(&self, rows: &RatMatrix) -> RatMatrix {
        rows.mul(&self.multiplication_matrix())
    }

    /// Denominator ideal `{x ∈ O : x·self ∈ O}` as an HNF basis.
    pub fn denominator_ideal(&self) -> Result<RatMatrix> {
        let o = self.field.order_basis();
        let inv = self.inverse()?;
        lattice::intersect(o, &inv.mul_lattice(o))
    }

    /// Numerator ideal `self·D` where `D` is the denominator ideal.
    pub fn numerator_ideal(&self) -> Result<RatMatrix> {
        lattice::hnf(&self.mul_lattice(&self.denominator_ideal()?))
    }

    /// Index `[O : D]` of the denominator ideal.
    pub fn denominator_index(&self) -> Result<BigInt> {
        let d = self.denominator_ideal()?;
        let idx = lattice::index(self.field.order_basis(), &d);
        debug_assert!(idx.is_integer());
        Ok(idx.to_integer())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl NumberField {
    /// Element from power-basis coordinates given as machine integers.
    pub fn element(self: &Field, coords: &[i64]) -> FieldElement {
        FieldElement::from_i64s(self, coords).expect("coordinate count matches degree")
    }
}
