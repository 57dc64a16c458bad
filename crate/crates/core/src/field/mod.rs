//! Number fields `Q[x]/(f)` with a working order, exact element arithmetic
//! and certified archimedean embeddings.

mod element;
mod embed;

pub use element::FieldElement;
pub use embed::PlaceValue;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::primes::squarefree_decompose;
use crate::arith::roots::certified_roots_from;
use crate::arith::{
    irreducibility_check, is_rational_square, lattice, poly_discriminant, real_root_count, CertifiedRoot,
    Interval, Irreducibility, Matrix,
};
use crate::{Error, IntPoly, RatMatrix, Result, DEFAULT_PRECISION};

/// Shared handle to a field; elements keep one of these.
pub type Field = Arc<NumberField>;

#[derive(Debug)]
pub struct NumberField {
    defining_poly: IntPoly,
    poly_disc: BigInt,
    field_disc: BigInt,
    disc_is_field_exact: bool,
    order_basis: RatMatrix,
    order_disc: BigInt,
    signature: (usize, usize),
    irreducibility: Irreducibility,
    /// Power-basis coordinates of the generator used for splitting data.
    split_generator: Vec<BigRational>,
    split_generator_poly: IntPoly,
    roots: Mutex<BTreeMap<u32, Arc<Vec<CertifiedRoot>>>>,
}

/// Optional inputs to [`make_field`].
#[derive(Clone, Debug, Default)]
pub struct FieldOptions {
    pub field_disc: Option<BigInt>,
    /// Rows are order basis elements in power-basis coordinates.
    pub basis: Option<Vec<Vec<BigRational>>>,
    /// Accept a defining polynomial whose irreducibility is not proved.
    pub allow_unverified: bool,
}

/// Build a number field from the ascending coefficients of a monic
/// irreducible polynomial.
pub fn make_field(coeffs: &[BigInt], opts: &FieldOptions) -> Result<Field> {
    let f = IntPoly::new(coeffs.to_vec());
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::domain("defining polynomial must have degree ≥ 1"))?;
    if !f.lc().is_one() {
        return Err(Error::domain("defining polynomial must be monic"));
    }
    let irreducibility = irreducibility_check(&f);
    match &irreducibility {
        Irreducibility::ProvedReducible(g) => {
            return Err(Error::domain(format!("defining polynomial is reducible: factor {g}")));
        }
        Irreducibility::Unknown if !opts.allow_unverified => {
            return Err(Error::Unverified(format!("{f}")));
        }
        _ => {}
    }
    let poly_disc = poly_discriminant(&f)?;
    let r = real_root_count(&f)?;
    let signature = (r, (d - r) / 2);

    let (order_basis, field_disc, exact) = if d == 1 {
        (Matrix::identity(1), BigInt::one(), true)
    } else if d == 2 {
        let (basis, disc) = quadratic_maximal_order(&f, &poly_disc);
        if let Some(given) = &opts.field_disc {
            if given != &disc {
                return Err(Error::domain(format!(
                    "supplied discriminant {given} differs from the field discriminant {disc}"
                )));
            }
        }
        if let Some(b) = &opts.basis {
            let supplied = checked_order(&f, b)?;
            if !lattice::contains(&basis, &supplied) {
                return Err(Error::domain("supplied basis is not contained in the maximal order"));
            }
        }
        (basis, disc, true)
    } else {
        let basis = match &opts.basis {
            Some(b) => checked_order(&f, b)?,
            None => Matrix::identity(d),
        };
        match &opts.field_disc {
            Some(given) => (basis, given.clone(), true),
            None => {
                let order_disc = order_discriminant(&poly_disc, &basis)?;
                (basis, order_disc, false)
            }
        }
    };
    let order_disc = order_discriminant(&poly_disc, &order_basis)?;
    if field_disc.is_zero() || field_disc.abs() > order_disc.abs() {
        return Err(Error::domain("field discriminant exceeds the order discriminant"));
    }
    let ratio = BigRational::new(order_disc.clone(), field_disc.clone());
    if !is_rational_square(&ratio) {
        return Err(Error::domain(format!(
            "order discriminant {order_disc} over field discriminant {field_disc} is not a square"
        )));
    }
    let (split_generator, split_generator_poly) = if d == 2 {
        let row = order_basis.row(1).to_vec();
        let g = element::min_poly_of_coords(&f, &row);
        (row, g)
    } else {
        let mut theta = vec![BigRational::zero(); d];
        if d > 1 {
            theta[1] = BigRational::one();
        } else {
            // degree one: the root of x - a is the rational a
            theta[0] = BigRational::from_integer(-f.coeff(0));
        }
        (theta, f.clone())
    };
    Ok(Arc::new(NumberField {
        defining_poly: f,
        poly_disc,
        field_disc,
        disc_is_field_exact: exact,
        order_basis,
        order_disc,
        signature,
        irreducibility,
        split_generator,
        split_generator_poly,
        roots: Mutex::new(BTreeMap::new()),
    }))
}

/// Convenience constructor from machine integers.
pub fn field_from_i64s(coeffs: &[i64]) -> Result<Field> {
    let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
    make_field(&c, &FieldOptions::default())
}

/// `Q(√m)` for a squarefree `m ≠ 0, 1`, defined by `x² - m`.
pub fn quadratic_field(m: i64) -> Result<Field> {
    field_from_i64s(&[-m, 0, 1])
}

fn order_discriminant(poly_disc: &BigInt, basis: &RatMatrix) -> Result<BigInt> {
    let det = basis.det();
    let disc = BigRational::from_integer(poly_disc.clone()) * &det * &det;
    if !disc.is_integer() {
        return Err(Error::domain("order basis does not span an order"));
    }
    Ok(disc.to_integer())
}

/// Maximal order of a quadratic field and its discriminant.
fn quadratic_maximal_order(f: &IntPoly, poly_disc: &BigInt) -> (RatMatrix, BigInt) {
    let b = f.coeff(1);
    let (core, sq) = squarefree_decompose(poly_disc);
    let q = |n: BigInt, d: BigInt| BigRational::new(n, d);
    // √core = (2θ + b)/sq
    let (omega, disc) = if core.mod_floor_4() == 1 {
        // ω = (1 + √core)/2 = (sq + b + 2θ)/(2 sq)
        (
            vec![q(&sq + &b, BigInt::from(2) * &sq), q(BigInt::one(), sq.clone())],
            core.clone(),
        )
    } else {
        (
            vec![q(b.clone(), sq.clone()), q(BigInt::from(2), sq.clone())],
            core.clone() * 4,
        )
    };
    let rows = Matrix::from_rows(vec![vec![BigRational::one(), BigRational::zero()], omega]);
    (lattice::hnf(&rows).expect("full rank"), disc)
}

trait Mod4 {
    fn mod_floor_4(&self) -> i64;
}

impl Mod4 for BigInt {
    fn mod_floor_4(&self) -> i64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.mod_floor(&BigInt::from(4)).to_i64().unwrap()
    }
}

/// Validate a supplied order basis: full rank, contains 1, closed under
/// multiplication, integral elements.
fn checked_order(f: &IntPoly, rows: &[Vec<BigRational>]) -> Result<RatMatrix> {
    let d = f.deg();
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(Error::domain(format!("basis must be {d}×{d}")));
    }
    let basis = lattice::hnf(&Matrix::from_rows(rows.to_vec()))?;
    let mut one = vec![BigRational::zero(); d];
    one[0] = BigRational::one();
    if lattice::integral_coordinates(&basis, &one).is_none() {
        return Err(Error::domain("basis does not contain 1"));
    }
    for i in 0..d {
        for j in i..d {
            let prod = element::mul_coords(f, basis.row(i), basis.row(j));
            if lattice::integral_coordinates(&basis, &prod).is_none() {
                return Err(Error::domain("basis is not closed under multiplication"));
            }
        }
    }
    Ok(basis)
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.defining_poly.deg()
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.defining_poly
    }

    pub fn poly_disc(&self) -> &BigInt {
        &self.poly_disc
    }

    /// Field discriminant when exact, else the order discriminant.
    pub fn field_disc(&self) -> &BigInt {
        &self.field_disc
    }

    pub fn disc_is_field_exact(&self) -> bool {
        self.disc_is_field_exact
    }

    /// Discriminant of the working order.
    pub fn order_disc(&self) -> &BigInt {
        &self.order_disc
    }

    /// `true` when the working order is known to be maximal.
    pub fn order_is_maximal(&self) -> bool {
        self.disc_is_field_exact && self.order_disc == self.field_disc
    }

    pub fn order_basis(&self) -> &RatMatrix {
        &self.order_basis
    }

    /// `(r, s)`: real places and complex places.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn irreducibility(&self) -> &Irreducibility {
        &self.irreducibility
    }

    /// Number of archimedean places, `r + s`.
    pub fn place_count(&self) -> usize {
        self.signature.0 + self.signature.1
    }

    /// Local degree of archimedean place `v`.
    pub fn local_degree(&self, v: usize) -> u32 {
        if v < self.signature.0 {
            1
        } else {
            2
        }
    }

    /// Monic generator `β` of the order used to describe degree-one places:
    /// the second basis element of the maximal order for quadratic fields,
    /// `θ` otherwise. Returns its power-basis coordinates and minimal
    /// polynomial.
    pub fn split_generator(&self) -> (&[BigRational], &IntPoly) {
        (&self.split_generator, &self.split_generator_poly)
    }

    /// All roots of the defining polynomial, isolated to radius `2^-bits`
    /// or better: real roots ascending, then representatives of the complex
    /// places ascending by imaginary part, then their conjugates.
    pub fn roots(&self, bits: u32) -> Result<Arc<Vec<CertifiedRoot>>> {
        let bits = bits.max(DEFAULT_PRECISION);
        if let Some(r) = self.roots.lock().unwrap().range(bits..).next() {
            return Ok(r.1.clone());
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let roots = certified_roots_from(&self.defining_poly, &target, bits + 8)?;
        let roots = Arc::new(roots);
        self.roots.lock().unwrap().insert(bits, roots.clone());
        Ok(roots)
    }

    /// Roots of the archimedean places (one per place).
    pub fn place_roots(&self, bits: u32) -> Result<Vec<CertifiedRoot>> {
        let all = self.roots(bits)?;
        Ok(all[..self.place_count()].to_vec())
    }

    /// `((2/π)^(2s) |disc|)^(1/2d)` for the given discriminant.
    fn constant_for(&self, disc: &BigInt, prec: u32) -> Interval {
        let d = self.degree() as u32;
        let s = self.signature.1 as u32;
        let two_over_pi = Interval::from_integer(2, prec)
            .div(&Interval::pi(prec + 16))
            .expect("pi > 0");
        let base = &two_over_pi.powi(2 * s) * &Interval::from_integer(disc.abs(), prec);
        base.nth_root(2 * d).expect("positive")
    }

    /// `c_k = (2/π)^(s/d) |Δ_k|^(1/2d)` from the field discriminant.
    pub fn field_constant(&self, prec: u32) -> Interval {
        self.constant_for(&self.field_disc, prec)
    }

    /// The same constant computed from the working-order discriminant; this
    /// is the Minkowski threshold for boxes built on the working order.
    pub fn order_constant(&self, prec: u32) -> Interval {
        self.constant_for(&self.order_disc, prec)
    }

    /// `c^d = (2/π)^s |disc|^(1/2)` for the working order.
    pub fn order_constant_pow_d(&self, prec: u32) -> Interval {
        let s = self.signature.1 as u32;
        let two_over_pi = Interval::from_integer(2, prec)
            .div(&Interval::pi(prec + 16))
            .expect("pi > 0");
        let base = &two_over_pi.powi(2 * s) * &Interval::from_integer(self.order_disc.abs(), prec);
        base.sqrt().expect("positive")
    }

    /// Same-field test used by element operations.
    pub fn same_as(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other)
            || (self.defining_poly == other.defining_poly && self.order_basis == other.order_basis)
    }
}

/// Field constant of `k`, see [`NumberField::field_constant`].
pub fn field_constant(k: &NumberField) -> Interval {
    k.field_constant(DEFAULT_PRECISION)
}
