use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{lattice, Matrix};
use crate::field::{Field, FieldElement};
use crate::splitting::DegreeOnePlace;
use crate::{Error, RatMatrix, RealMatrix, Result};

/// A fractional ideal of the working order, as a lattice in power-basis
/// coordinates.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    field: Field,
    basis: RatMatrix,
    norm: BigRational,
}

impl PartialEq for IdealLattice {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.basis == other.basis
    }
}

impl IdealLattice {
    /// Lattice spanned by `rows`, reduced to HNF.
    pub fn from_rows(field: &Field, rows: &RatMatrix) -> Result<Self> {
        let basis = lattice::hnf(rows)?;
        let norm = lattice::index(field.order_basis(), &basis);
        Ok(IdealLattice {
            field: field.clone(),
            basis,
            norm,
        })
    }

    /// The working order itself.
    pub fn unit(field: &Field) -> Self {
        IdealLattice {
            field: field.clone(),
            basis: field.order_basis().clone(),
            norm: BigRational::one(),
        }
    }

    /// Principal ideal `α·O`.
    pub fn principal(alpha: &FieldElement) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::from_rows(alpha.field(), &alpha.mul_lattice(alpha.field().order_basis()))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// `[O : I]`, extended multiplicatively to fractional ideals.
    pub fn norm(&self) -> &BigRational {
        &self.norm
    }

    pub fn is_unit(&self) -> bool {
        self.basis == *self.field.order_basis()
    }

    pub fn contains(&self, alpha: &FieldElement) -> bool {
        lattice::integral_coordinates(&self.basis, alpha.coords()).is_some()
    }

    /// Element with the given integer coordinates in this basis.
    pub fn element(&self, coords: &[BigInt]) -> FieldElement {
        let v: Vec<BigRational> = coords.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        FieldElement::new(&self.field, self.basis.vec_mul(&v)).expect("length matches degree")
    }

    pub fn basis_elements(&self) -> Vec<FieldElement> {
        self.basis
            .rows()
            .map(|r| FieldElement::new(&self.field, r.to_vec()).expect("length matches degree"))
            .collect()
    }
}

/// Prime ideal `pO + (β - a)O` of a degree-one place, where `β` is the
/// split generator and `a` a root of its minimal polynomial mod `p`.
pub fn prime_ideal(k: &Field, p: u64, root: u64) -> Result<IdealLattice> {
    let (beta, g) = k.split_generator();
    let pb = BigInt::from(p);
    if (g.eval(&BigInt::from(root)) % &pb) != BigInt::zero() {
        return Err(Error::domain(format!("{root} is not a root of {g} mod {p}")));
    }
    let o = k.order_basis();
    let shifted = FieldElement::new(k, beta.to_vec())?.sub(&FieldElement::from_rational(
        k,
        BigRational::from_integer(root.into()),
    ))?;
    let pq = BigRational::from_integer(pb.clone());
    let rows = o.map(|x| x * &pq).vstack(&shifted.mul_lattice(o));
    let ideal = IdealLattice::from_rows(k, &rows)?;
    if ideal.norm != pq {
        return Err(Error::domain(format!(
            "({p}, β - {root}) has norm {} rather than {p}; not a degree-one place",
            ideal.norm
        )));
    }
    Ok(ideal)
}

/// Prime ideal of a designated place.
pub fn place_ideal(k: &Field, place: &DegreeOnePlace) -> Result<IdealLattice> {
    prime_ideal(k, place.p, place.root)
}

/// Product ideal, spanned by pairwise products of basis elements.
pub fn ideal_product(a: &IdealLattice, b: &IdealLattice) -> Result<IdealLattice> {
    if !a.field.same_as(&b.field) {
        return Err(Error::FieldMismatch);
    }
    let mut rows = Vec::new();
    for x in a.basis_elements() {
        for y in b.basis_elements() {
            rows.push(x.mul(&y)?.coords().to_vec());
        }
    }
    IdealLattice::from_rows(&a.field, &Matrix::from_rows(rows))
}

/// Inverse `(O : I) = ∩ b⁻¹O` over the basis elements `b` of `I`, checked
/// by `I·I⁻¹ = O`.
pub fn ideal_inverse(ideal: &IdealLattice) -> Result<IdealLattice> {
    let k = &ideal.field;
    let o = k.order_basis();
    let mut acc: Option<RatMatrix> = None;
    for b in ideal.basis_elements() {
        let l = b.inverse()?.mul_lattice(o);
        acc = Some(match acc {
            None => lattice::hnf(&l)?,
            Some(a) => lattice::intersect(&a, &l)?,
        });
    }
    let inv = IdealLattice::from_rows(k, &acc.expect("nonempty basis"))?;
    if !ideal_product(ideal, &inv)?.is_unit() {
        return Err(Error::internal("ideal is not invertible in the working order"));
    }
    Ok(inv)
}

/// Minkowski embedding of the basis: real places as one coordinate, complex
/// places as `(Re, Im)`. Returns the matrix and `|det|`.
pub fn minkowski_lattice(ideal: &IdealLattice) -> Result<(RealMatrix, f64)> {
    let m = minkowski_rows(&ideal.field, &ideal.basis)?;
    let covol = m.det_pivoted().abs();
    Ok((m, covol))
}

pub(crate) fn minkowski_rows(k: &Field, basis: &RatMatrix) -> Result<RealMatrix> {
    let (r, s) = k.signature();
    let rows = basis
        .rows()
        .map(|row| {
            let e = FieldElement::new(k, row.to_vec())?.embeddings_f64()?;
            let mut v: Vec<f64> = e[..r].iter().map(|z| z.re).collect();
            for z in &e[r..r + s] {
                v.push(z.re);
                v.push(z.im);
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}

/// `2^-s |disc|^(1/2) N(I)`: the covolume predicted for the Minkowski
/// lattice of `I`.
pub fn expected_covolume(ideal: &IdealLattice) -> f64 {
    let s = ideal.field.signature().1 as i32;
    let disc = ideal.field.order_disc().abs().to_f64().unwrap_or(f64::INFINITY);
    2f64.powi(-s) * disc.sqrt() * ideal.norm.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_from_i64s, quadratic_field};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gaussian_primes() {
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        let p5 = prime_ideal(&k, 5, 2).unwrap();
        assert_eq!(p5.basis().to_rows(), vec![vec![q(5, 1), q(0, 1)], vec![q(3, 1), q(1, 1)]]);
        assert_eq!(p5.norm(), &q(5, 1));
        assert!(p5.contains(&k.element(&[-2, 1])));
        let inv = ideal_inverse(&p5).unwrap();
        assert_eq!(inv.norm(), &q(1, 5));
        assert!(inv.contains(&FieldElement::new(&k, vec![q(2, 5), q(1, 5)]).unwrap()));
        assert!(ideal_product(&p5, &inv).unwrap().is_unit());
        let p2 = prime_ideal(&k, 2, 1).unwrap();
        assert_eq!(p2.norm(), &q(2, 1));
        assert!(p2.contains(&k.element(&[1, 1])));
        let inv2 = ideal_inverse(&p2).unwrap();
        assert!(inv2.contains(&FieldElement::new(&k, vec![q(1, 2), q(-1, 2)]).unwrap()));
        assert_eq!(ideal_product(&inv, &inv2).unwrap().norm(), &q(1, 10));
        assert!(prime_ideal(&k, 5, 1).is_err());
        let o = IdealLattice::unit(&k);
        assert_eq!(ideal_inverse(&o).unwrap(), o);
        assert_eq!(ideal_product(&p5, &o).unwrap(), p5);
    }

    #[test]
    fn heegner_prime() {
        let k = field_from_i64s(&[41, 1, 1]).unwrap();
        assert_eq!(prime_ideal(&k, 41, 0).unwrap().norm(), &q(41, 1));
    }

    #[test]
    fn covolumes() {
        let k = field_from_i64s(&[1, 0, 1]).unwrap();
        let (_, c) = minkowski_lattice(&IdealLattice::unit(&k)).unwrap();
        assert!((c - 1.0).abs() < 1e-14);
        let inv = ideal_inverse(&prime_ideal(&k, 5, 2).unwrap()).unwrap();
        assert!((minkowski_lattice(&inv).unwrap().1 - 0.2).abs() < 1e-14);
        let k = quadratic_field(2).unwrap();
        let (_, c) = minkowski_lattice(&IdealLattice::unit(&k)).unwrap();
        assert!((c - 8f64.sqrt()).abs() < 1e-14);
    }
}
