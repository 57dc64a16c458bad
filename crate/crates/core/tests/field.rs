mod common;

use common::*;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smallgen::field::*;
use smallgen::RatMatrix;

fn test_fields() -> Vec<Field> {
    let mut out: Vec<Field> = QUADRATIC_TEST_FIELDS.iter().map(|&m| quadratic_field(m).unwrap()).collect();
    for c in [vec![-2, 0, 0, 1], vec![-1, -1, 0, 1], vec![1, 1, 1, 1, 1], vec![-3, 0, 0, 0, 0, 1], vec![41, 1, 1]] {
        out.push(field_from_i64s(&c).unwrap());
    }
    out
}

#[test]
fn signature_accounts_for_the_degree() {
    for k in test_fields() {
        let (r, s) = k.signature();
        assert_eq!(r + 2 * s, k.degree());
        if k.degree() == 2 {
            let ratio = BigRational::new(k.poly_disc().clone(), k.field_disc().clone());
            assert!(ratio.is_integer() && smallgen::arith::is_square(&ratio.to_integer()));
        }
    }
}

#[test]
fn min_poly_annihilates_multiplication_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in test_fields() {
        for _ in 0..10 {
            let a = random_element(&k, &mut rng, false);
            let f = a.min_poly();
            let m = a.multiplication_matrix();
            let d = k.degree();
            let mut acc = vec![vec![BigRational::zero(); d]; d];
            let mut power = RatMatrix::identity(d);
            for c in f.coeffs() {
                let c = BigRational::from_integer(c.clone());
                for (i, row) in power.rows().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        acc[i][j] += x * &c;
                    }
                }
                power = power.mul(&m);
            }
            assert!(acc.iter().flatten().all(Zero::is_zero), "{a}");
            assert_eq!(d % f.deg(), 0);
            assert!(f.lc().is_positive());
        }
    }
}

#[test]
fn norm_matches_embeddings() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in test_fields() {
        for _ in 0..15 {
            let a = random_element(&k, &mut rng, true);
            let n = a.norm().to_f64().unwrap();
            let prod: f64 = a
                .embed()
                .unwrap()
                .iter()
                .map(|pv| pv.abs.value().powi(pv.local_degree as i32))
                .product();
            assert!((n.abs() - prod).abs() <= 1e-9 * prod.max(1.0), "{a}: {n} vs {prod}");
        }
    }
}

#[test]
fn inverse_and_field_mismatch() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let k = quadratic_field(-163).unwrap();
    for _ in 0..30 {
        let a = random_element(&k, &mut rng, true);
        let one = a.mul(&a.inverse().unwrap()).unwrap();
        assert_eq!(one, FieldElement::one(&k));
    }
    let other = quadratic_field(2).unwrap();
    assert!(FieldElement::one(&k).add(&FieldElement::one(&other)).is_err());
    assert!(FieldElement::zero(&k).inverse().is_err());
    assert!(FieldElement::zero(&k).coords().iter().all(Zero::is_zero));
}
