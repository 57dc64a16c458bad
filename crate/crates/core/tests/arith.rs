use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use smallgen::arith::resultant::is_squarefree;
use smallgen::arith::*;
use smallgen::IntPoly;

fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_is_multiplicative(f in poly(4), g in poly(3), h in poly(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let gh = &g * &h;
        let lhs = poly_resultant(&f, &gh).unwrap();
        let rhs = poly_resultant(&f, &g).unwrap() * poly_resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factors_mod_p_multiply_back(f in poly(6), pi in 0usize..15) {
        let p = primes::primes_up_to(50)[pi];
        let fp = ModPoly::from_int_poly(&f, p);
        prop_assume!(!fp.is_zero());
        let factors = factor_mod_p(&f, p).unwrap();
        let mut prod = ModPoly::new(p, vec![1]);
        let mut deg = 0;
        for (g, e) in &factors {
            prop_assert!(g.is_monic());
            for _ in 0..*e {
                prod = prod.mul(g);
            }
            deg += g.deg() * *e as usize;
        }
        prop_assert_eq!(prod, fp.monic());
        prop_assert_eq!(deg, fp.deg());
    }

    #[test]
    fn real_root_count_matches_sign_changes(
        roots in prop::collection::btree_set(-100i64..=100, 1..=4),
        c in 1i64..50,
        complex in any::<bool>(),
    ) {
        // distinct integer roots, optionally times x² + c
        let mut f = IntPoly::from_i64s(&[1]);
        for r in &roots {
            f = &f * &IntPoly::from_i64s(&[-r, 1]);
        }
        if complex {
            f = &f * &IntPoly::from_i64s(&[c, 0, 1]);
        }
        let mut changes = 0;
        let mut last = f.eval(&BigInt::from(-1000));
        for x in -201i64..=201 {
            // 2^deg f((2x + 1) / 2): half-integers are never roots
            let num = 2 * x + 1;
            let val: BigInt = f.coeffs().iter().enumerate().map(|(i, a)| {
                a * BigInt::from(num).pow(i as u32) * BigInt::from(2).pow((f.deg() - i) as u32)
            }).sum();
            if !val.is_zero() && (val < BigInt::zero()) != (last < BigInt::zero()) {
                changes += 1;
            }
            if !val.is_zero() {
                last = val;
            }
        }
        prop_assert_eq!(real_root_count(&f).unwrap(), changes);
    }

    #[test]
    fn certified_root_disks(f in poly(6)) {
        prop_assume!(f.deg() >= 1 && is_squarefree(&f));
        let roots = certified_roots(&f, 1e-12).unwrap();
        prop_assert_eq!(roots.len(), f.deg());
        prop_assert_eq!(roots.iter().filter(|r| r.is_real).count(), real_root_count(&f).unwrap());
        for (i, a) in roots.iter().enumerate() {
            prop_assert!(a.radius_f64() <= 1e-12);
            for b in &roots[i + 1..] {
                let dist = (a.approx() - b.approx()).norm();
                prop_assert!(dist > a.radius_f64() + b.radius_f64());
            }
        }
    }
}

#[test]
fn irreducibility_examples() {
    assert!(irreducibility_check(&IntPoly::from_i64s(&[41, 1, 1])).is_irreducible());
    assert!(irreducibility_check(&IntPoly::from_i64s(&[1, 0, 0, 0, 1])).is_irreducible());
    match irreducibility_check(&IntPoly::from_i64s(&[-1, 0, 1])) {
        Irreducibility::ProvedReducible(g) => assert_eq!(g.deg(), 1),
        other => panic!("{other:?}"),
    }
}
