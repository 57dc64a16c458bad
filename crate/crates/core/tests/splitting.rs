mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use smallgen::arith::modp::factor_degrees;
use smallgen::arith::primes::primes_up_to;
use smallgen::field::{field_from_i64s, quadratic_field};
use smallgen::splitting::*;

#[test]
fn degree_sums_match_the_degree() {
    let fields = [
        field_from_i64s(&[1, 0, 1]).unwrap(),
        field_from_i64s(&[41, 1, 1]).unwrap(),
        field_from_i64s(&[-1, -1, 0, 1]).unwrap(),
        field_from_i64s(&[-2, 0, 0, 0, 1]).unwrap(),
        quadratic_field(-7).unwrap(),
    ];
    for k in &fields {
        for p in primes_up_to(500) {
            let t = splitting_type(k, p).unwrap();
            if t.method != SplitMethod::Unsupported {
                assert_eq!(t.degree_sum() as usize, k.degree(), "{t}");
            }
            if t.method == SplitMethod::Generic {
                assert!(t.pairs.iter().all(|&(e, _)| e == 1));
            }
        }
    }
}

#[test]
fn split_completely_iff_all_linear_pattern() {
    let k = field_from_i64s(&[-1, -1, 0, 1]).unwrap();
    for p in primes_up_to(2000) {
        if (k.poly_disc() % BigInt::from(p)) == BigInt::from(0) {
            continue;
        }
        let t = splitting_type(&k, p).unwrap();
        let pattern = factor_degrees(k.defining_poly(), p).unwrap();
        assert_eq!(t.splits_completely(3), pattern == vec![1, 1, 1], "p = {p}");
    }
}

#[test]
fn census_totals_count_unramified_primes() {
    for coeffs in [vec![1, 0, 1], vec![-1, -1, 0, 1], vec![41, 1, 1], vec![-2, 0, 0, 0, 1]] {
        let k = field_from_i64s(&coeffs).unwrap();
        for x in [2u64, 10, 100, 3000] {
            let c = frobenius_census(&k, x).unwrap();
            let unramified = primes_up_to(x)
                .into_iter()
                .filter(|&p| (k.poly_disc() % BigInt::from(p)) != BigInt::from(0))
                .count() as u64;
            assert_eq!(c.counts.values().sum::<u64>(), unramified);
            assert_eq!(c.total, unramified);
            let ones = vec![1; k.degree()];
            assert_eq!(c.counts.get(&ones).copied().unwrap_or(0), count_split_primes(&k, x).unwrap());
        }
    }
}

#[test]
fn split_counts_are_monotone() {
    let k = quadratic_field(-7).unwrap();
    let mut last = 0;
    for x in (2..600).step_by(7) {
        let n = count_split_primes(&k, x).unwrap();
        assert!(n >= last);
        last = n;
    }
}

#[test]
fn gaussian_split_primes_are_one_mod_four() {
    let k = field_from_i64s(&[1, 0, 1]).unwrap();
    let x = 5000;
    let direct = primes_up_to(x).into_iter().filter(|p| p % 4 == 1).count() as u64;
    assert_eq!(count_split_primes(&k, x).unwrap(), direct);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subset_search_matches_brute_force(
        picks in prop::collection::btree_set(0usize..25, 1..10),
        t in 1u64..5_000_000,
    ) {
        let all = primes_up_to(100);
        let primes: Vec<u64> = picks.into_iter().map(|i| all[i]).collect();
        let threshold = BigInt::from(t);
        let got = min_product_subset(&primes, &|n: &BigInt| Ok(n > &threshold)).unwrap();
        prop_assert_eq!(got, brute_force_min_subset(&primes, &threshold));
    }
}

#[test]
fn prime_sets_satisfy_the_threshold() {
    for &m in QUADRATIC_TEST_FIELDS {
        let k = quadratic_field(m).unwrap();
        let set = find_prime_set(&k, 200).unwrap();
        assert!(set.verify().unwrap());
        let threshold = k.order_constant_pow_d(512);
        assert!(threshold.hi() < &num_rational::BigRational::from_integer(set.product.clone()));
        for pl in &set.places {
            assert!(has_degree_one_place(&k, pl.p));
        }
    }
    let k = field_from_i64s(&[-1, -1, 0, 1]).unwrap();
    let set = find_prime_set(&k, 200).unwrap();
    assert!(set.verify().unwrap());
}
