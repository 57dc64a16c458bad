//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallgen::adelic::*;
use smallgen::arith::primes::{is_squarefree_int, squarefree_decompose};
use smallgen::arith::Interval;
use smallgen::field::{field_from_i64s, make_field, quadratic_field, Field, FieldOptions};
use smallgen::heights::{height_embedding_route, place_logs, weil_height};
use smallgen::quadratic::*;
use smallgen::splitting::*;
use smallgen::{IntPoly, DEFAULT_PRECISION};

type Check = fn() -> Result<String, String>;

const PRIME_BOUND: u64 = 10_000;
const CAP: usize = DEFAULT_ENUMERATION_CAP;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit, || format!("took {elapsed:.2?}, limit {limit} s"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sharpness() -> Result<String, String> {
    let t = Instant::now();
    let (m, w) = minimal_quad_generator_height(-163).map_err(err)?;
    let below = enumerate_quad_generators(-163, 40).map_err(err)?;
    let elapsed = t.elapsed();
    ensure(m == 41, || format!("minimal squared height {m}"))?;
    ensure(w.poly() == IntPoly::from_i64s(&[41, 1, 1]), || format!("witness {w}"))?;
    ensure(below.is_empty(), || format!("{} generators with max(a, c) ≤ 40", below.len()))?;
    within(elapsed, 5.0)?;
    Ok(format!("min H² = 41 via {w}, B = 40 empty, {elapsed:.2?}"))
}

fn constants() -> Result<String, String> {
    let k = field_from_i64s(&[41, 1, 1]).map_err(err)?;
    let c = k.field_constant(DEFAULT_PRECISION).value();
    let set = find_prime_set(&k, PRIME_BOUND).map_err(err)?;
    let bound = set.bound().value();
    let threshold = set.threshold.value();
    ensure((c - 2.850).abs() <= 1e-3, || format!("c = {c}"))?;
    ensure((bound - 6.403).abs() <= 1e-3, || format!("bound = {bound}"))?;
    ensure(set.primes() == vec![41], || format!("P = {:?}", set.primes()))?;
    ensure((threshold - 8.127).abs() <= 1e-3, || format!("c² = {threshold}"))?;
    Ok(format!("c = {c:.7}, P = {{41}}, bound = {bound:.7}, c² = {threshold:.7}"))
}

fn theorem_one() -> Result<String, String> {
    let t = Instant::now();
    let mut count = 0;
    let mut worst = f64::INFINITY;
    for m in (2i64..=50).filter(|&m| is_squarefree_int(&m.into())) {
        let k = quadratic_field(m).map_err(err)?;
        let cert = find_generator_real(&k, 0, 1e-6, CAP).map_err(|e| format!("m = {m}: {e}"))?;
        let c = k.field_constant(DEFAULT_PRECISION).value();
        let h = cert.height.value_f64();
        ensure(cert.min_poly.deg() == 2, || format!("m = {m}: degree {}", cert.min_poly.deg()))?;
        ensure(h <= c + 1e-9, || format!("m = {m}: H = {h} > c = {c}"))?;
        ensure(verify_certificate(&cert), || format!("m = {m}: certificate rejected"))?;
        worst = worst.min(c - h);
        count += 1;
    }
    let elapsed = t.elapsed();
    within(elapsed, 60.0)?;
    Ok(format!("{count} fields, min(c - H) = {worst:.3e}, {elapsed:.2?}"))
}

fn theorem_three_one() -> Result<String, String> {
    let mut lines = Vec::new();
    for m in [1i64, 2, 3, 7, 11, 19, 43, 67, 163] {
        let k = quadratic_field(-m).map_err(err)?;
        let set = find_prime_set(&k, PRIME_BOUND).map_err(err)?;
        let cert = find_generator_padic(&set, CAP).map_err(|e| format!("m = {m}: {e}"))?;
        let (h, b) = (cert.height.value_f64(), cert.bound.value());
        ensure(verify_certificate(&cert), || format!("m = {m}: certificate rejected"))?;
        ensure(h <= b + 1e-9, || format!("m = {m}: H = {h} > {b}"))?;
        let PlaceRecord::Padic { equality_places, .. } = &cert.place_record else {
            return Err(format!("m = {m}: wrong place record"));
        };
        ensure(equality_places.len() == 1, || format!("m = {m}: equality at {equality_places:?}"))?;
        if m == 1 {
            ensure(set.primes() == vec![2], || format!("Q(i): P = {:?}", set.primes()))?;
            ensure((h - 2f64.sqrt()).abs() < 1e-12, || format!("Q(i): H = {h}"))?;
        }
        lines.push(format!("-{m}:{:?}", set.primes()));
    }
    Ok(format!("verified, P per field {}", lines.join(" ")))
}

fn measure_fields() -> Result<Vec<Field>, String> {
    let mut out: Vec<Field> = QUADRATIC_TEST_FIELDS
        .iter()
        .map(|&m| quadratic_field(m))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for (coeffs, disc) in [(vec![-2i64, 0, 0, 1], -108i64), (vec![-1, -1, 0, 1], -23)] {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| x.into()).collect();
        let opts = FieldOptions {
            field_disc: Some(disc.into()),
            ..Default::default()
        };
        out.push(make_field(&c, &opts).map_err(err)?);
    }
    Ok(out)
}

fn measures() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let one = BigRational::one();
    let mut max_dev = 0f64;
    let mut random = 0;
    for k in measure_fields()? {
        let (r, s) = k.signature();
        let d = k.degree() as i32;
        let unit = vec![Interval::from_integer(1, DEFAULT_PRECISION); r + s];
        let measure = box_measure(&k, &unit, &one).map_err(err)?.value();
        let disc = k.field_disc().to_f64().unwrap().abs();
        let direct = 2f64.powi(r as i32) * (2.0 * PI).powi(s as i32) / disc.sqrt();
        ensure((measure - direct).abs() < 1e-12, || format!("{}: {measure} vs {direct}", k.defining_poly()))?;
        max_dev = max_dev.max((measure - direct).abs());

        let two_d = Interval::from_integer(1u64 << d, DEFAULT_PRECISION);
        for _ in 0..100 {
            let gamma: Vec<Interval> = (0..r + s)
                .map(|_| Interval::point(q(rng.gen_range(1..=300), rng.gen_range(1..=100)), DEFAULT_PRECISION))
                .collect();
            let m = box_measure(&k, &gamma, &one).map_err(err)?;
            let above = m
                .compare(&two_d)
                .ok_or_else(|| format!("{}: measure comparison inconclusive", k.defining_poly()))?
                == std::cmp::Ordering::Greater;
            let g = minkowski_guarantee(&k, &gamma, &one).map_err(err)?;
            ensure(g == above, || format!("{}: guarantee {g} but measure {m}", k.defining_poly()))?;
            random += 1;
        }

        let mut boundary = vec![Interval::from_integer(1, DEFAULT_PRECISION); r + s];
        boundary[0] = k.field_constant(DEFAULT_PRECISION);
        let m = box_measure(&k, &boundary, &one).map_err(err)?.value();
        ensure((m - 2f64.powi(d)).abs() < 1e-12, || format!("{}: boundary measure {m}", k.defining_poly()))?;
    }
    Ok(format!("unit-box deviation ≤ {max_dev:.1e}, {random} random boxes agree, boundary = 2^d"))
}

fn height_routes() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fields: Vec<Field> = QUADRATIC_TEST_FIELDS.iter().map(|&m| quadratic_field(m).unwrap()).collect();
    let mut max_gap = 0f64;
    for i in 0..500 {
        let k = &fields[i % fields.len()];
        let a = random_element(k, &mut rng, true);
        let h = weil_height(&a).map_err(err)?.value_f64();
        let hp = height_embedding_route(&a).map_err(err)?.value();
        ensure((h - hp).abs() <= 1e-12, || format!("{a}: {h} vs {hp}"))?;
        max_gap = max_gap.max((h - hp).abs());
    }
    let mut max_res = 0f64;
    for i in 0..200 {
        let k = &fields[i % fields.len()];
        let a = random_element(k, &mut rng, true);
        let res = place_logs(&a).map_err(err)?.residual().abs();
        ensure(res < 1e-12, || format!("{a}: residual {res}"))?;
        max_res = max_res.max(res);
    }
    Ok(format!("max route gap {max_gap:.1e}, max product-formula residual {max_res:.1e}"))
}

fn lemma_six_one() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    while n < 1000 {
        let (a, c) = (rng.gen_range(1i64..=200), rng.gen_range(1i64..=200));
        let b = rng.gen_range(-200i64..=200);
        if b * b >= 4 * a * c || a.gcd(&b).gcd(&c) != 1 {
            continue;
        }
        let (d, e) = squarefree_decompose(&BigInt::from(b * b - 4 * a * c));
        let qp = QuadPoly::new(a, b, c, d.to_i64().unwrap(), e.to_i64().unwrap()).map_err(err)?;
        let h = weil_height(&qp.root_element().map_err(err)?).map_err(err)?;
        ensure(h.exact_square == Some(BigInt::from(a.max(c))), || {
            format!("{qp}: exact square {:?}, expected {}", h.exact_square, a.max(c))
        })?;
        n += 1;
    }
    Ok(format!("{n} random instances, exact_square = max(a, c)"))
}

fn chebotarev() -> Result<String, String> {
    let t = Instant::now();
    let gauss = field_from_i64s(&[1, 0, 1]).map_err(err)?;
    let x = 100_000u64;
    let count = count_split_primes(&gauss, x).map_err(err)?;
    let li = logarithmic_integral(x as f64).map_err(err)?;
    let lo = lo_bound(4f64.ln(), 2, x as f64, 1.0).map_err(err)?;
    let gap = (count as f64 - li / 2.0).abs();
    ensure(gap <= lo, || format!("|{count} - Li/2| = {gap} > {lo}"))?;

    let cubic = field_from_i64s(&[-1, -1, 0, 1]).map_err(err)?;
    let census = frobenius_census(&cubic, 10_000).map_err(err)?;
    let props = [
        census.proportion(&[1, 1, 1]),
        census.proportion(&[1, 2]),
        census.proportion(&[3]),
    ];
    for (p, expect) in props.iter().zip([1.0 / 6.0, 0.5, 1.0 / 3.0]) {
        ensure((p - expect).abs() <= 0.05, || format!("census proportions {props:?}"))?;
    }

    let k = field_from_i64s(&[41, 1, 1]).map_err(err)?;
    let rep = lemma51_report(&k, 1.0).map_err(err)?;
    ensure(!rep.hypothesis_met && rep.window_count == 0, || format!("{rep:?}"))?;
    let elapsed = t.elapsed();
    within(elapsed, 30.0)?;
    Ok(format!(
        "count {count} vs Li/2 = {:.1} (gap {gap:.1} ≤ {lo:.1}), census {:.3}/{:.3}/{:.3}, window empty, {elapsed:.2?}",
        li / 2.0,
        props[0],
        props[1],
        props[2]
    ))
}

fn enumeration_oracle() -> Result<String, String> {
    let mut boxes = 0;
    let mut points = 0;
    for &m in QUADRATIC_TEST_FIELDS {
        let k = quadratic_field(m).map_err(err)?;
        for ideal in test_ideals(&k) {
            for radii in test_radii(m) {
                let mut got: Vec<_> = enumerate_box_elements(&ideal, &radii, CAP)
                    .map_err(err)?
                    .into_iter()
                    .map(|a| a.coords().to_vec())
                    .collect();
                got.sort();
                let expect = naive_box_scan(m, &ideal, &radii);
                ensure(got == expect, || {
                    format!("m = {m}, N = {}, radii {radii:?}: {} vs {}", ideal.norm(), got.len(), expect.len())
                })?;
                boxes += 1;
                points += got.len();
            }
        }
    }
    let k = field_from_i64s(&[1, 0, 1]).map_err(err)?;
    let inv = ideal_inverse(&prime_ideal(&k, 2, 1).map_err(err)?).map_err(err)?;
    let n = enumerate_box_elements(&inv, &[BigRational::one()], CAP).map_err(err)?.len();
    ensure(n == 4, || format!("𝔭₂⁻¹ in Q(i): {n} points"))?;
    Ok(format!("{boxes} boxes, {points} points match the coordinate scan"))
}

fn main() {
    let checks: [(&str, Check); 9] = [
        ("sharpness of the p-adic bound for Q(√-163)", sharpness),
        ("field constant and prime set for Q(√-163)", constants),
        ("archimedean search on real quadratic fields", theorem_one),
        ("p-adic search on imaginary quadratic fields", theorem_three_one),
        ("box measure identities", measures),
        ("height routes and product formula", height_routes),
        ("quadratic height formula", lemma_six_one),
        ("prime counting diagnostics", chebotarev),
        ("enumeration against coordinate scan", enumeration_oracle),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2} s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
