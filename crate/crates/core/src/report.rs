//! JSON renderings of the computed objects.
//!
//! Rationals are strings `"num/den"`, certified reals are objects
//! `{"value": decimal, "error": radius}` whose ball contains the interval.
//! Certificates round-trip through [`certificate_from_json`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::adelic::{ArchCheck, GeneratorCertificate, PlaceRecord, SearchStats, TheoremTag};
use crate::arith::interval::format_decimal;
use crate::arith::{rational_from_f64, Interval};
use crate::field::{Field, FieldElement, NumberField};
use crate::heights::HeightValue;
use crate::quadratic::{QuadPoly, SharpnessReport};
use crate::spec::{integer_json, parse_integer, parse_rational, rational_string, FieldSpec};
use crate::splitting::{Census, ChebReport, DegreeOnePlace, PrimeSet, SplittingType};
use crate::{Error, IntPoly, Result, DEFAULT_PRECISION};

const DIGITS: usize = 40;

pub fn real_json(x: &Interval) -> Value {
    let pad = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), DIGITS));
    let radius = x.width() / BigRational::from_integer(2.into()) + pad;
    // inflate so the printed radius is not below the true one
    let r = radius.to_f64().unwrap_or(f64::INFINITY) * 1.001;
    json!({
        "value": format_decimal(&x.mid(), DIGITS),
        "error": format!("{r:.3e}"),
    })
}

pub fn real_from_json(v: &Value) -> Result<Interval> {
    let bad = || Error::domain(format!("{v} is not a certified real"));
    let value = v.get("value").and_then(Value::as_str).ok_or_else(bad)?;
    let error: f64 = v
        .get("error")
        .and_then(Value::as_str)
        .ok_or_else(bad)?
        .parse()
        .map_err(|_| bad())?;
    let center = parse_decimal(value).ok_or_else(bad)?;
    let radius = rational_from_f64(error).filter(|r| r >= &BigRational::from_integer(0.into())).ok_or_else(bad)?;
    Ok(Interval::ball(center, radius, DEFAULT_PRECISION))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, s) = match s.strip_prefix('-') {
        Some(t) => (true, t),
        None => (false, s),
    };
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let q = BigRational::new(digits, num_traits::pow(BigInt::from(10), frac.len()));
    Some(if neg { -q } else { q })
}

fn rational_json(q: &BigRational) -> Value {
    json!(rational_string(q))
}

fn poly_json(f: &IntPoly) -> Value {
    json!(f.coeffs().iter().map(integer_json).collect::<Vec<_>>())
}

fn field_of(v: &Value, key: &str) -> Result<Value> {
    v.get(key)
        .cloned()
        .ok_or_else(|| Error::domain(format!("missing key {key:?}")))
}

fn array_of(v: &Value, key: &str) -> Result<Vec<Value>> {
    field_of(v, key)?
        .as_array()
        .cloned()
        .ok_or_else(|| Error::domain(format!("{key:?} must be an array")))
}

fn bool_of(v: &Value, key: &str) -> Result<bool> {
    field_of(v, key)?
        .as_bool()
        .ok_or_else(|| Error::domain(format!("{key:?} must be a boolean")))
}

fn u64_of(v: &Value, key: &str) -> Result<u64> {
    field_of(v, key)?
        .as_u64()
        .ok_or_else(|| Error::domain(format!("{key:?} must be a nonnegative integer")))
}

pub fn field_info_json(k: &NumberField, prec: u32) -> Value {
    let (r, s) = k.signature();
    let mut v = json!({
        "degree": k.degree(),
        "defining_poly": k.defining_poly().to_string(),
        "signature": [r, s],
        "poly_disc": integer_json(k.poly_disc()),
        "field_disc": integer_json(k.field_disc()),
        "disc_is_field_exact": k.disc_is_field_exact(),
        "order_disc": integer_json(k.order_disc()),
        "order_is_maximal": k.order_is_maximal(),
        "field_constant": real_json(&k.field_constant(prec)),
        "order_constant": real_json(&k.order_constant(prec)),
        "threshold": real_json(&k.order_constant_pow_d(prec)),
        "irreducibility": format!("{:?}", k.irreducibility()),
    });
    if k.degree() == 1 {
        v["notice"] = json!("degree-one field: every element is rational and 1 generates it");
    }
    v
}

pub fn splitting_type_json(t: &SplittingType) -> Value {
    json!({
        "p": t.p,
        "pairs": t.pairs.iter().map(|&(e, f)| json!({"e": e, "f": f})).collect::<Vec<_>>(),
        "roots": t.roots,
        "method": serde_json::to_value(t.method).expect("enum"),
    })
}

fn place_json(pl: &DegreeOnePlace) -> Value {
    json!({"p": pl.p, "root": pl.root})
}

fn place_from_json(v: &Value) -> Result<DegreeOnePlace> {
    Ok(DegreeOnePlace {
        p: u64_of(v, "p")?,
        root: u64_of(v, "root")?,
    })
}

pub fn prime_set_json(set: &PrimeSet) -> Value {
    json!({
        "primes": set.primes(),
        "places": set.places.iter().map(place_json).collect::<Vec<_>>(),
        "product": integer_json(&set.product),
        "threshold": real_json(&set.threshold),
        "bound": real_json(&set.bound()),
    })
}

fn height_json(h: &HeightValue) -> Value {
    let mut v = real_json(&h.value);
    v["exact_square"] = h.exact_square.as_ref().map(integer_json).unwrap_or(Value::Null);
    v
}

fn height_from_json(v: &Value) -> Result<HeightValue> {
    let exact_square = match v.get("exact_square") {
        None | Some(Value::Null) => None,
        Some(x) => Some(parse_integer(x)?),
    };
    Ok(HeightValue {
        value: real_from_json(v)?,
        exact_square,
    })
}

fn arch_json(a: &ArchCheck) -> Value {
    json!({
        "place": a.place,
        "local_degree": a.local_degree,
        "radius": rational_json(&a.radius),
        "value": real_json(&a.value),
        "passed": a.passed,
    })
}

fn arch_from_json(v: &Value) -> Result<ArchCheck> {
    Ok(ArchCheck {
        place: u64_of(v, "place")? as usize,
        local_degree: u64_of(v, "local_degree")? as u32,
        radius: parse_rational(&field_of(v, "radius")?)?,
        value: real_from_json(&field_of(v, "value")?)?,
        passed: bool_of(v, "passed")?,
    })
}

fn place_record_json(rec: &PlaceRecord) -> Value {
    match rec {
        PlaceRecord::Real {
            w,
            eps,
            arch,
            exceeds_one_at_w,
            within_field_constant,
        } => json!({
            "kind": "real",
            "w": w,
            "eps": eps,
            "arch": arch.iter().map(arch_json).collect::<Vec<_>>(),
            "exceeds_one_at_w": exceeds_one_at_w,
            "within_field_constant": within_field_constant,
        }),
        PlaceRecord::Padic {
            arch,
            designated,
            denominator_index,
            equality_places,
        } => json!({
            "kind": "padic",
            "arch": arch.iter().map(arch_json).collect::<Vec<_>>(),
            "designated": designated.iter().map(place_json).collect::<Vec<_>>(),
            "denominator_index": integer_json(denominator_index),
            "equality_places": equality_places.iter().map(place_json).collect::<Vec<_>>(),
        }),
    }
}

fn place_record_from_json(v: &Value) -> Result<PlaceRecord> {
    let arch = array_of(v, "arch")?
        .iter()
        .map(arch_from_json)
        .collect::<Result<Vec<_>>>()?;
    match field_of(v, "kind")?.as_str() {
        Some("real") => Ok(PlaceRecord::Real {
            w: u64_of(v, "w")? as usize,
            eps: field_of(v, "eps")?
                .as_f64()
                .ok_or_else(|| Error::domain("\"eps\" must be a number"))?,
            arch,
            exceeds_one_at_w: bool_of(v, "exceeds_one_at_w")?,
            within_field_constant: field_of(v, "within_field_constant")?.as_bool(),
        }),
        Some("padic") => {
            let places = |key| -> Result<Vec<DegreeOnePlace>> {
                array_of(v, key)?.iter().map(place_from_json).collect()
            };
            Ok(PlaceRecord::Padic {
                arch,
                designated: places("designated")?,
                denominator_index: parse_integer(&field_of(v, "denominator_index")?)?,
                equality_places: places("equality_places")?,
            })
        }
        _ => Err(Error::domain("place record kind must be \"real\" or \"padic\"")),
    }
}

fn search_json(s: &SearchStats) -> Value {
    json!({
        "points_in_box": s.points_in_box,
        "ideal_norm": rational_json(&s.ideal_norm),
        "measure": real_json(&s.measure),
        "minkowski_guarantee": s.minkowski_guarantee,
    })
}

fn search_from_json(v: &Value) -> Result<SearchStats> {
    Ok(SearchStats {
        points_in_box: u64_of(v, "points_in_box")? as usize,
        ideal_norm: parse_rational(&field_of(v, "ideal_norm")?)?,
        measure: real_from_json(&field_of(v, "measure")?)?,
        minkowski_guarantee: bool_of(v, "minkowski_guarantee")?,
    })
}

pub fn certificate_json(cert: &GeneratorCertificate, verified: bool) -> Value {
    json!({
        "theorem": serde_json::to_value(cert.theorem).expect("enum"),
        "field": FieldSpec::of_field(cert.field()).to_json(),
        "alpha": cert.alpha.coords().iter().map(rational_json).collect::<Vec<_>>(),
        "alpha_display": cert.alpha.to_string(),
        "min_poly": poly_json(&cert.min_poly),
        "min_poly_display": cert.min_poly.to_string(),
        "height": height_json(&cert.height),
        "height_by_places": real_json(&cert.height_by_places),
        "bound_pow_d": rational_json(&cert.bound_pow_d),
        "bound": real_json(&cert.bound),
        "place_record": place_record_json(&cert.place_record),
        "search": search_json(&cert.search),
        "verified": verified,
    })
}

/// Rebuild a certificate; the field is reconstructed from its spec.
pub fn certificate_from_json(v: &Value, allow_unverified: bool) -> Result<GeneratorCertificate> {
    let theorem: TheoremTag = serde_json::from_value(field_of(v, "theorem")?)
        .map_err(|e| Error::domain(format!("bad theorem tag: {e}")))?;
    let k: Field = FieldSpec::from_json(&field_of(v, "field")?)?.build(allow_unverified)?;
    let coords = array_of(v, "alpha")?
        .iter()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    let alpha = FieldElement::new(&k, coords)?;
    let min_poly = IntPoly::new(
        array_of(v, "min_poly")?
            .iter()
            .map(parse_integer)
            .collect::<Result<Vec<_>>>()?,
    );
    Ok(GeneratorCertificate {
        theorem,
        alpha,
        min_poly,
        height: height_from_json(&field_of(v, "height")?)?,
        height_by_places: real_from_json(&field_of(v, "height_by_places")?)?,
        bound_pow_d: parse_rational(&field_of(v, "bound_pow_d")?)?,
        bound: real_from_json(&field_of(v, "bound")?)?,
        place_record: place_record_from_json(&field_of(v, "place_record")?)?,
        search: search_from_json(&field_of(v, "search")?)?,
    })
}

pub fn quad_poly_json(q: &QuadPoly) -> Value {
    json!({"a": q.a, "b": q.b, "c": q.c, "d": q.d, "e": q.e, "poly": q.to_string()})
}

pub fn sharpness_json(r: &SharpnessReport) -> Value {
    json!({
        "d": r.d,
        "primes": r.primes,
        "bound_square": integer_json(&r.bound_square),
        "minimal_square": r.minimal_square,
        "witness": quad_poly_json(&r.witness),
        "sharp": r.sharp,
    })
}

pub fn cheb_report_json(r: &ChebReport) -> Value {
    json!({
        "c1": r.c1,
        "degree": r.degree,
        "abs_disc": r.abs_disc,
        "cheb20_lhs": r.cheb20_lhs,
        "hypothesis_met": r.hypothesis_met,
        "window": [r.window.0, r.window.1],
        "window_primes": r.window_primes,
        "window_count": r.window_count,
        "cheb23_rhs": r.cheb23_rhs,
    })
}

pub fn census_json(c: &Census) -> Value {
    let counts: Map<String, Value> = c
        .counts
        .iter()
        .map(|(pat, n)| {
            let key = pat.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            (key, json!(n))
        })
        .collect();
    json!({"x": c.x, "total": c.total, "li": c.li, "counts": counts})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelic::{find_generator_padic, find_generator_real, verify_certificate, DEFAULT_ENUMERATION_CAP};
    use crate::field::{field_from_i64s, quadratic_field};
    use crate::splitting::find_prime_set;

    #[test]
    fn real_ball_contains_interval() {
        let k = field_from_i64s(&[41, 1, 1]).unwrap();
        let c = k.field_constant(DEFAULT_PRECISION);
        let back = real_from_json(&real_json(&c)).unwrap();
        assert!(back.lo() <= c.lo() && back.hi() >= c.hi());
        let neg = Interval::point(BigRational::new((-7).into(), 3.into()), 64);
        let back = real_from_json(&real_json(&neg)).unwrap();
        assert!(back.contains(neg.lo()));
    }

    #[test]
    fn certificates_round_trip() {
        let k = quadratic_field(2).unwrap();
        let cert = find_generator_real(&k, 0, 1e-6, DEFAULT_ENUMERATION_CAP).unwrap();
        let text = certificate_json(&cert, true).to_string();
        let back = certificate_from_json(&serde_json::from_str(&text).unwrap(), false).unwrap();
        assert!(verify_certificate(&back));

        let k = field_from_i64s(&[41, 1, 1]).unwrap();
        let set = find_prime_set(&k, 100).unwrap();
        let cert = find_generator_padic(&set, DEFAULT_ENUMERATION_CAP).unwrap();
        let mut v = certificate_json(&cert, true);
        let back = certificate_from_json(&v, false).unwrap();
        assert!(verify_certificate(&back));
        v["bound_pow_d"] = json!("40");
        assert!(!verify_certificate(&certificate_from_json(&v, false).unwrap()));
    }
}
