//! Field specification records: `{"poly": [c0, ..., 1], "disc"?: n,
//! "basis"?: [[q, ...], ...]}` with integers as JSON numbers or decimal
//! strings and rationals as `"num/den"` strings or integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::field::{make_field, Field, FieldOptions};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FieldSpec {
    pub poly: Vec<BigInt>,
    pub disc: Option<BigInt>,
    pub basis: Option<Vec<Vec<BigRational>>>,
}

pub fn parse_integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::domain(format!("{n} is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("{s:?} is not an integer"))),
        _ => Err(Error::domain(format!("{v} is not an integer"))),
    }
}

pub fn parse_rational_str(s: &str) -> Result<BigRational> {
    let bad = || Error::domain(format!("{s:?} is not a rational"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational_str(s),
        _ => parse_integer(v).map(BigRational::from_integer),
    }
}

pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integers as JSON numbers when they fit, else strings.
pub fn integer_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

impl FieldSpec {
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::domain("field spec must be a JSON object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "poly" | "disc" | "basis") {
                return Err(Error::domain(format!("unknown field spec key {key:?}")));
            }
        }
        let poly = obj
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::domain("field spec needs a \"poly\" array"))?
            .iter()
            .map(parse_integer)
            .collect::<Result<Vec<_>>>()?;
        let disc = obj.get("disc").map(parse_integer).transpose()?;
        let basis = match obj.get("basis") {
            None => None,
            Some(b) => Some(
                b.as_array()
                    .ok_or_else(|| Error::domain("\"basis\" must be an array of rows"))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::domain("basis rows must be arrays"))?
                            .iter()
                            .map(parse_rational)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(FieldSpec { poly, disc, basis })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::domain(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn build(&self, allow_unverified: bool) -> Result<Field> {
        make_field(
            &self.poly,
            &FieldOptions {
                field_disc: self.disc.clone(),
                basis: self.basis.clone(),
                allow_unverified,
            },
        )
    }

    /// Spec reproducing the field with its working order.
    pub fn of_field(k: &Field) -> Self {
        let d = k.degree();
        let basis = (k.order_basis() != &crate::RatMatrix::identity(d)).then(|| k.order_basis().to_rows());
        FieldSpec {
            poly: k.defining_poly().coeffs().to_vec(),
            disc: k.disc_is_field_exact().then(|| k.field_disc().clone()),
            basis,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "poly": self.poly.iter().map(integer_json).collect::<Vec<_>>() });
        if let Some(d) = &self.disc {
            v["disc"] = integer_json(d);
        }
        if let Some(b) = &self.basis {
            v["basis"] = json!(b
                .iter()
                .map(|r| r.iter().map(rational_string).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        v
    }
}
