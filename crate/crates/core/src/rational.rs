//! Exact rational scalars and their lossless JSON encoding.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Arbitrary-precision rational number used for every non-integral quantity.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n / d` in lowest terms.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn to_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Human-readable form: `3`, `-1/2`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serializes as `{"num": n, "den": d}` with integers when they fit in `i64`
/// and decimal strings otherwise.
pub struct JsonRational<'a>(pub &'a Rational);

impl Serialize for JsonRational<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        match (self.0.numer().to_i64(), self.0.denom().to_i64()) {
            (Some(n), Some(d)) => {
                map.serialize_entry("num", &n)?;
                map.serialize_entry("den", &d)?;
            }
            _ => {
                map.serialize_entry("num", &self.0.numer().to_string())?;
                map.serialize_entry("den", &self.0.denom().to_string())?;
            }
        }
        map.end()
    }
}

/// `serde_json` value for a rational in the `{"num","den"}` shape.
pub fn rational_json(x: &Rational) -> serde_json::Value {
    serde_json::to_value(JsonRational(x)).expect("rational serialization is infallible")
}
