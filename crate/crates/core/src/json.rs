//! JSON encodings shared by the CLI.
//!
//! Rationals are strings `"p/q"` (`q` omitted when 1), polynomials are
//! arrays of coefficients indexed by degree, partitions are arrays of parts.

use serde_json::{json, Map, Value};

use crate::arith::rational::format;
use crate::arith::var::Indeterminate;
use crate::arith::{Poly, RatFunc};
use crate::scalar::{Field, Ring};
use crate::symfunc::{JackRecord, PowerSum};
use crate::{Partition, Rational};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(format(self))
    }
}

impl<F: Ring + ToJson, V: Indeterminate> ToJson for Poly<F, V> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

/// Polynomials print as plain coefficient arrays; proper fractions as
/// `{"num": [...], "den": [...]}`.
impl<F: Field + ToJson, V: Indeterminate> ToJson for RatFunc<F, V> {
    fn to_json(&self) -> Value {
        if self.is_polynomial() {
            self.numer().to_json()
        } else {
            json!({"num": self.numer().to_json(), "den": self.denom().to_json()})
        }
    }
}

impl ToJson for Partition {
    fn to_json(&self) -> Value {
        Value::Array(self.parts().iter().map(|&p| Value::from(p)).collect())
    }
}

/// Object keyed by the partition's JSON text, largest partition first.
impl<C: Ring + ToJson> ToJson for PowerSum<C> {
    fn to_json(&self) -> Value {
        let mut map = Map::new();
        let terms: Vec<_> = self.terms().collect();
        for (mu, c) in terms.into_iter().rev() {
            map.insert(mu.to_json().to_string(), c.to_json());
        }
        Value::Object(map)
    }
}

impl ToJson for JackRecord {
    fn to_json(&self) -> Value {
        json!({
            "shape": self.shape.to_json(),
            "expansion": self.expansion.to_json(),
            "norm": self.norm.to_json(),
            "principal": self.principal.to_json(),
            "p2coeff": self.p2coeff.to_json(),
        })
    }
}

/// `{"variable": name, "coefficients": [...]}`.
pub fn poly_with_variable<V: Indeterminate>(p: &Poly<Rational, V>) -> Value {
    json!({"variable": V::NAME, "coefficients": p.to_json()})
}
