use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// A rational generating function `num / den` in lowest terms with
/// `den(0) = 1`, so that its Taylor expansion has integer coefficients.
///
/// Two normalized series are equal as power series exactly when they are
/// structurally equal, so `PartialEq` is series equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalSeries {
    /// Normalizes `num / den`: cancels the polynomial gcd and scales so the
    /// denominator has constant term `+1`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotPowerSeries);
        }
        if num.is_zero() {
            return Ok(RationalSeries { num, den: IntPolynomial::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotPowerSeries);
        }
        let divides = |p: &IntPolynomial| p.coeffs().iter().all(|c| c.is_multiple_of(&d0));
        if !divides(&num) || !divides(&den) {
            return Err(Error::NonIntegralSeries);
        }
        let scale = |p: &IntPolynomial| IntPolynomial::new(p.coeffs().iter().map(|c| c / &d0).collect());
        Ok(RationalSeries { num: scale(&num), den: scale(&den) })
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64(num), IntPolynomial::from_i64(den))
    }

    /// A polynomial, viewed as a series with denominator 1.
    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalSeries { num: p, den: IntPolynomial::one() }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// First `n + 1` Taylor coefficients.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = self.num.coeff(k);
            for i in 1..den.len().min(k + 1) {
                v -= &den[i] * &out[k - i];
            }
            out.push(v);
        }
        out
    }

    /// Parses `{"num": [...], "den": [...]}` (lowest degree first).
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::Usage(format!("malformed series JSON: {what}"));
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
        let read = |key: &str| -> Result<IntPolynomial> {
            let arr = value.get(key).and_then(|v| v.as_array()).ok_or_else(|| bad(key))?;
            let coeffs = arr
                .iter()
                .map(|x| match x {
                    serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad(key)),
                    _ => Err(bad(key)),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(IntPolynomial::new(coeffs))
        };
        Self::new(read("num")?, read("den")?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serializes")
    }
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalSeries", 2)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.end()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            return f.write_str(&self.num.display_with("z"));
        }
        write!(f, "({})/({})", self.num.display_with("z"), self.den.display_with("z"))
    }
}

/// First `n + 1` Taylor coefficients of `r`.
pub fn expand(r: &RationalSeries, n: usize) -> Vec<BigInt> {
    r.expand(n)
}

/// Series equality of two normalized rational functions.
pub fn rational_equal(a: &RationalSeries, b: &RationalSeries) -> bool {
    a == b
}

impl Default for RationalSeries {
    fn default() -> Self {
        RationalSeries::polynomial(IntPolynomial::constant(BigInt::one()))
    }
}
