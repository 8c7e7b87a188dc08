use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. Trailing zeros are never stored, so the zero
/// polynomial is the empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(c z)`.
    pub fn substitute_scaled(&self, c: &BigInt) -> Self {
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// Drops every term of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Remainder of `lc(divisor)^k * self` by `divisor`, scaling by the
    /// leading coefficient once per elimination step so everything stays in `Z[z]`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dq = divisor.degree().expect("pseudo-division by zero polynomial");
        let lq = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dq {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shifted = &Self::monomial(lr, dr - dq) * divisor;
            r = &r.scale(lq) - &shifted;
        }
        r
    }

    /// Greatest common divisor over the integers: gcd of contents times the
    /// primitive polynomial remainder sequence result. Leading coefficient
    /// is positive; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut p, mut q) = (self.primitive_part(), other.primitive_part());
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q);
            p = q;
            q = r.primitive_part();
        }
        p.primitive_part().scale(&content)
    }

    /// Exact quotient over the integers, or `None` when `divisor` does not
    /// divide `self` in `Z[z]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dq = divisor.degree()?;
        let lq = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut quotient = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dq)];
        while let Some(dr) = r.degree() {
            if dr < dq {
                return None;
            }
            let (q, rem) = r.leading().unwrap().div_rem(lq);
            if !rem.is_zero() {
                return None;
            }
            quotient[dr - dq] = q.clone();
            r = &r - &(&Self::monomial(q, dr - dq) * divisor);
        }
        Some(Self::new(quotient))
    }

    /// Renders with the given variable name, e.g. `1 - 5z + 2z^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            out.push_str(&power);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        super::serialize_bigints(self.coeffs.iter(), serializer)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
