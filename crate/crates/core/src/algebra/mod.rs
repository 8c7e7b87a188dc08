//! Exact arithmetic: integer polynomials, rational generating functions,
//! transfer-matrix path counting and linear-recurrence fitting.

mod poly;
mod recurrence;
mod series;
mod transfer;

pub use poly::IntPolynomial;
pub use recurrence::fit_recurrence;
pub use series::{expand, rational_equal, RationalSeries};
pub use transfer::{transfer_count, CountMatrix};

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

/// Serializes big integers as plain JSON numbers, whatever their size.
pub(crate) fn serialize_bigints<'a, S, I>(values: I, serializer: S) -> Result<S::Ok, S::Error>
where
    S: Serializer,
    I: ExactSizeIterator<Item = &'a BigInt>,
{
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&json_number(v))?;
    }
    seq.end()
}

pub(crate) fn json_number<T: ToString>(v: &T) -> serde_json::Number {
    v.to_string().parse().expect("integer formats as a JSON number")
}

/// `serialize_with` helper writing any integer slice as JSON numbers.
pub(crate) fn serialize_numbers<S, T>(values: &[T], serializer: S) -> Result<S::Ok, S::Error>
where
    S: Serializer,
    T: ToString,
{
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&json_number(v))?;
    }
    seq.end()
}
