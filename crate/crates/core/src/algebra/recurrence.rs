use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntPolynomial, RationalSeries};
use crate::error::{Error, Result};

/// Finds the shortest linear recurrence with constant rational coefficients
/// generating `seq` and returns it as a normalized rational series.
///
/// A recurrence of order `d` means `a_k = c_1 a_{k-1} + ... + c_d a_{k-d}` for
/// every `k >= d`, i.e. a series `N/D` with `deg D <= d` and `deg N < d`. An
/// automaton with `d` states always yields one, so `bound` is usually the
/// state count. At least `2 * bound + 1` terms are required; with that many,
/// a fit of order `<= bound` is unique. The result is checked against every
/// supplied term.
pub fn fit_recurrence(seq: &[BigInt], bound: usize) -> Result<RationalSeries> {
    let needed = 2 * bound + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms { needed, got: seq.len() });
    }
    let connection = berlekamp_massey(seq);
    let order = connection.len() - 1;
    if order > bound || 2 * order >= seq.len() {
        return Err(Error::NoRecurrence { bound, terms: seq.len() });
    }

    // clear denominators of the connection polynomial
    let lcm = connection.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let den = IntPolynomial::new(connection.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect());
    let prefix = IntPolynomial::new(seq[..order].to_vec());
    let num = (&den * &prefix).truncate(order);
    let series = RationalSeries::new(num, den)?;
    if series.expand(seq.len() - 1) != seq {
        return Err(Error::NoRecurrence { bound, terms: seq.len() });
    }
    Ok(series)
}

/// Connection polynomial `1 + C_1 z + ... + C_L z^L` of the shortest linear
/// feedback shift register generating `seq`, over the rationals.
fn berlekamp_massey(seq: &[BigInt]) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last = BigRational::one();
    for n in 0..seq.len() {
        let mut d = BigRational::from_integer(seq[n].clone());
        for i in 1..=len.min(c.len() - 1) {
            d += &c[i] * BigRational::from_integer(seq[n - i].clone());
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &d / &last;
        let previous = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &factor * bi;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = previous;
            last = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(len + 1, BigRational::zero());
    c
}
