//! Exact scalars. Weights and labels live in `Q`; Verma-module coefficients,
//! which grow during elimination, live in `BigRational`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Q::new(n, 2)
}

pub fn to_big(x: Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Narrows a big rational back to `Q`; `None` on overflow.
pub fn from_big(x: &BigRational) -> Option<Q> {
    Some(Q::new(x.numer().to_i64()?, x.denom().to_i64()?))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
        None => Ok(q(s.parse().map_err(|_| bad())?)),
    }
}

/// Comma-separated list of rationals, e.g. `1,3/2,2`.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_q_list(xs: &[Q]) -> String {
    xs.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

/// Integer value of `x` if it is a positive integer.
pub fn positive_integer(x: &Q) -> Option<u32> {
    if x.is_integer() && x.is_positive() {
        x.to_integer().to_u32()
    } else {
        None
    }
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
