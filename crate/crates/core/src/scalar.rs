//! The scalar ring every kernel is generic over.
//!
//! All the algebra in this crate (polynomials, matrices, determinants,
//! symmetric functions) only assumes an exact field of characteristic zero:
//! arithmetic never rounds, integers embed, small integers are invertible.
//! The crate-level alias [`crate::Rat`] instantiates everything at
//! arbitrary-precision rationals, which is the scalar used by the CLI.

use num_bigint::BigInt;
use num_traits::{Num, Signed};
use std::fmt;

/// An exact field containing the rationals.
///
/// Assembled from `num-traits` bounds plus an integer embedding. Division
/// must be exact (field division); `Rem` from `Num` is never relied on.
pub trait Scalar:
    Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display + From<BigInt> + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + From<BigInt>
        + Send
        + Sync
        + 'static
{
}

/// Embed a machine integer.
pub fn int<T: Scalar>(k: i64) -> T {
    T::from(BigInt::from(k))
}

/// Embed a ratio of machine integers; `q` must be nonzero.
pub fn ratio<T: Scalar>(p: i64, q: i64) -> T {
    int::<T>(p) / int::<T>(q)
}

/// `k!` in the scalar field, built by repeated small multiplications.
pub fn factorial<T: Scalar>(k: usize) -> T {
    let mut acc = T::one();
    for j in 2..=k {
        acc = acc * int::<T>(j as i64);
    }
    acc
}

/// Parse the strict rational serialization: `p` or `p/q` with decimal
/// integers and `q > 0`. This is deliberately narrower than what the
/// underlying bignum parser accepts (no signs on the denominator, no
/// whitespace).
pub fn parse_rat(s: &str) -> crate::Result<crate::Rat> {
    fn parse_int(t: &str, what: &str, full: &str) -> crate::Result<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(crate::Error::Parse(format!(
                "bad {what} in rational {full:?}"
            )));
        }
        t.parse()
            .map_err(|_| crate::Error::Parse(format!("bad {what} in rational {full:?}")))
    }
    let (p, q) = match s.split_once('/') {
        None => (parse_int(s, "integer", s)?, BigInt::from(1)),
        Some((p, q)) => {
            if q.starts_with('-') {
                return Err(crate::Error::Parse(format!(
                    "denominator must be positive in {s:?}"
                )));
            }
            (parse_int(p, "numerator", s)?, parse_int(q, "denominator", s)?)
        }
    };
    if q <= BigInt::from(0) {
        return Err(crate::Error::Parse(format!(
            "denominator must be positive in {s:?}"
        )));
    }
    Ok(crate::Rat::new(p, q))
}
