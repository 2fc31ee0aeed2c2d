//! Exact rational scalars and their `"p/q"` wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scalar type used throughout: arbitrary-precision reduced rationals.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as `"p"` or `"p/q"` with positive denominator.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`; the denominator must be nonzero.
pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| format!("bad numerator in rational {s:?}"))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator in rational {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// True if `r` is a nonzero rational.
pub fn is_nonzero(r: &Rational) -> bool {
    !r.numer().is_zero()
}

/// Absolute value.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
