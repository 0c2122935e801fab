//! Exact rationals over arbitrary-precision integers.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Canonical fraction `p/q` with `q > 0` and `gcd(|p|, q) = 1`.
pub type Rational = num_rational::BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Lowest-terms rendering: `"2/3"`, or just the numerator when the
/// denominator is one (`"0"`, `"1"`).
pub fn render(value: &Rational) -> String {
    if value.denom() == &BigInt::from(1) {
        value.numer().to_string()
    } else {
        let mut out = value.numer().to_string();
        out.push('/');
        out.push_str(&value.denom().to_string());
        out
    }
}

/// Inverse of [`render`]. Accepts `p` or `p/q`; the result is reduced.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
