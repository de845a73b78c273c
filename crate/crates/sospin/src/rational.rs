//! The scalar field: arbitrary-precision rationals.
//!
//! Every quantity in the kernel is an exact fraction. `BigRational` already
//! keeps the canonical form we rely on (reduced, denominator positive, zero
//! stored as 0/1), so the type is re-exported rather than wrapped.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d = 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `numerator/denominator` string, denominator always present and
/// positive: `"1/1"`, `"-3/4"`, `"0/1"`. Used for every bit-exact export.
pub fn frac_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short display form: integers without the `/1`.
pub fn pretty_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"n"` or `"n/d"` with optional leading sign.
pub fn parse_frac(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational {
        literal: s.to_string(),
    };
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Rational to nearest f64, for the numerical oracle only.
pub fn to_f64(r: &Rational) -> f64 {
    // Good enough for the magnitudes the kernel produces; exact integers and
    // small fractions convert losslessly.
    let numer = r.numer();
    let denom = r.denom();
    let scale = |x: &BigInt| -> f64 {
        let (sign, digits) = x.to_u64_digits();
        let mut value = 0.0;
        for d in digits.iter().rev() {
            value = value * 1.8446744073709552e19 + *d as f64;
        }
        if sign == num_bigint::Sign::Minus {
            -value
        } else {
            value
        }
    };
    scale(numer) / scale(denom)
}

/// Reduced fraction with a positive denominator? `BigRational` maintains
/// this by construction; asserted in tests on arithmetic closures.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer as _;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
