//! Arbitrary-precision rational scalars.
//!
//! `Rat` is always stored reduced with a positive denominator, so equality is
//! structural and printing is canonical.

use crate::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Parses "a/b" or "a" with optional sign; the CLI boundary accepts rationals
/// only in this form.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk_err = || Error::InvalidParameter(format!("cannot parse rational from {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().map_err(|_| mk_err())?;
            let den: BigInt = b.trim().parse().map_err(|_| mk_err())?;
            if den.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "zero denominator in {s:?}"
                )));
            }
            Ok(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(num))
        }
    }
}

/// Signed integer floor/identity for integral rationals, used by the
/// combinatorial classification rules.
pub fn to_integer(x: &Rat) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    let n = x.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    let (sign, digits) = n.to_u64_digits();
    let mag = digits.first().copied().unwrap_or(0) as i64;
    Some(match sign {
        num::bigint::Sign::Minus => -mag,
        _ => mag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rat("7/3").unwrap(), ratio(7, 3));
        assert_eq!(parse_rat("-5").unwrap(), rat(-5));
        assert_eq!(parse_rat(" 4/6 ").unwrap(), ratio(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(to_integer(&rat(-12)), Some(-12));
        assert_eq!(to_integer(&ratio(1, 2)), None);
        assert_eq!(to_integer(&ratio(6, 3)), Some(2));
    }

    #[test]
    fn pow_is_repeated_product() {
        assert_eq!(rat_pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(rat_pow(&rat(5), 0), rat(1));
    }
}
