use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Returns the numerator when `q` is an integer.
pub fn rat_to_integer(q: &Rat) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` with decimal integers. Decimal points and exponents
/// are rejected so that no floating-point value can sneak in.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Argument(format!("not a rational of the form p or p/q: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Argument(format!("zero denominator in {s:?}")));
            }
            if q.is_negative() {
                return Ok(Rat::new(-p, -q));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Serde adapter storing a [`Rat`] as a `"p/q"` string.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = Rat::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(format_rat(&q), "-3/2");
        assert_eq!(parse_rat("6/-4").unwrap(), q);
    }

    #[test]
    fn parse_rejects_floats() {
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1e3").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert_eq!(parse_rat(" -7 ").unwrap(), rat(-7));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(rat_to_integer(&rat(5)), Some(BigInt::from(5)));
        assert_eq!(rat_to_integer(&Rat::new(1.into(), 2.into())), None);
    }
}
