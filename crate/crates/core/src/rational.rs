//! Exact rational scalars.
//!
//! Every geometric comparison in this crate happens on exact squared
//! distances, so the scalar type is an arbitrary-precision rational.
//! `num::BigRational` already keeps values in lowest terms with a positive
//! denominator, which is exactly the invariant we need.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"3"`, `"-3"`, or `"3/4"` (optionally `"-3/4"`).
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|e| format!("bad integer `{s}`: {e}")),
        Some((n, d)) => {
            let num = n
                .parse::<BigInt>()
                .map_err(|e| format!("bad numerator `{n}`: {e}"))?;
            let den = d
                .parse::<BigInt>()
                .map_err(|e| format!("bad denominator `{d}`: {e}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Render in the same `num/den` (or bare integer) form the file formats use.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for reports; exact values stay rational everywhere else.
pub fn to_f64(r: &Rational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Best-effort: fine for report-sized magnitudes.
    match (num.to_string().parse::<f64>(), den.to_string().parse::<f64>()) {
        (Ok(n), Ok(d)) => n / d,
        _ => f64::NAN,
    }
}

/// Exact squared Euclidean distance between two coordinate vectors.
pub fn squared_distance(p: &[Rational], q: &[Rational]) -> Result<Rational> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(p.len(), q.len()));
    }
    let mut acc = Rational::zero();
    for (a, b) in p.iter().zip(q.iter()) {
        let d = a - b;
        acc += &d * &d;
    }
    Ok(acc)
}

/// Exact inner product.
pub fn inner_product(p: &[Rational], q: &[Rational]) -> Result<Rational> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(p.len(), q.len()));
    }
    let mut acc = Rational::zero();
    for (a, b) in p.iter().zip(q.iter()) {
        acc += a * b;
    }
    Ok(acc)
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-7", "3/4", "-3/4", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // normalization to lowest terms, positive denominator
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn squared_distance_examples() {
        // unit segment
        let p = vec![rat_i(0), rat_i(0)];
        let q = vec![rat_i(1), rat_i(0)];
        assert_eq!(squared_distance(&p, &q).unwrap(), rat_i(1));
        // identical points
        assert_eq!(squared_distance(&p, &p).unwrap(), rat_i(0));
        // (1/2,1/3) vs origin: 1/4 + 1/9 = 13/36
        let r = vec![rat(1, 2), rat(1, 3)];
        assert_eq!(squared_distance(&r, &p).unwrap(), rat(13, 36));
        // dimension mismatch is an error
        let bad = vec![rat_i(1)];
        assert!(squared_distance(&p, &bad).is_err());
    }
}
