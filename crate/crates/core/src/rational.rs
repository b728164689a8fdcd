//! Exact rational numbers and the small amount of integer plumbing the rest of
//! the crate needs (content, lcm of denominators, canonical text form).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse `{0}` as a rational (expected an integer or p/q)")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"7"`, `"-3"`, or `"p/q"`. Zero denominators are rejected.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
        None => t
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| err()),
    }
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        // huge numerator/denominator: scale down by the bit-length difference
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Nearest fraction with denominator exactly `den` (then reduced).
pub fn from_f64_rounded(x: f64, den: i64) -> Rational {
    let n = (x * den as f64).round() as i64;
    ratio(n, den)
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn gcd_of_numerators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

/// Scales a coefficient vector to coprime integers with the first nonzero
/// entry positive. Returns the scale factor used (so `out = factor * input`).
/// All-zero input is returned unchanged with factor 1.
pub fn primitive_integer_scaling(v: &[Rational]) -> Rational {
    let l = lcm_of_denominators(v);
    let scaled: Vec<Rational> = v
        .iter()
        .map(|c| c * Rational::from_integer(l.clone()))
        .collect();
    let g = gcd_of_numerators(&scaled);
    if g.is_zero() {
        return Rational::one();
    }
    let mut factor = Rational::new(l, g);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            factor = -factor;
        }
    }
    factor
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("6/4").unwrap(), ratio(3, 2));
        assert_eq!(format(&parse(" -6/4 ").unwrap()), "-3/2");
        assert_eq!(format(&parse("12").unwrap()), "12");
        assert_eq!(format(&parse("4/-2").unwrap()), "-2");
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("0.5").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(-1, 2), ratio(3, 4), int(0)];
        let f = primitive_integer_scaling(&v);
        let out: Vec<_> = v.iter().map(|c| c * &f).collect();
        assert_eq!(out, vec![int(2), int(-3), int(0)]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(12, 6), 924);
    }
}
