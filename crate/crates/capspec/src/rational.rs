//! Exact rational scalars and the integer kernels the geometry is built on.
//!
//! Every quantity in this crate that carries geometric meaning (actions,
//! diagonals, capacity values) is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, reduced). Floating
//! point appears only in presentation-layer roots and Monte Carlo estimates,
//! and is always labelled approximate at the call site.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, canonical form maintained by construction.
pub type Rational = BigRational;

/// Shorthand for a small integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics if `q == 0`; intended for literals in code.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational literal: `p/q`, an integer `p`, or an exact decimal
/// such as `2.5` (converted to `5/2` with no rounding). A leading `-` is
/// accepted on any form.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("bare sign in rational literal {s:?}")));
    }
    let magnitude = if let Some((num, den)) = body.split_once('/') {
        let num = parse_uint(num, s)?;
        let den = parse_uint(den, s)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Rational::new(num.into(), den.into())
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        // Exact decimal: a.b == (a*10^k + b) / 10^k.
        if frac_part.is_empty() || frac_part.len() > 64 {
            return Err(Error::Parse(format!("malformed decimal literal {s:?}")));
        }
        let int_part = if int_part.is_empty() {
            BigUint::zero()
        } else {
            parse_uint(int_part, s)?
        };
        let frac = parse_uint(frac_part, s)?;
        let scale = BigUint::from(10u32).pow(frac_part.len() as u32);
        Rational::new((int_part * &scale + frac).into(), scale.into())
    } else {
        Rational::from_integer(parse_uint(body, s)?.into())
    };
    Ok(if negative { -magnitude } else { magnitude })
}

fn parse_uint(digits: &str, full: &str) -> Result<BigUint> {
    if digits.is_empty() || digits.len() > 4096 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed rational literal {full:?}")));
    }
    digits
        .parse::<BigUint>()
        .map_err(|_| Error::Parse(format!("malformed rational literal {full:?}")))
}

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
/// Inverse of [`parse_rational`] on its output.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses a whole list of rational literals.
pub fn parse_rational_vector(items: &[impl AsRef<str>]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s.as_ref())).collect()
}

/// `floor(p/q)` computed exactly. Errors unless `q > 0`.
pub fn floor_ratio(p: &Rational, q: &Rational) -> Result<BigInt> {
    if !q.is_positive() {
        return Err(Error::Invalid("floor_ratio requires q > 0".into()));
    }
    Ok((p / q).floor().to_integer())
}

/// Same as [`floor_ratio`] but clamped into `i64`; the quantities this crate
/// floors (spectral counts, index terms) stay far below that range.
pub fn floor_ratio_i64(p: &Rational, q: &Rational) -> Result<i64> {
    let f = floor_ratio(p, q)?;
    f.to_i64()
        .ok_or_else(|| Error::Internal(format!("floor {f} exceeds i64")))
}

/// Least positive value of `sum k_i * a_i` over integer vectors `k`.
///
/// For positive rationals this infimum is attained: writing the entries over
/// a common denominator `D` as `p_i / D`, the set of integer combinations is
/// `gcd(p_i) / D * Z`, so the minimum positive element is `gcd(p_i) / D`.
pub fn min_positive_integer_combination(entries: &[Rational]) -> Result<Rational> {
    if entries.is_empty() {
        return Err(Error::Invalid(
            "minimal positive combination of an empty vector".into(),
        ));
    }
    if entries.iter().any(|a| !a.is_positive()) {
        return Err(Error::Invalid(
            "minimal positive combination requires positive entries".into(),
        ));
    }
    let common_denom = entries
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let gcd = entries.iter().fold(BigInt::zero(), |acc, a| {
        acc.gcd(&(a.numer() * (&common_denom / a.denom())))
    });
    Ok(Rational::new(gcd, common_denom))
}

/// Entrywise product by a positive scale factor.
pub fn scale_vector(entries: &[Rational], alpha: &Rational) -> Result<Vec<Rational>> {
    if !alpha.is_positive() {
        return Err(Error::Invalid("scale factor must be positive".into()));
    }
    Ok(entries.iter().map(|a| a * alpha).collect())
}

/// Approximate value as `f64`, for presentation only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_all_literal_forms() {
        assert_eq!(parse_rational("5/2").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("2.5").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational(" 10/4 ").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("0.10").unwrap(), ratio(1, 10));
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for bad in ["", "-", "1/0", "a", "1.2.3", "1/", "/2", "1e3", "½", "1.-2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_round_trips() {
        for x in [ratio(5, 2), rat(-3), rat(0), ratio(-7, 12)] {
            assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }

    #[test]
    fn floor_ratio_examples() {
        assert_eq!(floor_ratio_i64(&ratio(5, 2), &rat(1)).unwrap(), 2);
        assert_eq!(floor_ratio_i64(&rat(2), &ratio(5, 2)).unwrap(), 0);
        assert_eq!(floor_ratio_i64(&ratio(7, 3), &ratio(1, 3)).unwrap(), 7);
        assert!(floor_ratio(&rat(1), &rat(0)).is_err());
        assert!(floor_ratio(&rat(1), &rat(-2)).is_err());
    }

    #[test]
    fn min_combination_examples() {
        let cases = [
            (vec![ratio(2, 3), ratio(2, 3)], ratio(2, 3)),
            (vec![ratio(1, 2), ratio(1, 3)], ratio(1, 6)),
            (vec![rat(1)], rat(1)),
        ];
        for (entries, expected) in cases {
            assert_eq!(min_positive_integer_combination(&entries).unwrap(), expected);
        }
        assert!(min_positive_integer_combination(&[]).is_err());
        assert!(min_positive_integer_combination(&[rat(0)]).is_err());
    }

    #[test]
    fn scale_examples() {
        assert_eq!(
            scale_vector(&[rat(1), rat(2)], &rat(3)).unwrap(),
            vec![rat(3), rat(6)]
        );
        assert_eq!(scale_vector(&[ratio(1, 2)], &rat(2)).unwrap(), vec![rat(1)]);
        assert!(scale_vector(&[rat(1)], &rat(0)).is_err());
    }
}
