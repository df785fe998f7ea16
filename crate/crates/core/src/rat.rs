//! Exact rational scalars.
//!
//! Every coefficient, weight and binomial value in this crate is an
//! arbitrary-precision rational; floating point never appears. `Rat` is a
//! re-export of [`num_rational::BigRational`], which already keeps values in
//! reduced canonical form (positive denominator, gcd 1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Builds `n/d`. Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optionally signed) into a rational.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    text.trim()
        .parse::<Rat>()
        .map_err(|e| format!("invalid rational {text:?}: {e}"))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is 1.
/// This is exactly the `Display` form; named for use at JSON boundaries.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// True when `r` is an integer `>= 1`; returns it as `usize` if so.
pub fn as_positive_integer(r: &Rat) -> Option<usize> {
    if r.is_integer() && r.is_positive() {
        r.numer().try_into().ok()
    } else {
        None
    }
}

/// True when `r` is an integer `>= 0`; returns it as `usize` if so.
pub fn as_nonneg_integer(r: &Rat) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.numer().try_into().ok()
    } else {
        None
    }
}

/// `ν(ν−1)⋯(ν−q+1)/q!` — the binomial coefficient extended to a rational
/// upper argument. `C(ν, 0) = 1` for every ν.
pub fn rational_binomial(nu: &Rat, q: usize) -> Rat {
    let mut result = Rat::one();
    for t in 0..q {
        result *= nu - rint(t as i64);
        result /= rint((t + 1) as i64);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "5", "-3", "1/2", "-7/15", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_reduces_to_canonical_form() {
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(format_rat(&parse_rat("-4/2").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn binomial_integer_cases() {
        assert_eq!(rational_binomial(&rint(5), 2), rint(10));
        assert_eq!(rational_binomial(&rint(3), 0), rint(1));
        assert_eq!(rational_binomial(&rint(2), 3), rint(0));
        assert_eq!(rational_binomial(&rint(-1), 2), rint(1));
    }

    #[test]
    fn binomial_rational_upper_argument() {
        // C(1/2, 2) = (1/2)(−1/2)/2 = −1/8
        assert_eq!(rational_binomial(&rat(1, 2), 2), rat(-1, 8));
        // C(−3/2, 1) = −3/2
        assert_eq!(rational_binomial(&rat(-3, 2), 1), rat(-3, 2));
    }

    #[test]
    fn binomial_vanishes_exactly_on_short_integer_range() {
        // C(ν, q) = 0 iff ν ∈ {0, 1, …, q−1}.
        for nu in -6..=6 {
            for q in 1..=4usize {
                let vanishes = num_traits::Zero::is_zero(&rational_binomial(&rint(nu), q));
                assert_eq!(vanishes, nu >= 0 && (nu as usize) < q, "nu={nu} q={q}");
            }
        }
    }

    #[test]
    fn as_positive_integer_filters() {
        assert_eq!(as_positive_integer(&rint(3)), Some(3));
        assert_eq!(as_positive_integer(&rint(0)), None);
        assert_eq!(as_positive_integer(&rat(1, 2)), None);
        assert_eq!(as_positive_integer(&rint(-2)), None);
    }
}
