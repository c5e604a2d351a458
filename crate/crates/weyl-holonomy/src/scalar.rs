//! Scalar abstraction for the linear-algebra and jet cores.
//!
//! All algorithms in [`crate::matrix`], [`crate::solve`] and [`crate::jet`]
//! are generic over a [`Scalar`]; the rest of the crate instantiates them at
//! the crate-root alias [`crate::Rational`], an arbitrary-precision rational.
//! Rank decisions compare against exact zero, so only exact fields make the
//! verdicts of this crate meaningful.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Field-like scalar: the operations every generic algorithm relies on.
pub trait Scalar: Num + Signed + Clone + std::fmt::Debug {}

impl<T: Num + Signed + Clone + std::fmt::Debug> Scalar for T {}

/// Scalars whose arithmetic is exact, with an optional row-normalization
/// hook used by the fraction-free elimination to control coefficient growth.
pub trait ExactScalar: Scalar {
    /// Divide a row by its content (any common factor); may be a no-op.
    /// Must not change the span of the row.
    fn strip_row_content(_row: &mut [Self]) {}
}

impl ExactScalar for BigRational {
    fn strip_row_content(row: &mut [Self]) {
        // content = gcd(numerators) / lcm(denominators); dividing by it turns
        // the row into coprime integers, keeping later cross-multiplications
        // cheap.
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for x in row.iter() {
            if !x.is_zero() {
                num_gcd = num_gcd.gcd(x.numer());
                den_lcm = den_lcm.lcm(x.denom());
            }
        }
        if num_gcd.is_zero() || (num_gcd.is_one() && den_lcm.is_one()) {
            return;
        }
        let content = BigRational::new(num_gcd, den_lcm);
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= content.clone();
            }
        }
    }
}

/// Parse a rational from its decimal-string form `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, crate::error::ParseRationalError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| crate::error::ParseRationalError::new(s))?;
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(|_| crate::error::ParseRationalError::new(s))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(crate::error::ParseRationalError::new(s));
    }
    Ok(BigRational::new(numer, denom))
}

/// Format a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Shorthand for building a rational from machine integers.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-12", "0", "7/3", "-5/9"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("5/1").unwrap()), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn strip_content_makes_rows_integral_and_coprime() {
        let mut row = vec![ratio(3, 2), ratio(9, 4), int(0), ratio(-3, 8)];
        BigRational::strip_row_content(&mut row);
        assert_eq!(row, vec![int(4), int(6), int(0), int(-1)]);
    }
}
