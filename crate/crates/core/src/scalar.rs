//! Exact scalar arithmetic. Every coordinate, penalty, and derived quantity
//! in this crate is a [`Scalar`] (an arbitrary-precision rational); no
//! floating point enters any predicate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Exact fraction `num/den`. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Midpoint of two scalars.
pub fn mid(a: &Scalar, b: &Scalar) -> Scalar {
    (a + b) / int(2)
}

pub fn min_s(a: Scalar, b: Scalar) -> Scalar {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max_s(a: Scalar, b: Scalar) -> Scalar {
    if a >= b {
        a
    } else {
        b
    }
}

/// Compact display form: `p/q`, or just `p` when the denominator is one.
pub fn to_display(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// True iff `s` is a perfect square of a rational; returns the non-negative
/// root when it is.
pub fn exact_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let num = s.numer().sqrt();
    let den = s.denom().sqrt();
    if &(&num * &num) == s.numer() && &(&den * &den) == s.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(to_display(&int(-3)), "-3");
        assert_eq!(to_display(&frac(1, 2)), "1/2");
        assert_eq!(to_display(&frac(4, 2)), "2");
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
        assert_eq!(exact_sqrt(&int(0)), Some(int(0)));
        assert_eq!(exact_sqrt(&int(-1)), None);
    }
}
