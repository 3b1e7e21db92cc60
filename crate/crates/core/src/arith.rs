//! Exact integer arithmetic conventions shared by every module.
//!
//! All division here is Euclidean with respect to a positive base: remainders
//! always land in `[0, b)`, including for negative dividends. Language-default
//! truncated division is never used.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::collections::FiniteSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// The base of a division or interval was zero or negative.
    #[error("base must be at least 1, got {0}")]
    NonPositiveBase(BigInt),
    /// `radix_interval(0)` was requested; the smallest legal interval is `[1] = {0}`.
    #[error("interval length must be at least 1")]
    EmptyInterval,
}

fn check_base(b: &BigInt) -> Result<(), ArithError> {
    if b.is_positive() {
        Ok(())
    } else {
        Err(ArithError::NonPositiveBase(b.clone()))
    }
}

/// Nonnegative remainder of `n` on division by `b`: the unique `r` with
/// `0 <= r < b` and `b | (n - r)`.
pub fn rem_euclid(n: &BigInt, b: &BigInt) -> Result<BigInt, ArithError> {
    check_base(b)?;
    Ok(n.mod_floor(b))
}

/// Floor quotient: the unique `q` with `n = q*b + rem_euclid(n, b)`.
pub fn div_floor(n: &BigInt, b: &BigInt) -> Result<BigInt, ArithError> {
    check_base(b)?;
    Ok(Integer::div_floor(n, b))
}

/// Quotient and Euclidean remainder in a single division.
pub fn div_rem_euclid(n: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt), ArithError> {
    check_base(b)?;
    Ok(n.div_mod_floor(b))
}

/// The integer interval `[n] = {0, 1, ..., n-1}`.
pub fn radix_interval(n: &BigInt) -> Result<FiniteSet, ArithError> {
    if !n.is_positive() {
        return Err(ArithError::EmptyInterval);
    }
    let mut elements = Vec::new();
    let mut cur = BigInt::zero();
    while cur < *n {
        elements.push(cur.clone());
        cur += 1;
    }
    Ok(FiniteSet::new(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn rem_euclid_examples() {
        assert_eq!(rem_euclid(&int(538), &int(10)).unwrap(), int(8));
        assert_eq!(rem_euclid(&int(0), &int(7)).unwrap(), int(0));
        assert_eq!(rem_euclid(&int(-35), &int(3)).unwrap(), int(1));
    }

    #[test]
    fn rem_euclid_rejects_bad_base() {
        assert_eq!(
            rem_euclid(&int(5), &int(0)),
            Err(ArithError::NonPositiveBase(int(0)))
        );
        assert!(rem_euclid(&int(5), &int(-3)).is_err());
    }

    #[test]
    fn div_floor_examples() {
        assert_eq!(div_floor(&int(538), &int(10)).unwrap(), int(53));
        assert_eq!(div_floor(&int(-35), &int(3)).unwrap(), int(-12));
        assert_eq!(div_floor(&int(7), &int(4)).unwrap(), int(1));
        assert!(div_floor(&int(7), &int(0)).is_err());
    }

    #[test]
    fn radix_interval_examples() {
        assert_eq!(radix_interval(&int(2)).unwrap(), FiniteSet::from_i64s(&[0, 1]));
        assert_eq!(
            radix_interval(&int(10)).unwrap(),
            FiniteSet::from_i64s(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9])
        );
        assert_eq!(radix_interval(&int(1)).unwrap(), FiniteSet::from_i64s(&[0]));
        assert_eq!(radix_interval(&int(0)), Err(ArithError::EmptyInterval));
    }

    proptest! {
        #[test]
        fn division_identity(n in -100_000i64..100_000, b in 1i64..10_000) {
            let (n, b) = (int(n), int(b));
            let q = div_floor(&n, &b).unwrap();
            let r = rem_euclid(&n, &b).unwrap();
            prop_assert_eq!(&q * &b + &r, n);
            prop_assert!(r >= int(0));
            prop_assert!(r < b);
        }

        #[test]
        fn div_rem_agrees(n in -100_000i64..100_000, b in 1i64..10_000) {
            let (n, b) = (int(n), int(b));
            let (q, r) = div_rem_euclid(&n, &b).unwrap();
            prop_assert_eq!(q, div_floor(&n, &b).unwrap());
            prop_assert_eq!(r, rem_euclid(&n, &b).unwrap());
        }
    }
}
