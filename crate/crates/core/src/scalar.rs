//! Scalar types the objective values can be computed in.
//!
//! Integer-valued objectives are exact in every scalar. The gap-penalty
//! objective is a sum of rationals `n / (g*n + 1)`; floats approximate it,
//! [`BigRational`] computes it exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};
use std::fmt::Debug;

pub trait Scalar: Num + Clone + PartialOrd + Debug + ToPrimitive + Send + Sync + 'static {
    /// `num / den` in this scalar.
    fn from_ratio(num: u64, den: u64) -> Self;

    fn from_count(x: u64) -> Self {
        Self::from_ratio(x, 1)
    }

    /// Smallest difference counted as a strict improvement.
    fn improvement_margin() -> Self;
}

impl Scalar for f64 {
    fn from_ratio(num: u64, den: u64) -> Self {
        num as f64 / den as f64
    }

    fn improvement_margin() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn from_ratio(num: u64, den: u64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn improvement_margin() -> Self {
        1e-4
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: u64, den: u64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn improvement_margin() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        assert_eq!(<f64 as Scalar>::from_ratio(1, 4), 0.25);
        assert_eq!(<f32 as Scalar>::from_count(7), 7.0);
        let third = <BigRational as Scalar>::from_ratio(2, 6);
        assert_eq!(third, BigRational::new(1.into(), 3.into()));
        assert_eq!(
            BigRational::improvement_margin(),
            BigRational::from_integer(0.into())
        );
    }
}
