//! Small exact-rational helpers shared across the crate.

use num::rational::Ratio;
use num::{BigInt, BigRational, Zero};

/// Exact rational scalar used for pairings, heights, and mod-1 exponents.
pub type Frac = Ratio<i64>;

/// Shorthand constructor.
pub fn frac(num: i64, den: i64) -> Frac {
    Ratio::new(num, den)
}

/// Reduces a rational to the half-open interval `[0, 1)`.
pub fn mod1(r: Frac) -> Frac {
    r - r.floor()
}

pub fn to_big(r: Frac) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Exact downcast; `None` if the value does not fit in `i64`.
pub fn from_big(r: &BigRational) -> Option<Frac> {
    use num::ToPrimitive;
    Some(Ratio::new(r.numer().to_i64()?, r.denom().to_i64()?))
}

pub fn big_is_integer(r: &BigRational) -> bool {
    r.denom() == &BigInt::from(1) || r.numer().is_zero()
}
