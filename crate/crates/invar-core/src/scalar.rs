//! Coefficient domains shared by the matrix and exterior-algebra machinery.

use crate::Rat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact coefficient domain: a commutative ring with decidable equality,
/// exact division by known divisors, and an embedding of the rationals.
///
/// Implemented by [`Rat`] for plain rational coordinates and by
/// [`ParamPoly`](crate::parampoly::ParamPoly) for coordinates carrying free
/// parameters, so elimination, wedge products, and span checks are written
/// once and work over both.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds a rational constant into the domain.
    fn from_rat(r: Rat) -> Self;

    /// Returns the value as a rational constant when it is one.
    fn to_rat(&self) -> Option<Rat>;

    /// Exact division by a divisor known to divide `self` without remainder.
    ///
    /// # Panics
    ///
    /// Panics when the division leaves a remainder; callers only invoke this
    /// where exactness is guaranteed (Bareiss elimination, content removal).
    fn exact_div(&self, div: &Self) -> Self;
}

impl Scalar for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }

    fn exact_div(&self, div: &Self) -> Self {
        assert!(!div.is_zero(), "exact_div by zero");
        self / div
    }
}
