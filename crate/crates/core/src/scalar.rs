//! Exact scalar fields for the representation oracle.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{NumAssign, NumOps, One, Signed, Zero};

use crate::Lambda;

/// An exact field of characteristic zero.
///
/// Only exact types are admitted: kernels and ranks are decided by testing
/// entries against zero, which floating point cannot do reliably.
pub trait Field:
    Clone + PartialEq + Debug + Zero + One + NumOps + std::ops::Neg<Output = Self> + Send + Sync
{
    fn from_i64(x: i64) -> Self;
    fn from_lambda(x: &Lambda) -> Self;
    /// Reduced `p/q` form, or `p` for integers.
    fn render(&self) -> String;
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + NumAssign + Display + Debug + From<i64> + Send + Sync,
{
    fn from_i64(x: i64) -> Self {
        Ratio::from_integer(T::from(x))
    }

    fn from_lambda(x: &Lambda) -> Self {
        Ratio::new(T::from(*x.numer()), T::from(*x.denom()))
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}
