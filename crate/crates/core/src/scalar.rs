//! Scalar traits the matrix code is generic over.
//!
//! [`Scalar`] is a commutative ring with exact equality (integers, rationals).
//! [`ExactField`] adds exact division and a sign, which is all that
//! elimination and congruence diagonalization need. Floating point types are
//! deliberately not `ExactField`: signatures are decided by the sign of exact
//! pivots.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> {}

pub trait ExactField: Scalar + Signed {}

impl<T> ExactField for Ratio<T> where T: Clone + Debug + Display + Integer + Signed {}
