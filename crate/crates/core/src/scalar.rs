//! Coefficient scalars.
//!
//! Every algebra type in this crate is generic over a [`Scalar`]. The exact
//! rational instantiation ([`crate::Rational`]) is the one used by the
//! verification suites; machine integers are used internally to cache
//! structure constants, and floating point types work for quick experiments
//! where exact zero tests are not needed.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Field (or ring, for integer caches) of coefficients.
pub trait Scalar:
    Num + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Lifts a small integer structure constant into the scalar type.
pub(crate) fn from_int<T: Scalar>(c: i128) -> T {
    T::from_i128(c).unwrap_or_else(|| panic!("structure constant {c} not representable"))
}

pub(crate) fn from_usize<T: Scalar>(c: usize) -> T {
    from_int(c as i128)
}
