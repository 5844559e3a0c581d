//! Exact arithmetic in the universal enveloping algebra U(gl_d), the
//! quasi-derivations on it, and executable checks that iterated
//! quasi-derivations of central elements commute.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix the
//! coefficient field to exact rationals, which is what the checks use.

pub mod classical;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod pbw;
pub mod quasideriv;
pub mod scalar;
pub mod shift;
pub mod verify;

pub use classical::SymElement;
pub use error::{Error, Result};
pub use matrix::ElementMatrix;
pub use pbw::{normal_order, GenIndex, UeaElement, Word};
pub use scalar::Scalar;
pub use shift::ShiftMatrix;

/// Arbitrary-precision rational coefficients.
pub type Rational = num_rational::BigRational;

/// Element of U(gl_d) over ℚ.
pub type Element = UeaElement<Rational>;

/// Matrix over U(gl_d) with rational coefficients.
pub type Matrix = ElementMatrix<Rational>;

/// Rational shift matrix ξ.
pub type Shift = ShiftMatrix<Rational>;

/// Element of S(gl_d) over ℚ.
pub type Sym = SymElement<Rational>;
