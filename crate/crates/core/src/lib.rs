//! Exact enumeration of alternating-sign matrices, including the half-turn
//! symmetric ones, together with their square-ice partition functions as exact
//! Laurent polynomials.
//!
//! The `verify` module checks the identities relating the two sides, including
//! the determinant formulas at the special point `a = ζ`.

pub mod asm;
pub mod determinant;
pub mod enumerate;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod icemodel;
pub mod laurent;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Coeff, CycloNum, Rational};
pub use laurent::{IntPoly, LaurentPoly, Monomial, VarAssignment};
