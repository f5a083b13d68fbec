//! Exact normal ordering in the Weyl algebra [D, U] = 1.
//!
//! The engine normal-orders operator words by two independent routes
//! (rewriting and rook counting on Ferrers boards), provides the
//! orthogonal-polynomial families tied to symmetrized operator products,
//! and machine-checks the ordering identities connecting them. All
//! arithmetic is exact Gaussian-rational; equality everywhere means
//! bit-identical canonical forms.

pub mod arith;
pub mod boards;
pub mod cli;
pub mod error;
pub mod polys;
pub mod verify;
pub mod weyl;

pub use arith::{GaussianRational, Rational};
pub use error::{Error, Result};
pub use weyl::{CanonicalElement, NormalForm, Word};
