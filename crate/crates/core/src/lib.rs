//! Exact symbolic tensor calculus for contact pseudo-metric structures.
//!
//! Components are canonical rational functions with rational coefficients,
//! so every identity check is an exact zero test.

pub mod contact;
pub mod error;
pub mod soliton;
pub mod symbolic;
pub mod tensor;

pub use error::{Error, Result};
