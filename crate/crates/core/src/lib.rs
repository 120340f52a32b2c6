//! Exact polynomial algebra over ℚ and 𝔽_p, unimodular rows over finitely presented
//! algebras, and explicit morphisms between split quadrics.

pub mod algebra;
pub mod arith;
pub mod error;
pub mod io;
pub mod poly;
pub mod quadric;
pub mod rows;

pub use arith::{FieldConfig, Scalar};
pub use error::{Error, Result};
