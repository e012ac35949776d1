//! Exact symbolic arithmetic for the C2-equivariant ordinary cohomology of
//! antisymmetric quadrics, the ambient projective spaces, and the
//! four-dimensional Grassmannian model, over the constant Mackey functor.
//!
//! Everything is computed by term rewriting against the defining relations;
//! there are no floating-point numbers and no truncations anywhere.

pub mod basis;
pub mod burnside;
pub mod element;
pub mod error;
pub mod grading;
pub mod grassmann;
pub mod hpoint;
pub mod restrict;
pub mod rewrite;
pub mod space;
pub mod staircase;

pub use element::{Element, QMonomial};
pub use error::{EqqError, Result};
pub use grading::Grading;
pub use space::Space;

/// Engine version stamp; bump when normal forms or table layouts change.
pub const ENGINE_VERSION: &str = concat!("eqq-", env!("CARGO_PKG_VERSION"));
pub mod render;
pub mod diagram;
pub mod expr;
