//! Finite strict n-categories and n-groupoids.
//!
//! Cells are stored in flat globular form with total composition tables. On top of
//! that sit functors, lax transformations and modifications, homotopy pullbacks,
//! the classifying functors `π0`, `D`, `Ω`, `π1`, and exactness checks that build the
//! long exact sequences of a pointed groupoid morphism.

pub mod cat;
pub mod construct;
pub mod dot;
pub mod error;
pub mod exactness;
pub mod fixtures;
pub mod functors;
pub mod io;
pub mod laws;
pub mod limits;
pub mod morphism;
pub mod search;
pub mod transf;
pub mod validate;

pub use cat::{Cell, NCat};
pub use error::{CatError, Res};
pub use morphism::{validate_functor, Morphism};
pub use transf::{star, validate_transf2, validate_transf3, Transf2, Transf3};
pub use validate::{validate, Report, Violation};
