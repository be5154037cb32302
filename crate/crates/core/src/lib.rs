//! Computer algebra for the nonsymmetric operads of totally compatible
//! (`²As`) and linearly compatible (`As²`) di-algebras.
//!
//! The crate covers quadratic presentations and their Koszul duals, the
//! rewriting check for Koszulness, the closed form of `²As` with the cobar
//! differential of `As²∞`, and homotopy transfer of dg `As²`-algebras along
//! deformation retracts. All arithmetic is exact over ℚ.

pub mod cobar;
pub mod error;
pub mod free;
pub mod linalg;
pub mod presentation;
pub mod rewriting;
pub mod transfer;

pub use error::{Error, Result};
