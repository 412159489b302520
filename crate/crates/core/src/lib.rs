//! Exact rational computations with finite-dimensional Lie algebras:
//! central, derivation and double extensions, the Chevalley–Eilenberg
//! complex, and contact, Frobenius, Kähler and Sasakian structures.
//!
//! ```
//! use lieforge::{catalog, extensions, scalar::frac, scalar::int, LinearMap};
//!
//! let d = LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1)]);
//! let ext = extensions::derivation_extension(&catalog::h3(), &d).unwrap();
//! assert_eq!(ext.algebra, catalog::d4half());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod derivations;
pub mod error;
pub mod extensions;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structures;

pub use algebra::{LieAlgebra, LinearMap, Subspace, Vector};
pub use error::{Error, Result};
pub use forms::{KForm, WedgeConvention};
pub use report::{CheckItem, CheckReport, Witness};
pub use scalar::Scalar;
