//! Exact computer algebra for grade-3 homogeneous ideals in k[x,y,z]:
//! graded free resolutions, Macaulay inverse systems, Pfaffian matrix
//! families, iterated trimming complexes, and Tor algebra classification.
//!
//! All arithmetic is exact, over a prime field (default F_32003) or the
//! rationals. See the `cli` binary for the command-line surface.

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod linalg;
pub mod ideal;
pub mod graded;
pub mod complex;
pub mod resolution;
pub mod pfaffian;
pub mod invsys;
pub mod profile;
pub mod trimming;
pub mod tor;
pub mod realize;
pub mod fileio;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Scalar, DEFAULT_PRIME};
