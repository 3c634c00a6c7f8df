//! Certification of homogeneous Lagrangian orbits in complex projective space.
//!
//! A compact simple group `K` acting unitarily on `V = C^{N+1}` acts on `P(V)`.
//! An orbit `K.[v]` is Lagrangian exactly when the projective moment map
//! vanishes at `[v]` and the complexified orbit is open.  This crate builds
//! the root-system combinatorics (exact rational arithmetic), the matrix
//! representations, the moment map machinery (value, gradient flow, isotropy
//! subalgebras), and the case table of the known Lagrangian orbits, each of
//! which can be certified numerically.

pub mod algebra;
pub mod classification;
pub mod error;
pub mod linalg;
pub mod momentmap;
pub mod representations;
pub mod rootsystem;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
