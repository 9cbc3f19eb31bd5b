//! Exact enumeration and classification of full-rank sublattices of the
//! coweight lattice `A*_n` and of `n`-dimensional lattice simplices.
//!
//! Sublattices are counted up to isometry and proper isometry, simplices up
//! to unimodular equivalence as unordered or oriented simplices. Matrix
//! transposition carries one classification onto the other; [`simplex`]
//! checks this on complete enumerations, [`burnside`] provides a second
//! counting route and [`duality`] compares a lattice with its dual.
//!
//! All routines are generic over a checked fixed-width integer ([`Scalar`]);
//! the aliases below fix it to `i64`.

pub mod autgroup;
pub mod burnside;
pub mod cli;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod intmat;
pub mod scalar;
pub mod simplex;

pub use enumerate::{CountRow, CountTable, Method, ObjectKind, Relation};
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar for all computations.
pub type Int = i64;

pub type IntMatrix = intmat::Matrix<Int>;
pub type HnfBasis = intmat::Hnf<Int>;
pub type AutGroup = autgroup::MatrixGroup<Int>;
pub type OrbitKey = enumerate::OrbitKey<Int>;
pub type SimplexKey = simplex::SimplexKey<Int>;

/// 128-bit variants for inputs whose intermediate products exceed `i64`.
pub type WideMatrix = intmat::Matrix<i128>;
pub type WideGroup = autgroup::MatrixGroup<i128>;
