//! Exact smallest-eigenvalue laws of the beta-Laguerre and beta-Jacobi
//! ensembles, computed from multivariate Laguerre and Jacobi polynomials
//! indexed by square partitions.

pub mod cache;
pub mod combinat;
pub mod corpus;
pub mod error;
pub mod gamma;
pub mod hardedge;
pub mod identities;
pub mod mc;
pub mod mvop;
pub mod quad;
pub mod scalar;
pub mod symfun;
pub mod univariate;

pub use combinat::Partition;
pub use error::{Error, Result};
pub use scalar::{Field, Rational, Real, Scalar};
