//! Exact computation of orbit Dirichlet series of Cartesian products of
//! maps whose orbit distributions match subgroup growth of free abelian
//! groups, through the joint (des, maj) generating polynomials of multiset
//! permutations.
//!
//! The crate is organized as:
//!
//! - [`partition`] / [`words`]: partitions, multiset permutations, descent
//!   statistics
//! - [`poly`] / [`qbinom`] / [`series`]: exact bivariate polynomials,
//!   Gaussian binomials, factored rational series
//! - [`carlitz`]: the polynomials C_lambda(x,q), functional equations,
//!   unitary factors and the nonvanishing scan
//! - [`orbit`]: orbit counts, Euler factors, Dirichlet coefficients and
//!   asymptotics
//! - [`analysis`]: Newton/ghost boundary data, Igusa-form coefficients,
//!   reduced series and Hilbert-series cross-checks
//! - [`render`]: the canonical text/JSON/CSV output forms shared by the CLI
//!   and the C API

pub mod analysis;
pub mod carlitz;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod poly;
pub mod qbinom;
pub mod render;
pub mod series;
pub mod words;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::BivarPoly;
pub use series::{DenomFactor, RationalSeries};
