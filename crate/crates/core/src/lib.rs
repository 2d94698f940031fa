//! Exact computation of Milnor fiber cohomology, monodromy characteristic
//! polynomials and zeta functions for hypersurface germs whose zero locus has
//! simple normal crossings away from the singular point.
//!
//! Everything is exact: rationals are arbitrary precision and every rank is
//! obtained by Gaussian elimination over the rationals.
//!
//! Module map:
//!
//! - [`exactalg`]: rationals, truncated power series, matrices, cochain complexes.
//! - [`chern_euler`]: Euler characteristics of strata of the exceptional divisor.
//! - [`koszul`]: Koszul complexes and their stupid truncations.
//! - [`spectral`]: E1 pages of weight spectral sequences.
//! - [`milnor`]: Betti tables, characteristic polynomials, zeta functions.
//! - [`jordan`]: witnesses for non-semisimple monodromy on resolution graphs.

pub mod chern_euler;
pub mod error;
pub mod exactalg;
pub mod jordan;
pub mod koszul;
pub mod milnor;
pub mod spectral;

pub use error::{Error, Result};
