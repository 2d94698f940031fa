//! Exact arithmetic substrate: rationals, truncated power series, matrices
//! over the rationals and finite cochain complexes.

mod arith;
mod complex;
mod matrix;
mod rat;
mod series;

pub use arith::{
    binomial, divisors, euler_phi, gcd_list, gen_binomial, lcm_list, mobius,
};
pub use complex::{cohomology_dims, CochainComplex};
pub use matrix::{rank, RatMatrix};
pub use rat::{format_rat, parse_rat, rat, rat_to_integer, serde_rat, Rat};
pub use series::{series_geom_inverse, series_mul, TruncSeries};
