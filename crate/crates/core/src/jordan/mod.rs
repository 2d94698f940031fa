//! Necessary conditions for non-semisimple monodromy on `H^1` of the Milnor
//! fiber of a surface germ, checked by exact linear algebra on the
//! combinatorics of an embedded resolution.
//!
//! Passing both conditions means only that the necessary conditions hold;
//! it is not a proof that the monodromy is non-semisimple.

mod conditions;
mod fixture;
mod graph;
mod local;

pub use conditions::{
    check_condition_one, check_condition_two, find_witness, strata_sets, WitnessProblem, WitnessVector,
};
pub use fixture::{a3_graph, a3_multiplicity_one_graph};
pub use graph::{position_sign, Block, Component, ResolutionGraph, Stratum};
pub use local::local_system_cohomology_product;
