//! Betti tables of Milnor fibers, monodromy characteristic polynomials and
//! zeta functions, Jordan block bounds and rank consistency checks.

mod betti;
mod checks;
mod cyclo;
mod input;

pub use betti::{
    betti_bounds_thm02, betti_table_thm03, chi_lambda, classify_eigenvalue, BettiCell, BettiRow,
    BettiTable, ClassKey, EigenvalueClass, Rank, TableSource,
};
pub use checks::{jordan_bound, thm01_rank_check, RankFailure, RankVerdict};
pub use cyclo::{char_poly_per_degree, zeta_function, CycloProduct};
pub use input::{ConeInvariants, ConeSingularityInput, SncLinkInput};
