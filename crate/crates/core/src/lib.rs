//! Exact dominator colorings of directed graphs.
//!
//! A dominator coloring of a digraph is a proper coloring in which every
//! vertex with an out-neighbor has some whole color class inside its
//! out-neighborhood. This crate verifies such colorings, computes the
//! minimum number of classes for a fixed digraph, sweeps every orientation
//! of a base graph, builds the standard path/cycle/star/bipartite families
//! with explicit optimal colorings, and derives orientation invariants.

pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod solver;

pub use coloring::{
    dominated_classes, is_proper, verify, Coloring, DominationMode, Verdict, Violation,
};
pub use error::{
    ColoringError, FamilyError, GraphError, InvariantError, ParseError, ParseErrorKind, SolveError,
};
pub use families::{
    chi_d_cycle_formula, chi_d_path_formula, cycle_optimal, path_optimal, ConstructiveWitness,
    FamilySpec, TournamentChooser,
};
pub use graph::{cycle_symmetry_classes, BaseGraph, Digraph, DigraphBuilder, OrientationCode};
pub use invariants::{
    discrepancy, is_subdigraph, sigma, sigma_star, Embedding, SigmaReport, SigmaStarReport,
};
pub use solver::{
    chi, chi_d, chi_d_oracle, max_over_orientations, min_over_orientations, sweep, Extremum,
    SolveOutcome, SweepConfig, SweepReport,
};
