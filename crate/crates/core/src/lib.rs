//! Facet checks for lifted multicut polytopes.
//!
//! A [`LiftedInstance`] is a connected graph `G = (V, E)` together with
//! lifted pairs `F`. Its feasible 0/1 vectors over `E ∪ F` are the lifted
//! multicuts, and this crate answers facet questions about their convex hull
//! in two ways:
//!
//! * exactly, by enumerating the feasible set and computing affine ranks
//!   ([`polytope`]);
//! * structurally, with the separator criterion for lower box inequalities
//!   ([`box_facet`]) and the `f_d`-path criterion for cut inequalities
//!   ([`cut_facet`]).
//!
//! [`sat`] builds the 3-SAT gadget showing that the cut criterion is
//! NP-hard, and [`sweep`] cross-validates the structural checks against the
//! exact oracle.

pub mod box_facet;
pub mod cli;
pub mod cut_facet;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod multicut;
pub mod polytope;
pub mod sat;
pub mod sweep;

pub use box_facet::{
    check_box_facet, compute_h_sequence, find_odd_separator_cycle, separator_edge_subgraph,
    verify_orthogonal_equality, BoxFacetVerdict, HSequence, Witness,
};
pub use cut_facet::{check_cut_condition, find_fd_path, is_fd_path, validate_cut, CutFacetVerdict, FCut};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Node, NodeCycle, NodePath};
pub use multicut::{
    enumerate_feasible, find_violated_constraint, is_feasible, solve_brute_force, vector_from_parts,
    LiftedInstance, MulticutVector, Violation,
};
pub use polytope::{affine_rank, box_inequality, cut_to_inequality, face_report, BoxSide, FaceReport, LinearInequality};
pub use sat::{brute_force_sat, parse_dimacs, reduce, verify_reduction, Cnf3, ReductionInstance};
