//! Enumeration of minimal transversals of hypergraphs and of bi-objective
//! minimal transversals of red/blue hypergraph pairs.
//!
//! * [`hypergraph`]: hypergraphs, red/blue instances, and the derived sets
//!   (hit edges, blue stars, safe vertices, the covering predicate).
//! * [`dualize`]: minimal transversal enumeration (Berge, brute force) and
//!   the incremental completeness check.
//! * [`biobj`]: minimal blue subsets and the two-phase bi-objective
//!   enumeration, with a brute-force reference.
//! * [`formula`]: the equivalent monotone AND-OR-AND formula view.
//! * [`reduce`]: 3-SAT gadgets and seeded random instances.

pub mod biobj;
pub mod dualize;
pub mod error;
pub mod formula;
pub mod hypergraph;
pub mod reduce;
pub mod set;

pub use biobj::{bi_transversals, bidual_check, brute_force_btr, build_ha, lemma2_check, minimal_bsets, BiSolution};
pub use dualize::{
    berge_dualize, brute_force_dualize, dual_check, self_duality_check, Berge, BruteForce, Completeness, Dualizer,
};
pub use error::{Error, Result};
pub use formula::{eval, formula_to_instance, gen_check, instance_to_formula, minimal_models, Formula3};
pub use hypergraph::{
    blue_star, f_predicate, hit_edges, is_minimal_transversal, is_transversal, minimize_within, s_of_b, BiInstance,
    Hypergraph, SolutionSet,
};
pub use reduce::{extract_assignment, reduce_deg3, reduce_dim2, Gadget, Literal, SatInstance, Variant};
pub use set::{BitSet, EdgeSubset, VertexSet};
