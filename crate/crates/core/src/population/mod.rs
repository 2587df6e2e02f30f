//! Reproduction procedures, population graphs, the invariant difference operator.

pub mod explore;
pub mod graph;
pub mod invariance;
pub mod operator;
pub mod reproduce;

pub use explore::{
    explore_sampled, explore_symbolic, specialize_node, trivial_seed, verify_seed, Anchor, SampleOptions,
    SymbolicPopulation,
};
pub use graph::{Edge, GraphDoc, MoveKind, NodeDoc, PopulationGraph};
pub use invariance::{default_values, invariance_report, specialized_report, EdgeCheck, InvarianceReport};
pub use operator::{build_operator, factor_witness};
pub use reproduce::{
    bosonic_reproduce, bosonic_rhs, bosonic_solve, fermionic_reproduce, fermionic_rhs, reproduce, rigid_reproduce,
    BosonicFamily,
};
