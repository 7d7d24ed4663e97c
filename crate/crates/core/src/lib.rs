//! Constructive `(I, F_d)`-partitions of sparse graphs.
//!
//! A graph whose maximum average degree is below `M` gets its vertices split
//! into an independent set `I` and a set `F` inducing a forest of maximum
//! degree at most `d`. The solver reduces the graph configuration by
//! configuration and extends the partition back, and every step can be
//! checked independently: exact maximum average degree, orientation
//! feasibility, discharging ledgers and an exhaustive oracle.
//!
//! The crate is `no_std` with `alloc` when the default `std` feature is off.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod dsu;

pub mod density;
pub mod discharge;
pub mod flow;
pub mod graph;
pub mod lightforest;
pub mod oracle;
pub mod orientation;
pub mod partition;
pub mod solver;

pub use density::{mad_exact, thresholds, DensityWitness, Rational, ThresholdReport};
pub use graph::{Graph, GraphError, IdMap, Multigraph, VertexId};
pub use partition::{Partition, Side, VerifyReport};
pub use discharge::{SolveParams, Theorem};
pub use solver::{solve, SolveOutcome, SolveResult};
