//! Network community profiling.
//!
//! This crate extracts candidate communities from undirected graphs with
//! several partitioner families (seeded spectral diffusion, flow-based
//! bisection + quotient-cut improvement, global spectral sweeps, and
//! betweenness dendrograms), scores them under twelve quality objectives,
//! assembles size-resolved network community profiles (the lower envelope
//! of the best score found at each cluster size), and certifies results
//! against spectral and SDP conductance lower bounds.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `ncp` binary for a reproducible end-to-end pipeline.

pub mod baselines;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod flow;
pub mod graph;
pub mod linalg;
pub mod local;
pub mod profile;
pub mod scoring;

pub use error::{Error, Result};
pub use graph::{Cluster, Graph, LoadOptions};
pub use profile::{Generator, NcpProfile, ScoredCluster};
pub use scoring::{score, score_all, ScoreKind, ScoreValue};
