//! Critical-temperature Ising Monte Carlo on an L x 3L strip with a frozen
//! mixed boundary row, free top, and antiperiodic seam; Swendsen–Wang
//! cluster updates, a single-spin Metropolis reference implementation, and
//! dual-lattice interface tracing with fair-coin branch resolution.

pub mod cluster;
mod error;
pub mod experiment;
pub mod interface;
pub mod lattice;
pub mod metropolis;
pub mod streams;

pub use cluster::cluster_sweep;
pub use error::{IsingError, Result};
pub use experiment::{
    integrated_autocorrelation, run_experiment, run_replicas, RunConfig, RunMetadata,
    RunOutcome, TaggedSample,
};
pub use interface::{trace_interface, InterfaceSample};
pub use lattice::{build_lattice, critical_beta, SpinLattice};
pub use metropolis::metropolis_sweep;
