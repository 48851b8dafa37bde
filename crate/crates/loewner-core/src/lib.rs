//! Discretized dipolar Loewner evolution in the strip 0 < Im z < pi delta.
//!
//! The driving is piecewise constant over steps of size h and each step uses
//! the exact constant-driving solution of the flow (an elementary slit map),
//! so all discretization error lives in the driving path itself. The crate
//! covers driving-path sampling, forward map-chain evolution with fate
//! classification, trace extraction, and the upper-boundary endpoint
//! estimator.
//!
//! All values are immutable after construction; ensembles parallelize over
//! (seed, stream) pairs with bit-reproducible results.

mod boundary;
mod chain;
mod driving;
mod error;
mod evolve;
pub mod export;
mod params;
mod slit_map;
pub mod streams;
mod trace;

pub use boundary::{
    boundary_inverse, boundary_map, classify_upper, endpoint_on_upper_boundary,
    endpoint_preimage, UpperFate,
};
pub use chain::{MapChain, SlitStep};
pub use driving::{sample_driving, DrivingPath};
pub use error::{LoewnerError, Result};
pub use evolve::{evolve_point, evolve_point_with_checkpoints, PointFate, PointState};
pub use params::SleParams;
pub use slit_map::{
    elementary_inverse, elementary_map, elementary_map_eps, slit_height, SlitOutcome,
};
pub use trace::{trace, Trace};

pub use num_complex::Complex64;
