//! Exact uniform sampling of states, rejection and functional Monte Carlo,
//! and sample export.
//!
//! Every Monte Carlo run is split into a fixed number of ChaCha8 streams.
//! Stream results are reduced in stream order, so an estimate depends on
//! the seed and the stream count but not on [`Execution`].

mod estimate;
mod exact;
mod export;
mod rng;
mod runner;

pub use estimate::{
    estimate_functional_mc, estimate_functionals_mc, estimate_volume_mc, FunctionalEstimate, McEstimate, MIN_SAMPLES,
    NON_FINITE_WARN_FRACTION,
};
pub use exact::{sample_state, sample_states};
pub use export::{csv_header, write_csv, Entry, SampleSet, StateRecord};
pub use rng::RngStream;
pub use runner::{run_streams, stream_counts, Execution, McConfig, Moments, DEFAULT_STREAMS};
