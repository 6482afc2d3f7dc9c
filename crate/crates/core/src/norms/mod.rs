//! Discrete Sobolev, Bourgain `X_{s,b}` and mixed space-time norms, the
//! resonance function, and two-resolution stability checks for a catalog of
//! linear, Strichartz and maximal estimates.

mod estimates;
mod family;
mod lebesgue;
mod params;
mod ratio;
mod spacetime;
mod weights;

pub use estimates::{estimate_catalog, run_estimate_check, EstimateId, EstimateProfile};
pub use family::{BumpData, BumpFamily};
pub use lebesgue::{mixed_norm, mixed_norm_naive, Exponent, NormOrder};
pub use params::NormParams;
pub use ratio::{two_resolution_report, RatioReport, RatioSample};
pub use spacetime::{SpaceTimeSamples, SpaceTimeSpectrum};
pub use weights::{bracket, resonance_gap, sobolev_norm};
