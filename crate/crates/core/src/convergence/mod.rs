//! Convergence experiments: rough data at prescribed regularity, truncation
//! convergence, pointwise convergence via exceedance/Chebyshev measures, and
//! uniform convergence of the Duhamel correction.

mod maximal;
mod pointwise;
mod rough;
mod truncation;
mod uniform;

pub use maximal::{maximal_check, MaximalProfile};
pub use pointwise::{pointwise_experiment, ExceedanceReport, ExceedanceRow};
pub use rough::{rough_data, RoughDataSpec, RoughProfile};
pub use truncation::truncation_error;
pub use uniform::uniform_experiment;
