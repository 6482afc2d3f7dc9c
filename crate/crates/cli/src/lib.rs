//! Experiment orchestration behind the `kawahara-lab` binary: flat
//! key-value configuration, dispatch to the library experiments, CSV/manifest
//! persistence and static SVG plots.

pub mod config;
pub mod experiments;
pub mod manifest;
pub mod plot;
pub mod run;

pub use config::{load_config, parse_config, ExperimentConfig, ExperimentKind};
pub use manifest::RunManifest;
pub use run::{run, RunError};
