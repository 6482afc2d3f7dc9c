//! Orchestration: validate, dispatch inside a sized worker pool, persist the
//! manifest, optionally render plots.

use crate::config::{ExperimentConfig, ExperimentKind};
use crate::experiments::{dispatch, ArtifactSink};
use crate::manifest::{make_run_id, RunManifest, Status};
use crate::plot::{emit_plot, plot_kind_for};
use std::path::Path;
use std::time::Instant;

#[derive(Debug)]
pub enum RunError {
    /// rejected before any computation started (exit code 1)
    Validation(String),
    /// failed during computation or persistence (exit code 2)
    Runtime(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Validation(m) => write!(f, "validation error: {}", m),
            RunError::Runtime(m) => write!(f, "runtime failure: {}", m),
        }
    }
}

impl std::error::Error for RunError {}

/// Run one experiment. On success the manifest has `completed` status; on a
/// compute failure the manifest is still written with the failure reason and
/// whatever artifacts were produced, and the error is returned.
pub fn run(
    kind: ExperimentKind,
    cfg: &ExperimentConfig,
    out_dir: &Path,
    threads: Option<usize>,
    plots: bool,
) -> Result<RunManifest, RunError> {
    let resolved = cfg
        .resolve(kind)
        .map_err(|e| RunError::Validation(e.to_string()))?;
    std::fs::create_dir_all(out_dir)
        .map_err(|e| RunError::Runtime(format!("cannot create {}: {}", out_dir.display(), e)))?;

    let started = Instant::now();
    let config_echo = cfg.echo(kind);
    let run_id = make_run_id(&config_echo);
    let mut sink = ArtifactSink::new(out_dir);

    let outcome = match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| RunError::Runtime(format!("worker pool: {}", e)))?;
            pool.install(|| dispatch(&resolved, &mut sink))
        }
        None => dispatch(&resolved, &mut sink),
    };

    let mut manifest = RunManifest {
        run_id,
        status: Status::Completed,
        wall_time_seconds: started.elapsed().as_secs_f64(),
        config: config_echo,
        artifacts: sink.names.clone(),
        notes: sink.notes.clone(),
    };

    if let Err(e) = outcome {
        manifest.status = Status::Failed(e.to_string());
        manifest.wall_time_seconds = started.elapsed().as_secs_f64();
        manifest
            .write(out_dir)
            .map_err(|io| RunError::Runtime(format!("cannot write manifest: {}", io)))?;
        return Err(RunError::Runtime(e.to_string()));
    }

    if plots {
        let csv_names: Vec<String> = manifest.artifacts.clone();
        for name in csv_names {
            let Some(kind) = plot_kind_for(&name) else {
                continue;
            };
            match emit_plot(&out_dir.join(&name), kind) {
                Ok(svg) => {
                    let rel = svg
                        .file_name()
                        .map(|f| f.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    manifest.artifacts.push(rel);
                }
                Err(e) => {
                    let reason = format!("plot {}: {}", name, e);
                    manifest.status = Status::Failed(reason.clone());
                    manifest.wall_time_seconds = started.elapsed().as_secs_f64();
                    manifest.write(out_dir).map_err(|io| {
                        RunError::Runtime(format!("cannot write manifest: {}", io))
                    })?;
                    return Err(RunError::Runtime(reason));
                }
            }
        }
    }

    manifest.wall_time_seconds = started.elapsed().as_secs_f64();
    manifest
        .write(out_dir)
        .map_err(|io| RunError::Runtime(format!("cannot write manifest: {}", io)))?;
    Ok(manifest)
}
