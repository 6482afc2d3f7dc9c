//! Flat `key = value` configuration. Every physical parameter maps to one
//! documented key; unknown keys and out-of-range values are rejected before
//! any computation starts.

use kawahara_core::norms::NormParams;
use kawahara_core::spectral::{DispersionParams, GridSpec};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    Solve,
    VerifyBilinear,
    Counterexample,
    ConvergePointwise,
    ConvergeUniform,
    Truncate,
    StrichartzCheck,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Solve => "solve",
            ExperimentKind::VerifyBilinear => "verify-bilinear",
            ExperimentKind::Counterexample => "counterexample",
            ExperimentKind::ConvergePointwise => "converge-pointwise",
            ExperimentKind::ConvergeUniform => "converge-uniform",
            ExperimentKind::Truncate => "truncate",
            ExperimentKind::StrichartzCheck => "strichartz-check",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "solve" => ExperimentKind::Solve,
            "verify-bilinear" => ExperimentKind::VerifyBilinear,
            "counterexample" => ExperimentKind::Counterexample,
            "converge-pointwise" => ExperimentKind::ConvergePointwise,
            "converge-uniform" => ExperimentKind::ConvergeUniform,
            "truncate" => ExperimentKind::Truncate,
            "strichartz-check" => ExperimentKind::StrichartzCheck,
            _ => return None,
        })
    }
}

/// What the initial data of the solver-driven experiments looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataProfile {
    Rough,
    Cosine,
    Zero,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Fully-resolved experiment parameters (defaults filled in).
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// optional `kind` key from the file; the CLI subcommand must match it
    pub kind: Option<ExperimentKind>,

    // dispersion
    pub alpha: f64,
    pub beta: f64,

    // grid
    pub half_length: f64,
    pub points: usize,

    // solver
    pub dt: f64,
    pub t_end: f64,
    pub dealias: bool,
    pub store_every: usize,

    // indices
    pub epsilon: f64,
    pub s: f64,
    pub s2: f64,
    /// modulation index; `None` derives `b = 1/2 + epsilon`
    pub b: Option<f64>,

    // data
    pub data: DataProfile,
    pub k_max: f64,
    pub margin: f64,
    pub amplitude: f64,
    pub data_mode: i64,
    pub seed: u64,

    // families / ratio checks
    pub samples: usize,
    pub family_points: usize,
    pub family_half_length: f64,
    pub family_k_max: f64,
    pub n_time: usize,
    pub t_len: f64,

    // ladders
    /// `None` keeps the per-experiment default ladder
    pub n_values: Option<Vec<f64>>,
    pub s_values: Vec<f64>,
    pub lambda_values: Vec<f64>,
    pub density: usize,
    pub t_max: f64,
    pub dyadic_levels: u32,
    pub n_trunc: f64,
    pub exploratory: bool,
    pub exploratory_s: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            kind: None,
            alpha: 1.0,
            beta: 0.0,
            half_length: 64.0 * std::f64::consts::PI,
            points: 4096,
            dt: 1e-4,
            t_end: 0.1,
            dealias: true,
            store_every: 16,
            epsilon: 0.1,
            s: 0.25,
            s2: -0.4,
            b: None,
            data: DataProfile::Rough,
            k_max: 8.0,
            margin: 0.05,
            amplitude: 0.5,
            data_mode: 4,
            seed: 1,
            samples: 30,
            family_points: 128,
            family_half_length: 4.0 * std::f64::consts::PI,
            family_k_max: 5.0,
            n_time: 768,
            t_len: 0.12,
            n_values: None,
            s_values: vec![
                -1.0, -0.875, -0.75, -0.625, -0.5, -0.375, -0.25, -0.125, 0.0,
            ],
            lambda_values: Vec::new(),
            density: 16,
            t_max: 0.1,
            dyadic_levels: 6,
            n_trunc: 2.0,
            exploratory: false,
            exploratory_s: -0.25,
        }
    }
}

fn parse_float(key: &str, value: &str) -> Result<f64, ConfigError> {
    // lengths may be given as multiples of pi, e.g. `l = 64pi`
    let (txt, scale) = match value.strip_suffix("pi") {
        Some(rest) => (rest.trim(), std::f64::consts::PI),
        None => (value, 1.0),
    };
    let base: f64 = if txt.is_empty() && scale != 1.0 {
        1.0
    } else {
        txt.parse().map_err(|_| {
            ConfigError(format!(
                "key `{}`: cannot parse `{}` as a number",
                key, value
            ))
        })?
    };
    Ok(base * scale)
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>, ConfigError> {
    value
        .split(',')
        .map(|p| parse_float(key, p.trim()))
        .collect()
}

fn parse_usize(key: &str, value: &str) -> Result<usize, ConfigError> {
    value.parse().map_err(|_| {
        ConfigError(format!(
            "key `{}`: cannot parse `{}` as an integer",
            key, value
        ))
    })
}

fn parse_bool(key: &str, value: &str) -> Result<bool, ConfigError> {
    match value {
        "true" | "1" | "on" | "yes" => Ok(true),
        "false" | "0" | "off" | "no" => Ok(false),
        _ => Err(ConfigError(format!(
            "key `{}`: cannot parse `{}` as a boolean",
            key, value
        ))),
    }
}

/// Parse flat `key = value` text (one pair per line, `#` comments).
pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let mut cfg = ExperimentConfig::default();
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = match raw_line.split_once('#') {
            Some((head, _)) => head.trim(),
            None => raw_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            ConfigError(format!(
                "line {}: expected `key = value`, got `{}`",
                line_no + 1,
                line
            ))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "kind" => {
                cfg.kind = Some(ExperimentKind::parse(value).ok_or_else(|| {
                    ConfigError(format!("key `kind`: unknown experiment `{}`", value))
                })?)
            }
            "alpha" => cfg.alpha = parse_float(key, value)?,
            "beta" => cfg.beta = parse_float(key, value)?,
            "l" => cfg.half_length = parse_float(key, value)?,
            "m" => cfg.points = parse_usize(key, value)?,
            "dt" => cfg.dt = parse_float(key, value)?,
            "t" => cfg.t_end = parse_float(key, value)?,
            "dealias" => cfg.dealias = parse_bool(key, value)?,
            "store_every" => cfg.store_every = parse_usize(key, value)?,
            "epsilon" => cfg.epsilon = parse_float(key, value)?,
            "s" => cfg.s = parse_float(key, value)?,
            "s2" => cfg.s2 = parse_float(key, value)?,
            "b" => cfg.b = Some(parse_float(key, value)?),
            "data" => {
                cfg.data = match value {
                    "rough" => DataProfile::Rough,
                    "cosine" => DataProfile::Cosine,
                    "zero" => DataProfile::Zero,
                    _ => {
                        return Err(ConfigError(format!(
                            "key `data`: expected rough|cosine|zero, got `{}`",
                            value
                        )))
                    }
                }
            }
            "k_max" => cfg.k_max = parse_float(key, value)?,
            "margin" => cfg.margin = parse_float(key, value)?,
            "amplitude" => cfg.amplitude = parse_float(key, value)?,
            "data_mode" => {
                cfg.data_mode = value.parse().map_err(|_| {
                    ConfigError(format!("key `data_mode`: cannot parse `{}`", value))
                })?
            }
            "seed" => {
                cfg.seed = value
                    .parse()
                    .map_err(|_| ConfigError(format!("key `seed`: cannot parse `{}`", value)))?
            }
            "samples" => cfg.samples = parse_usize(key, value)?,
            "family_m" => cfg.family_points = parse_usize(key, value)?,
            "family_l" => cfg.family_half_length = parse_float(key, value)?,
            "family_k_max" => cfg.family_k_max = parse_float(key, value)?,
            "n_time" => cfg.n_time = parse_usize(key, value)?,
            "t_len" => cfg.t_len = parse_float(key, value)?,
            "n_values" => cfg.n_values = Some(parse_list(key, value)?),
            "s_values" => cfg.s_values = parse_list(key, value)?,
            "lambda_values" => cfg.lambda_values = parse_list(key, value)?,
            "density" => cfg.density = parse_usize(key, value)?,
            "t_max" => cfg.t_max = parse_float(key, value)?,
            "dyadic_levels" => cfg.dyadic_levels = parse_usize(key, value)? as u32,
            "n_trunc" => cfg.n_trunc = parse_float(key, value)?,
            "exploratory" => cfg.exploratory = parse_bool(key, value)?,
            "exploratory_s" => cfg.exploratory_s = parse_float(key, value)?,
            _ => return Err(ConfigError(format!("unknown key `{}`", key))),
        }
    }
    Ok(cfg)
}

/// Read and parse a config file.
pub fn load_config(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {}", path.display(), e)))?;
    parse_config(&text)
}

impl ExperimentConfig {
    /// derived modulation index
    pub fn b_value(&self) -> f64 {
        self.b.unwrap_or(0.5 + self.epsilon)
    }

    /// Validate against the module preconditions and construct the core
    /// parameter objects. Nothing heavy runs before this succeeds.
    pub fn resolve(&self, kind: ExperimentKind) -> Result<Resolved, ConfigError> {
        if let Some(file_kind) = self.kind {
            if file_kind != kind {
                return Err(ConfigError(format!(
                    "config file declares kind `{}` but the command line asked for `{}`",
                    file_kind.name(),
                    kind.name()
                )));
            }
        }
        if self.alpha == 0.0 {
            return Err(ConfigError("alpha must be nonzero".into()));
        }
        let params =
            DispersionParams::new(self.alpha, self.beta).map_err(|e| ConfigError(e.to_string()))?;
        let grid = GridSpec::new(self.half_length, self.points)
            .map_err(|e| ConfigError(format!("grid: {}", e)))?;
        if !(self.dt > 0.0 && self.t_end > 0.0) {
            return Err(ConfigError("dt and t must be positive".into()));
        }
        if self.store_every == 0 {
            return Err(ConfigError("store_every must be >= 1".into()));
        }
        let norm = NormParams::new(
            self.s,
            self.b_value(),
            self.epsilon,
            self.s2,
            4.0 * params.a(),
            &params,
        )
        .map_err(|e| ConfigError(e.to_string()))?;
        if matches!(self.data, DataProfile::Rough) && self.k_max > grid.max_xi() {
            return Err(ConfigError(format!(
                "k_max = {} exceeds the grid's largest frequency {}",
                self.k_max,
                grid.max_xi()
            )));
        }
        if matches!(kind, ExperimentKind::Counterexample) {
            if self.density < 8 {
                return Err(ConfigError(
                    "density must be >= 8 points per rectangle half-width".into(),
                ));
            }
            if let Some(n_values) = &self.n_values {
                if n_values.len() < 4 {
                    return Err(ConfigError("n_values needs at least 4 entries".into()));
                }
                if n_values.iter().any(|&n| n < 4.0) {
                    return Err(ConfigError(
                        "counterexample frequencies must be >= 4".into(),
                    ));
                }
            }
        }
        Ok(Resolved {
            kind,
            params,
            grid,
            norm,
            cfg: self.clone(),
        })
    }

    /// Key-value echo of the configuration (including derived indices) for
    /// the manifest.
    pub fn echo(&self, kind: ExperimentKind) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            map.insert(k.to_string(), v);
        };
        put("kind", kind.name().to_string());
        put("alpha", format!("{}", self.alpha));
        put("beta", format!("{}", self.beta));
        put("l", format!("{}", self.half_length));
        put("m", format!("{}", self.points));
        put("dt", format!("{}", self.dt));
        put("t", format!("{}", self.t_end));
        put("dealias", format!("{}", self.dealias));
        put("store_every", format!("{}", self.store_every));
        put("epsilon", format!("{}", self.epsilon));
        put("s", format!("{}", self.s));
        put("s2", format!("{}", self.s2));
        put("b", format!("{}", self.b_value()));
        put("b_prime", format!("{}", -0.5 + 2.0 * self.epsilon));
        put("s1", format!("{}", 0.5 + 2.0 * self.epsilon));
        put("data", format!("{:?}", self.data).to_lowercase());
        put("k_max", format!("{}", self.k_max));
        put("margin", format!("{}", self.margin));
        put("amplitude", format!("{}", self.amplitude));
        put("data_mode", format!("{}", self.data_mode));
        put("seed", format!("{}", self.seed));
        put("samples", format!("{}", self.samples));
        put("family_m", format!("{}", self.family_points));
        put("family_l", format!("{}", self.family_half_length));
        put("family_k_max", format!("{}", self.family_k_max));
        put("n_time", format!("{}", self.n_time));
        put("t_len", format!("{}", self.t_len));
        put("density", format!("{}", self.density));
        put("t_max", format!("{}", self.t_max));
        put("dyadic_levels", format!("{}", self.dyadic_levels));
        put("n_trunc", format!("{}", self.n_trunc));
        put("exploratory", format!("{}", self.exploratory));
        put("exploratory_s", format!("{}", self.exploratory_s));
        put(
            "n_values",
            match &self.n_values {
                Some(vals) => vals
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                None => "default".to_string(),
            },
        );
        put(
            "s_values",
            self.s_values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        put(
            "lambda_values",
            self.lambda_values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        map
    }
}

/// Validated configuration plus the constructed core parameter objects.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub kind: ExperimentKind,
    pub params: DispersionParams,
    pub grid: GridSpec,
    pub norm: NormParams,
    pub cfg: ExperimentConfig,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_defaults() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg.alpha, 1.0);
        assert_eq!(cfg.beta, 0.0);
        assert_eq!(cfg.points, 4096);
        assert_eq!(cfg.epsilon, 0.1);
        assert!((cfg.half_length - 64.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn zero_alpha_rejected_with_named_constraint() {
        let cfg = parse_config("alpha = 0\n").unwrap();
        let err = cfg.resolve(ExperimentKind::Solve).unwrap_err();
        assert!(err.0.contains("alpha must be nonzero"), "{}", err.0);
    }

    #[test]
    fn unknown_key_named_in_error() {
        let err = parse_config("alpa = 1\n").unwrap_err();
        assert!(err.0.contains("alpa"), "{}", err.0);
    }

    #[test]
    fn pi_suffix_and_comments() {
        let cfg = parse_config("# comment\nl = 8pi # trailing\nm = 256\n").unwrap();
        assert!((cfg.half_length - 8.0 * std::f64::consts::PI).abs() < 1e-12);
        assert_eq!(cfg.points, 256);
    }

    #[test]
    fn derived_indices_echoed() {
        let cfg = parse_config("epsilon = 0.1\ns = -1.0\n").unwrap();
        let echo = cfg.echo(ExperimentKind::Counterexample);
        assert_eq!(echo["b"], "0.6");
        assert_eq!(echo["b_prime"], "-0.3");
        assert_eq!(echo["s1"], "0.7");
        // s = -1 is accepted for the counterexample scan (the scan probes
        // the failing range on purpose)
        assert!(cfg.resolve(ExperimentKind::Counterexample).is_ok());
    }

    #[test]
    fn kind_mismatch_rejected() {
        let cfg = parse_config("kind = solve\n").unwrap();
        assert!(cfg.resolve(ExperimentKind::Truncate).is_err());
    }
}
