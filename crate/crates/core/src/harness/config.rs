use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    TwoCircles,
    TwoCirclesNoisy,
    Circle,
    Brownian,
    Custom,
}

/// How the scale `delta` is chosen for each sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "policy")]
pub enum DeltaPolicy {
    Fixed { delta: f64 },
    DeltaK { a: f64, b: f64 },
    DeltaHat { beta: f64 },
    DeltaPrime { a: f64, b: f64, target_dim: Option<usize>, window_frac: f64, grid: Vec<f64> },
    Grid { deltas: Vec<f64> },
    /// The sampling error itself (Hausdorff distance to the domain).
    SamplingError,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub name: ExperimentKind,
    /// Sample sizes (points per circle for the circle experiments).
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub degree: usize,
    pub field: u32,
    pub truncation: f64,
    pub delta: DeltaPolicy,
    pub out_dir: Option<PathBuf>,
    /// Circle radii.
    pub radii: Vec<f64>,
    /// Uniform function-value noise amplitude.
    pub zeta: f64,
    /// Reference-grid size for the sampling error of circles.
    pub reference_grid: usize,
    /// Resolution `m` of the random walk.
    pub resolution: usize,
    pub path_seed: u64,
    /// Record wall-clock times in the report (makes it nondeterministic).
    pub timings: bool,
}

impl ExperimentConfig {
    pub fn defaults(name: ExperimentKind) -> Self {
        let grid: Vec<f64> = (1..=50).map(|i| i as f64 * 0.01).collect();
        let base = ExperimentConfig {
            name,
            sizes: vec![200],
            seeds: vec![0],
            degree: 1,
            field: 2,
            truncation: 10.0,
            delta: DeltaPolicy::Grid { deltas: grid },
            out_dir: None,
            radii: vec![1.0, 0.6],
            zeta: 0.0,
            reference_grid: crate::geometry::DEFAULT_REFERENCE_GRID,
            resolution: 100_000,
            path_seed: 0,
            timings: false,
        };
        match name {
            ExperimentKind::TwoCircles => base,
            ExperimentKind::TwoCirclesNoisy => ExperimentConfig { zeta: 0.05, ..base },
            ExperimentKind::Circle => ExperimentConfig {
                radii: vec![1.0],
                ..base
            },
            ExperimentKind::Brownian => ExperimentConfig {
                sizes: vec![100, 316, 1000, 3162, 10_000],
                seeds: (0..5).collect(),
                degree: 0,
                delta: DeltaPolicy::SamplingError,
                radii: Vec::new(),
                ..base
            },
            ExperimentKind::Custom => ExperimentConfig {
                delta: DeltaPolicy::DeltaHat { beta: 1.0 },
                radii: Vec::new(),
                ..base
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.seeds.is_empty() {
            return Err(Error::InvalidParameter("sizes and seeds must be nonempty".into()));
        }
        if !(self.truncation > 0.0) {
            return Err(Error::InvalidParameter("truncation must be positive".into()));
        }
        if !(self.zeta >= 0.0) {
            return Err(Error::InvalidParameter("zeta must be nonnegative".into()));
        }
        crate::field::Field::new(self.field)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub k: usize,
    pub seed: u64,
    pub delta: f64,
    pub error: Option<f64>,
    pub eps: Option<f64>,
    pub runtime_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub rows: Vec<Row>,
    pub fit: Option<Fit>,
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub(crate) fn sort_rows(&mut self) {
        self.rows.sort_by(|a, b| {
            a.k.cmp(&b.k)
                .then(a.seed.cmp(&b.seed))
                .then(a.delta.total_cmp(&b.delta))
        });
    }
}
