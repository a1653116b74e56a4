use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use super::config::{DeltaPolicy, ExperimentConfig, ExperimentKind, Report, Row};
use super::sub_seed;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::build_function_rips_truncated;
use crate::geometry::{perturb, sample_circle_with_grid, NoiseSpec, SampledSpace};
use crate::grade::format_f64;
use crate::invariants::{bottleneck, slice_vertical, Barcode};
use crate::modalg::smoothed_presentation;
use crate::scale::{delta_hat, delta_k, ABStandard};

/// One scale of one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct CirclePoint {
    pub delta: f64,
    pub error: f64,
    /// `2 delta + zeta`.
    pub bound: f64,
    /// `delta` lies in `[2 max eps, min rho / 2)`.
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CircleTrial {
    pub seed: u64,
    /// Points per circle.
    pub k: usize,
    pub eps: Vec<f64>,
    pub rho: Vec<f64>,
    pub points: Vec<CirclePoint>,
}

impl CircleTrial {
    pub fn window(&self) -> (f64, f64) {
        let e = self.eps.iter().copied().fold(0.0, f64::max);
        let r = self.rho.iter().copied().fold(f64::INFINITY, f64::min);
        (2.0 * e, r / 2.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CirclesOutcome {
    pub report: Report,
    pub trials: Vec<CircleTrial>,
}

impl CirclesOutcome {
    /// Admissible points whose error exceeds the bound.
    pub fn violations(&self) -> Vec<(u64, &CirclePoint)> {
        self.trials
            .iter()
            .flat_map(|t| {
                t.points
                    .iter()
                    .filter(|p| p.admissible && p.error > p.bound)
                    .map(move |p| (t.seed, p))
            })
            .collect()
    }

    /// `seed,k,delta,error,bound,admissible,eps_1..,rho_1..`
    pub fn to_csv(&self) -> String {
        let nr = self.trials.first().map_or(0, |t| t.eps.len());
        let mut out = String::from("seed,k,delta,error,bound,admissible");
        for i in 1..=nr {
            let _ = write!(out, ",eps{i}");
        }
        for i in 1..=nr {
            let _ = write!(out, ",rho{i}");
        }
        out.push('\n');
        for t in &self.trials {
            for p in &t.points {
                let _ = write!(
                    out,
                    "{},{},{},{},{},{}",
                    t.seed,
                    t.k,
                    format_f64(p.delta),
                    format_f64(p.error),
                    format_f64(p.bound),
                    p.admissible
                );
                for v in t.eps.iter().chain(&t.rho) {
                    let _ = write!(out, ",{}", format_f64(*v));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Circles of the given radii, disjoint (infinitely far apart), uniformly
/// sampled with `k` points each, height as the function.
fn sample_circles(cfg: &ExperimentConfig, k: usize, seed: u64) -> Result<(SampledSpace, Vec<f64>, Vec<f64>)> {
    let mut space: Option<SampledSpace> = None;
    let (mut eps, mut rho) = (Vec::new(), Vec::new());
    for (i, &r) in cfg.radii.iter().enumerate() {
        let c = sample_circle_with_grid(r, k, sub_seed(seed, i as u64), cfg.reference_grid)?;
        eps.push(c.eps);
        rho.push(c.rho);
        space = Some(match space {
            None => c.space,
            Some(s) => s.disjoint_union(&c.space)?,
        });
    }
    let mut space = space.ok_or_else(|| Error::InvalidParameter("no radii given".into()))?;
    if cfg.zeta > 0.0 {
        let noise = NoiseSpec::values_only(cfg.zeta, sub_seed(seed, 1_000))?;
        space = perturb(&space, &noise, false)?;
    }
    Ok((space, eps, rho))
}

fn deltas_for(cfg: &ExperimentConfig, space: &SampledSpace, k: usize) -> Result<Vec<f64>> {
    Ok(match &cfg.delta {
        DeltaPolicy::Fixed { delta } => vec![*delta],
        DeltaPolicy::Grid { deltas } => deltas.clone(),
        DeltaPolicy::DeltaK { a, b } => vec![delta_k(k, ABStandard::new(*a, *b)?)?],
        DeltaPolicy::DeltaHat { beta } => vec![delta_hat(space, *beta)?],
        other => {
            return Err(Error::InvalidParameter(format!(
                "delta policy {other:?} is not supported by the circle experiments"
            )))
        }
    })
}

fn circles_trial(cfg: &ExperimentConfig, k: usize, seed: u64, target: &Barcode) -> Result<(CircleTrial, Vec<Row>)> {
    let start = Instant::now();
    let field = Field::new(cfg.field)?;
    let (space, eps, rho) = sample_circles(cfg, k, seed)?;
    let deltas = deltas_for(cfg, &space, space.len())?;
    let top = deltas.iter().copied().fold(0.0, f64::max);
    let complex = build_function_rips_truncated(&space, cfg.degree + 1, 2.0 * top);
    let est = smoothed_presentation(&complex, cfg.degree, field)?;
    let mut trial = CircleTrial {
        seed,
        k,
        eps,
        rho,
        points: Vec::new(),
    };
    let (lo, hi) = trial.window();
    let max_eps = lo / 2.0;
    let mut rows = Vec::new();
    for &delta in &deltas {
        let error = bottleneck(&slice_vertical(&est, delta)?, target, cfg.truncation);
        trial.points.push(CirclePoint {
            delta,
            error,
            bound: 2.0 * delta + cfg.zeta,
            admissible: lo <= delta && delta < hi,
        });
        rows.push(Row {
            k: space.len(),
            seed,
            delta,
            error: Some(error),
            eps: Some(max_eps),
            runtime_ms: 0,
        });
    }
    if cfg.timings {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut rows {
            r.runtime_ms = ms;
        }
    }
    Ok((trial, rows))
}

fn run_circles(cfg: &ExperimentConfig) -> Result<CirclesOutcome> {
    cfg.validate()?;
    if cfg.degree != 1 {
        return Err(Error::InvalidParameter("the circle experiments estimate H_1".into()));
    }
    // each circle contributes one class born at its top, never dying
    let target = Barcode::new(cfg.radii.iter().map(|&r| (r, f64::INFINITY)));
    let jobs: Vec<(usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&k| cfg.seeds.iter().map(move |&s| (k, s)))
        .collect();
    let results: Vec<(CircleTrial, Vec<Row>)> = jobs
        .par_iter()
        .map(|&(k, s)| circles_trial(cfg, k, s, &target))
        .collect::<Result<_>>()?;
    let mut trials = Vec::new();
    let mut rows = Vec::new();
    for (t, r) in results {
        trials.push(t);
        rows.extend(r);
    }
    trials.sort_by_key(|t| (t.k, t.seed));
    let mut report = Report {
        config: cfg.clone(),
        rows,
        fit: None,
    };
    report.sort_rows();
    Ok(CirclesOutcome { report, trials })
}

/// Two disjoint geodesic circles: sweep `delta`, compare the `H_1`
/// estimator's vertical slice with the two infinite bars of the target.
pub fn run_two_circles(cfg: &ExperimentConfig) -> Result<CirclesOutcome> {
    if !matches!(cfg.name, ExperimentKind::TwoCircles | ExperimentKind::TwoCirclesNoisy) {
        return Err(Error::InvalidParameter("expected a two-circles configuration".into()));
    }
    run_circles(cfg)
}

/// A single circle; same sweep as [`run_two_circles`].
pub fn run_circle(cfg: &ExperimentConfig) -> Result<CirclesOutcome> {
    run_circles(cfg)
}
