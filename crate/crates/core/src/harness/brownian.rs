use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::{DeltaPolicy, ExperimentConfig, Fit, Report, Row};
use super::{sub_seed, sublevel_barcode_1d};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::build_function_rips_truncated;
use crate::geometry::{brownian_path, SampledSpace};
use crate::invariants::{bottleneck, slice_vertical, Barcode};
use crate::modalg::smoothed_presentation;
use crate::scale::{delta_k, loglog_regression, ABStandard};

/// Hausdorff distance from a finite subset of `[0, 1]` to the interval.
pub fn unit_interval_hausdorff(xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::EmptyHausdorff);
    }
    let mut s = xs.to_vec();
    s.sort_by(f64::total_cmp);
    let gap = s.windows(2).map(|w| (w[1] - w[0]) / 2.0).fold(0.0, f64::max);
    Ok(gap.max(s[0]).max(1.0 - s[s.len() - 1]))
}

/// Value at `x` of the piecewise-constant path `t -> path[floor(t m)]`.
pub fn sample_path_function(path: &[f64], x: f64) -> f64 {
    let m = path.len() - 1;
    let mf = m as f64;
    let mut i = ((x * mf).floor().max(0.0) as usize).min(m);
    // the grid point j/m must map to j exactly
    while i < m && (i + 1) as f64 / mf <= x {
        i += 1;
    }
    while i > 0 && i as f64 / mf > x {
        i -= 1;
    }
    path[i]
}

fn trial(cfg: &ExperimentConfig, path: &[f64], truth: &Barcode, k: usize, seed: u64) -> Result<Row> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, k as u64));
    let xs: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..1.0)).collect();
    let eps = unit_interval_hausdorff(&xs)?;
    let delta = match &cfg.delta {
        DeltaPolicy::SamplingError => eps,
        DeltaPolicy::Fixed { delta } => *delta,
        DeltaPolicy::DeltaK { a, b } => delta_k(k, ABStandard::new(*a, *b)?)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "delta policy {other:?} is not supported by the Brownian experiment"
            )))
        }
    };
    let values = xs.iter().map(|&x| vec![sample_path_function(path, x)]).collect();
    let space = SampledSpace::euclidean(xs.iter().map(|&x| vec![x]).collect(), values)?;
    let complex = build_function_rips_truncated(&space, 1, 2.0 * delta);
    let est = smoothed_presentation(&complex, 0, Field::new(cfg.field)?)?;
    let error = bottleneck(&slice_vertical(&est, delta)?, truth, cfg.truncation);
    Ok(Row {
        k,
        seed,
        delta,
        error: Some(error),
        eps: Some(eps),
        runtime_ms: if cfg.timings { start.elapsed().as_millis() as u64 } else { 0 },
    })
}

/// Convergence of the `H_0` estimator for one random-walk path.
///
/// The fit regresses `log10 error` on `log10 eps` over rows with positive
/// error.
pub fn run_brownian(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    if cfg.resolution == 0 {
        return Err(Error::InvalidParameter("resolution must be >= 1".into()));
    }
    let path = brownian_path(cfg.resolution, cfg.path_seed);
    let truth = sublevel_barcode_1d(&path)?;
    let jobs: Vec<(usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&k| cfg.seeds.iter().map(move |&s| (k, s)))
        .collect();
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(k, s)| trial(cfg, &path, &truth, k, s))
        .collect::<Result<_>>()?;
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| match (r.eps, r.error) {
            (Some(e), Some(err)) if e > 0.0 && err > 0.0 => Some((e, err)),
            _ => None,
        })
        .collect();
    let fit = loglog_regression(&pts).ok().map(|(slope, intercept)| Fit { slope, intercept });
    let mut report = Report {
        config: cfg.clone(),
        rows,
        fit,
    };
    report.sort_rows();
    Ok(report)
}
