use super::config::{DeltaPolicy, ExperimentConfig, Report, Row};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::build_function_rips;
use crate::geometry::SampledSpace;
use crate::modalg::{smoothed_presentation, Presentation};
use crate::scale::{delta_hat, delta_k, delta_prime, ABStandard, PlateauOptions, PlateauTarget};

/// The estimator on user data: one row per selected scale, without an error
/// column since no ground truth is known. Returns the smoothed presentation
/// alongside the report.
pub fn run_custom(cfg: &ExperimentConfig, space: &SampledSpace) -> Result<(Report, Presentation)> {
    cfg.validate()?;
    let field = Field::new(cfg.field)?;
    let k = space.len();
    let complex = build_function_rips(space, cfg.degree + 1);
    let deltas = match &cfg.delta {
        DeltaPolicy::Fixed { delta } => vec![*delta],
        DeltaPolicy::Grid { deltas } => deltas.clone(),
        DeltaPolicy::DeltaK { a, b } => vec![delta_k(k, ABStandard::new(*a, *b)?)?],
        DeltaPolicy::DeltaHat { beta } => vec![delta_hat(space, *beta)?],
        DeltaPolicy::DeltaPrime {
            a,
            b,
            target_dim,
            window_frac,
            grid,
        } => {
            let opts = PlateauOptions {
                grid: grid.clone(),
                window_frac: *window_frac,
                target: target_dim.map_or(PlateauTarget::Constant, PlateauTarget::Dim),
                field,
            };
            let dp = delta_prime(&complex, cfg.degree, ABStandard::new(*a, *b)?, &opts)?;
            vec![dp.at(k)?]
        }
        DeltaPolicy::SamplingError => {
            return Err(Error::InvalidParameter(
                "the sampling error is unknown for user data".into(),
            ))
        }
    };
    let est = smoothed_presentation(&complex, cfg.degree, field)?;
    let rows = deltas
        .into_iter()
        .map(|delta| Row {
            k,
            seed: cfg.seeds[0],
            delta,
            error: None,
            eps: None,
            runtime_ms: 0,
        })
        .collect();
    let mut report = Report {
        config: cfg.clone(),
        rows,
        fit: None,
    };
    report.sort_rows();
    Ok((report, est))
}
