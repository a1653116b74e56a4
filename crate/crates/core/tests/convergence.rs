use fgest::filtration::build_function_rips_truncated;
use fgest::geometry::sample_circle;
use fgest::harness::{run_brownian, DeltaPolicy, ExperimentConfig, ExperimentKind};
use fgest::invariants::{bottleneck, slice_vertical, Barcode};
use fgest::modalg::smoothed_presentation;
use fgest::scale::delta_hat;
use fgest::Field;

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

#[test]
fn circle_error_at_delta_hat_decreases_with_k() {
    let target = Barcode::new([(-1.0, f64::INFINITY)]);
    let mut means = Vec::new();
    for k in [250, 500, 1000, 2000] {
        let mut total = 0.0;
        for seed in 0..20 {
            let space = sample_circle(1.0, k, seed).unwrap().space;
            let delta = delta_hat(&space, 1.0).unwrap();
            let c = build_function_rips_truncated(&space, 1, 2.0 * delta);
            let p = smoothed_presentation(&c, 0, Field::default()).unwrap();
            total += bottleneck(&slice_vertical(&p, delta).unwrap(), &target, 10.0);
        }
        means.push(total / 20.0);
    }
    assert!(means.windows(2).all(|w| w[1] < w[0]), "{means:?}");
}

#[test]
fn brownian_median_error_decreases_when_k_doubles() {
    let mut cfg = ExperimentConfig::defaults(ExperimentKind::Brownian);
    cfg.resolution = 20_000;
    cfg.sizes = vec![100, 200, 400, 800];
    cfg.seeds = (0..10).collect();
    cfg.delta = DeltaPolicy::SamplingError;
    let report = run_brownian(&cfg).unwrap();
    let medians: Vec<f64> = cfg
        .sizes
        .iter()
        .map(|&k| median(report.rows.iter().filter(|r| r.k == k).map(|r| r.error.unwrap()).collect()))
        .collect();
    assert!(medians.windows(2).all(|w| w[1] < w[0]), "{medians:?}");
}
