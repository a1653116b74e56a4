//! Scale selection: the explicit rate `delta_k`, the subsampling estimator
//! `delta_hat`, the pointwise-dimension heuristic `delta_prime`, and
//! log-log regression of convergence data.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::BifilteredComplex;
use crate::geometry::{hausdorff, SampledSpace};
use crate::invariants::pointwise_dimension_curve;

/// Constants of an (a, b)-standard measure: balls of radius `r` have mass
/// at least `min(1, a r^b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ABStandard {
    a: f64,
    b: f64,
}

impl ABStandard {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) || !(b >= 1.0) {
            return Err(Error::InvalidParameter(format!("need a > 0 and b >= 1 (got a={a}, b={b})")));
        }
        Ok(ABStandard { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// `4 (2 ln k / (a k))^(1/b)`.
pub fn delta_k(k: usize, ab: ABStandard) -> Result<f64> {
    if k < 2 {
        return Err(Error::SampleTooSmall(k));
    }
    let k = k as f64;
    Ok(4.0 * (2.0 * k.ln() / (ab.a * k)).powf(1.0 / ab.b))
}

/// Subsample size `ceil(k / (ln k)^(1 + beta))`, clamped to `[1, k]`.
pub fn s_k(k: usize, beta: f64) -> Result<usize> {
    if k < 2 {
        return Err(Error::SampleTooSmall(k));
    }
    if !(beta > 0.0) {
        return Err(Error::InvalidParameter(format!("beta must be positive (got {beta})")));
    }
    let kf = k as f64;
    let s = (kf / kf.ln().powf(1.0 + beta)).ceil();
    Ok((s as usize).clamp(1, k))
}

/// Hausdorff distance between the first `s_k` points and the whole sample.
pub fn delta_hat(sample: &SampledSpace, beta: f64) -> Result<f64> {
    let k = sample.len();
    let s = s_k(k, beta)?;
    delta_hat_with(sample, s)
}

/// Hausdorff distance between the first `s` points and the whole sample.
pub fn delta_hat_with(sample: &SampledSpace, s: usize) -> Result<f64> {
    let k = sample.len();
    if s == 0 || s > k {
        return Err(Error::CountOutOfRange { k: s, n: k });
    }
    let head: Vec<usize> = (0..s).collect();
    let all: Vec<usize> = (0..k).collect();
    hausdorff(sample, &head, &all)
}

/// What the pointwise-dimension curve should settle to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlateauTarget {
    /// The curve equals this dimension over a full window.
    Dim(usize),
    /// The curve is constant over a full window.
    Constant,
}

/// First grid value at which the curve settles: the start of the earliest
/// window of `max(1, floor(window_frac * len))` consecutive grid points on
/// which the target holds.
pub fn find_plateau(grid: &[f64], curve: &[usize], target: PlateauTarget, window_frac: f64) -> Result<f64> {
    let n = curve.len().min(grid.len());
    let w = ((window_frac * n as f64).floor() as usize).max(1);
    if n < w {
        return Err(Error::NoPlateau);
    }
    (0..=n - w)
        .find(|&i| {
            let win = &curve[i..i + w];
            match target {
                PlateauTarget::Dim(d) => win.iter().all(|&x| x == d),
                PlateauTarget::Constant => win.iter().all(|&x| x == win[0]),
            }
        })
        .map(|i| grid[i])
        .ok_or(Error::NoPlateau)
}

/// The rule `k -> (delta_star / delta_{k0}) delta_k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaPrime {
    pub delta_star: f64,
    pub k0: usize,
    pub ab: ABStandard,
}

impl DeltaPrime {
    pub fn ratio(&self) -> Result<f64> {
        Ok(self.delta_star / delta_k(self.k0, self.ab)?)
    }

    pub fn at(&self, k: usize) -> Result<f64> {
        Ok(self.ratio()? * delta_k(k, self.ab)?)
    }
}

/// Options of the plateau heuristic.
#[derive(Clone, Debug)]
pub struct PlateauOptions {
    pub grid: Vec<f64>,
    pub window_frac: f64,
    pub target: PlateauTarget,
    pub field: Field,
}

/// Calibrate the rate on a reference complex of `k0` vertices from the first
/// grid scale at which its pointwise-dimension curve settles.
pub fn delta_prime(
    c: &BifilteredComplex,
    degree: usize,
    ab: ABStandard,
    opts: &PlateauOptions,
) -> Result<DeltaPrime> {
    let curve = pointwise_dimension_curve(c, degree, &opts.grid, None, opts.field)?;
    let delta_star = find_plateau(&opts.grid, &curve, opts.target, opts.window_frac)?;
    let k0 = c.num_vertices();
    delta_k(k0, ab)?;
    Ok(DeltaPrime { delta_star, k0, ab })
}

/// Ordinary least squares on `(log10 x, log10 y)`; returns `(slope, intercept)`.
pub fn loglog_regression(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 || points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite()) {
        return Err(Error::NonPositiveData);
    }
    let n = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.log10()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.log10()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("regression needs two distinct x values".into()));
    }
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::build_function_rips;

    #[test]
    fn rate_formula() {
        let ab = ABStandard::new(1.0, 2.0).unwrap();
        let want = 4.0 * (2.0 * 100f64.ln() / 100.0).sqrt();
        assert!((delta_k(100, ab).unwrap() - want).abs() < 1e-12);
        assert!((want - 1.21394).abs() < 1e-5);
        assert!(delta_k(1, ab).is_err());
        let wide = ABStandard::new(1.0, 1e12).unwrap();
        assert!((delta_k(100, wide).unwrap() - 4.0).abs() < 1e-9);
        for k in 3..200 {
            assert!(delta_k(k + 1, ab).unwrap() < delta_k(k, ab).unwrap());
        }
    }

    #[test]
    fn halving_a_doubles_delta() {
        let b = 3.0;
        let ab = ABStandard::new(1.7, b).unwrap();
        let ab2 = ABStandard::new(1.7 / 2f64.powf(b), b).unwrap();
        let r = delta_k(57, ab2).unwrap() / delta_k(57, ab).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn subsample_size() {
        assert_eq!(s_k(100, 1.0).unwrap(), 5);
        assert_eq!(s_k(2, 1.0).unwrap(), 2);
    }

    #[test]
    fn full_subsample_gives_zero() {
        let sp = SampledSpace::euclidean(vec![vec![0.0], vec![0.3], vec![1.0]], vec![vec![0.0]; 3]).unwrap();
        assert_eq!(delta_hat_with(&sp, 3).unwrap(), 0.0);
        assert_eq!(delta_hat_with(&sp, 1).unwrap(), 1.0);
    }

    #[test]
    fn regression_recovers_power_law() {
        let pts: Vec<(f64, f64)> = [10.0, 100.0, 1000.0, 1e4]
            .iter()
            .map(|&x: &f64| (x, 10f64.powf(0.16) * x.powf(-0.47)))
            .collect();
        let (s, i) = loglog_regression(&pts).unwrap();
        assert!((s + 0.47).abs() < 1e-12 && (i - 0.16).abs() < 1e-12);
        let (s, _) = loglog_regression(&[(1.0, 3.0), (2.0, 3.0), (5.0, 3.0)]).unwrap();
        assert_eq!(s, 0.0);
        assert!(loglog_regression(&[(1.0, 0.0), (2.0, 1.0)]).is_err());
    }

    #[test]
    fn plateau_rules() {
        let grid: Vec<f64> = (0..10).map(|i| i as f64).collect();
        assert_eq!(find_plateau(&grid, &[2; 10], PlateauTarget::Constant, 0.2).unwrap(), 0.0);
        assert!(find_plateau(&grid, &[0; 10], PlateauTarget::Dim(1), 0.2).is_err());
    }

    #[test]
    fn square_plateau_at_one() {
        let sp = SampledSpace::euclidean(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            vec![vec![0.0]; 4],
        )
        .unwrap();
        let c = build_function_rips(&sp, 2);
        let ab = ABStandard::new(1.0, 2.0).unwrap();
        let opts = PlateauOptions {
            grid: (0..=40).map(|i| i as f64 * 0.05).collect(),
            window_frac: 0.2,
            target: PlateauTarget::Dim(1),
            field: Field::default(),
        };
        let dp = delta_prime(&c, 1, ab, &opts).unwrap();
        assert_eq!(dp.delta_star, 1.0);
        let want = 1.0 / delta_k(4, ab).unwrap() * delta_k(50, ab).unwrap();
        assert_eq!(dp.at(50).unwrap(), want);
    }
}
