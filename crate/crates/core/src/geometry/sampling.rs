use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hausdorff_by, SampledSpace};
use crate::error::Result;

/// Default reference-grid size for measuring the sampling error.
pub const DEFAULT_REFERENCE_GRID: usize = 10_000;

/// A uniform sample of a geodesic circle together with its sampling error.
#[derive(Clone, Debug)]
pub struct CircleSample {
    pub space: SampledSpace,
    pub angles: Vec<f64>,
    pub radius: f64,
    /// Hausdorff distance from the sample to a dense reference grid.
    pub eps: f64,
    /// Convexity radius `pi R / 2`.
    pub rho: f64,
}

/// `k` i.i.d. uniform points on the circle of radius `radius` with the
/// arc-length metric; function value = vertical height `R sin(theta)`.
pub fn sample_circle(radius: f64, k: usize, seed: u64) -> Result<CircleSample> {
    sample_circle_with_grid(radius, k, seed, DEFAULT_REFERENCE_GRID)
}

pub fn sample_circle_with_grid(
    radius: f64,
    k: usize,
    seed: u64,
    grid: usize,
) -> Result<CircleSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let angles: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
    circle_from_angles(radius, angles, grid)
}

pub(crate) fn circle_from_angles(radius: f64, angles: Vec<f64>, grid: usize) -> Result<CircleSample> {
    let k = angles.len();
    let mut dist = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..i {
            let d = arc(radius, angles[i], angles[j]);
            dist[i * k + j] = d;
            dist[j * k + i] = d;
        }
    }
    let coords = angles
        .iter()
        .map(|t| vec![radius * t.cos(), radius * t.sin()])
        .collect();
    let values = angles.iter().map(|t| vec![radius * t.sin()]).collect();
    let space = SampledSpace::from_matrix(dist, values, Some(coords))?;
    let reference: Vec<f64> = (0..grid).map(|i| 2.0 * PI * i as f64 / grid as f64).collect();
    let eps = if k == 0 {
        f64::INFINITY
    } else {
        hausdorff_by(k, grid, |i, j| arc(radius, angles[i], reference[j]))?
    };
    Ok(CircleSample {
        space,
        angles,
        radius,
        eps,
        rho: PI * radius / 2.0,
    })
}

fn arc(radius: f64, a: f64, b: f64) -> f64 {
    let d = (a - b).abs().rem_euclid(2.0 * PI);
    radius * d.min(2.0 * PI - d)
}

/// Rademacher random walk approximating Brownian motion on `[0, 1]`:
/// returns `g(j/m)` for `j = 0..=m`, with `g(0) = 0` and steps `+-sqrt(1/m)`.
pub fn brownian_path(m: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = (1.0 / m as f64).sqrt();
    let mut out = Vec::with_capacity(m + 1);
    let mut acc = 0i64;
    out.push(0.0);
    for _ in 0..m {
        acc += if rng.gen::<bool>() { 1 } else { -1 };
        out.push(step * acc as f64);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antipodal_points() {
        let c = circle_from_angles(1.0, vec![0.0, PI, PI / 2.0], 100).unwrap();
        assert!((c.space.dist(0, 1) - PI).abs() < 1e-15);
        assert!((c.space.value(2)[0] - 1.0).abs() < 1e-15);
        assert!((c.rho - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn brownian_steps() {
        let g = brownian_path(400, 9);
        assert_eq!(g.len(), 401);
        assert_eq!(g[0], 0.0);
        for w in g.windows(2) {
            assert!(((w[1] - w[0]).abs() - 0.05).abs() < 1e-12);
        }
    }
}
