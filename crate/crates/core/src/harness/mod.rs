//! Experiment runners, one-dimensional ground truth and file formats.

mod brownian;
mod circles;
mod config;
mod custom;
mod io;

pub use brownian::{run_brownian, sample_path_function, unit_interval_hausdorff};
pub use circles::{run_circle, run_two_circles, CirclePoint, CircleTrial, CirclesOutcome};
pub use config::{DeltaPolicy, ExperimentConfig, ExperimentKind, Fit, Report, Row};
pub use custom::run_custom;
pub use io::{read_distance_matrix, read_point_cloud, write_point_cloud};

use crate::error::{Error, Result};
use crate::invariants::Barcode;

/// Sublevel-set `H_0` barcode of the piecewise-linear interpolation of
/// `samples` on a uniform grid.
///
/// Vertices enter by value, ties broken by index, so the leftmost of equal
/// minima is the elder. Exactly one bar is infinite.
pub fn sublevel_barcode_1d(samples: &[f64]) -> Result<Barcode> {
    if samples.is_empty() {
        return Err(Error::InvalidParameter("empty input".into()));
    }
    let n = samples.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| samples[a].total_cmp(&samples[b]).then(a.cmp(&b)));
    // the root of a component is the vertex where it was born
    let mut parent: Vec<usize> = (0..n).collect();
    let mut added = vec![false; n];
    let mut bars = Vec::new();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let older = |a: usize, b: usize| samples[a].total_cmp(&samples[b]).then(a.cmp(&b)).is_lt();
    for &i in &order {
        added[i] = true;
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= n || !added[j] {
                continue;
            }
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                continue;
            }
            let (keep, die) = if older(ri, rj) { (ri, rj) } else { (rj, ri) };
            bars.push((samples[die], samples[i]));
            parent[die] = keep;
        }
    }
    let root = find(&mut parent, order[0]);
    bars.push((samples[root], f64::INFINITY));
    Ok(Barcode::new(bars))
}

/// Independent child seed for stream `i` of `seed`.
pub(crate) fn sub_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
