//! Shared fixtures for the benchmarks.

use fgest::filtration::{build_function_rips_truncated, BifilteredComplex};
use fgest::geometry::{brownian_path, sample_circle, SampledSpace};
use fgest::harness::sublevel_barcode_1d;
use fgest::invariants::Barcode;

/// `k` uniform points on the unit circle, height as the function.
pub fn circle(k: usize, seed: u64) -> SampledSpace {
    sample_circle(1.0, k, seed).expect("valid circle parameters").space
}

/// Two disjoint circles of radii 1 and 0.6 with `k` points each.
pub fn two_circles(k: usize, seed: u64) -> SampledSpace {
    let a = sample_circle(1.0, k, seed).expect("valid circle parameters").space;
    let b = sample_circle(0.6, k, seed + 1).expect("valid circle parameters").space;
    a.disjoint_union(&b).expect("compatible spaces")
}

/// Function-Rips complex of a circle sample, truncated at `max_scale`.
pub fn circle_complex(k: usize, max_dim: usize, max_scale: f64) -> BifilteredComplex {
    build_function_rips_truncated(&circle(k, 0), max_dim, max_scale)
}

/// Sublevel barcode of a random walk with `m` steps.
pub fn walk_barcode(m: usize, seed: u64) -> Barcode {
    sublevel_barcode_1d(&brownian_path(m, seed)).expect("nonempty path")
}

/// The same sample as [`circle`], embedded in the plane with the Euclidean
/// metric.
pub fn planar_circle(k: usize, seed: u64) -> SampledSpace {
    let s = sample_circle(1.0, k, seed).expect("valid circle parameters");
    let coords = s.angles.iter().map(|t| vec![t.cos(), t.sin()]).collect();
    SampledSpace::euclidean(coords, s.space.values().to_vec()).expect("valid cloud")
}
