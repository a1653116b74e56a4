use nalgebra::{DMatrix, DVector};

use super::complex::{BifilteredComplex, Simplex};
use crate::error::{Error, Result};
use crate::geometry::{euclid, SampledSpace};

/// Radius of the minimum enclosing (closed) ball of a small point set.
///
/// Tries the circumscribed ball of every affinely independent subset of at
/// most `d + 1` points and keeps the smallest one that contains all points.
pub fn min_enclosing_radius(points: &[&[f64]]) -> f64 {
    let n = points.len();
    match n {
        0 | 1 => return 0.0,
        2 => return euclid(points[0], points[1]) / 2.0,
        _ => {}
    }
    let dim = points[0].len();
    let max_support = n.min(dim + 1);
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > max_support {
            continue;
        }
        let support: Vec<&[f64]> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| points[i]).collect();
        let Some((center, r)) = circumball(&support) else {
            continue;
        };
        if r >= best {
            continue;
        }
        let tol = 1e-12 * r.max(1.0);
        if points.iter().all(|p| euclid(p, &center) <= r + tol) {
            best = r;
        }
    }
    best
}

fn circumball(pts: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    if pts.len() == 2 {
        let c: Vec<f64> = pts[0].iter().zip(pts[1]).map(|(a, b)| (a + b) / 2.0).collect();
        return Some((c, euclid(pts[0], pts[1]) / 2.0));
    }
    let p0 = pts[0];
    let k = pts.len() - 1;
    let diffs: Vec<Vec<f64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let gram = DMatrix::from_fn(k, k, |i, j| 2.0 * dot(&diffs[i], &diffs[j]));
    let rhs = DVector::from_fn(k, |i, _| dot(&diffs[i], &diffs[i]));
    let lu = gram.lu();
    if lu.determinant().abs() < 1e-14 {
        return None;
    }
    let lambda = lu.solve(&rhs)?;
    let mut center = p0.to_vec();
    for (i, d) in diffs.iter().enumerate() {
        for (c, x) in center.iter_mut().zip(d) {
            *c += lambda[i] * x;
        }
    }
    let r = euclid(&center, p0);
    Some((center, r))
}

/// The function-Cech multifiltration for Euclidean point clouds: a simplex
/// enters at `(r_min, max f_1, ..., max f_n)`, `r_min` its enclosing radius.
pub fn build_function_cech_euclidean(space: &SampledSpace, max_dim: usize) -> Result<BifilteredComplex> {
    build_function_cech_truncated(space, max_dim, f64::INFINITY)
}

/// As [`build_function_cech_euclidean`], keeping radii `<= max_scale`.
pub fn build_function_cech_truncated(
    space: &SampledSpace,
    max_dim: usize,
    max_scale: f64,
) -> Result<BifilteredComplex> {
    let coords = space.coords().ok_or(Error::MissingCoordinates)?;
    let k = space.len();
    let n = space.n_values();
    let nbrs: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            (i + 1..k)
                .filter(|&j| euclid(&coords[i], &coords[j]) <= 2.0 * max_scale)
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut verts = Vec::new();
    for v in 0..k {
        verts.clear();
        verts.push(v as u32);
        expand(space, coords, &nbrs, max_dim, max_scale, &mut verts, &nbrs[v], &mut out);
    }
    Ok(BifilteredComplex::from_simplices(out, max_dim, n + 1))
}

#[allow(clippy::too_many_arguments)]
fn expand(
    space: &SampledSpace,
    coords: &[Vec<f64>],
    nbrs: &[Vec<u32>],
    max_dim: usize,
    max_scale: f64,
    verts: &mut Vec<u32>,
    candidates: &[u32],
    out: &mut Vec<Simplex>,
) {
    let pts: Vec<&[f64]> = verts.iter().map(|&v| coords[v as usize].as_slice()).collect();
    let r = min_enclosing_radius(&pts);
    if r > max_scale {
        return;
    }
    let n = space.n_values();
    let levels = (0..n).map(|c| {
        verts
            .iter()
            .map(|&v| space.value(v as usize)[c])
            .fold(f64::NEG_INFINITY, f64::max)
    });
    out.push(Simplex {
        vertices: verts.clone(),
        grade: super::grade_of(r, levels),
    });
    if verts.len() > max_dim {
        return;
    }
    for (ci, &w) in candidates.iter().enumerate() {
        let adj = &nbrs[w as usize];
        let next: Vec<u32> = candidates[ci + 1..]
            .iter()
            .copied()
            .filter(|x| adj.binary_search(x).is_ok())
            .collect();
        verts.push(w);
        expand(space, coords, nbrs, max_dim, max_scale, verts, &next, out);
        verts.pop();
    }
}
