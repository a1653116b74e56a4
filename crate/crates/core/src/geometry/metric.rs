use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SampledSpace;
use crate::error::{Error, Result};

/// Hausdorff distance between two point subsets of `space`.
pub fn hausdorff(space: &SampledSpace, a: &[usize], b: &[usize]) -> Result<f64> {
    for &i in a.iter().chain(b) {
        if i >= space.len() {
            return Err(Error::PointOutOfRange(i));
        }
    }
    hausdorff_by(a.len(), b.len(), |i, j| space.dist(a[i], b[j]))
}

/// Hausdorff distance between index sets `0..na` and `0..nb` under `dist`.
pub fn hausdorff_by(na: usize, nb: usize, dist: impl Fn(usize, usize) -> f64) -> Result<f64> {
    if na == 0 || nb == 0 {
        return Err(Error::EmptyHausdorff);
    }
    let mut best_b = vec![f64::INFINITY; nb];
    let mut forward = 0.0f64;
    for i in 0..na {
        let mut best = f64::INFINITY;
        for (j, bj) in best_b.iter_mut().enumerate() {
            let d = dist(i, j);
            best = best.min(d);
            *bj = bj.min(d);
        }
        forward = forward.max(best);
    }
    let backward = best_b.into_iter().fold(0.0f64, f64::max);
    Ok(forward.max(backward))
}

/// Hausdorff distance between two finite subsets of the real line.
pub fn hausdorff_1d(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyHausdorff);
    }
    let sort = |v: &[f64]| {
        let mut s = v.to_vec();
        s.sort_by(f64::total_cmp);
        s
    };
    let (sa, sb) = (sort(a), sort(b));
    Ok(one_sided_1d(&sa, &sb).max(one_sided_1d(&sb, &sa)))
}

fn one_sided_1d(from: &[f64], to: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    let mut j = 0;
    for &x in from {
        while j + 1 < to.len() && to[j + 1] <= x {
            j += 1;
        }
        let mut d = (x - to[j]).abs();
        if j + 1 < to.len() {
            d = d.min((to[j + 1] - x).abs());
        }
        worst = worst.max(d);
    }
    worst
}

/// Shortest-path distances in the `kappa`-neighborhood graph.
///
/// With `weighted == false` the result is the hop count, which is the
/// quantity satisfying `d/kappa <= d~ <= 1 + lambda d/kappa`. The weighted
/// variant sums edge lengths instead. Pairs in different graph components
/// get `+inf`.
pub fn graph_geodesic(space: &SampledSpace, kappa: f64, weighted: bool) -> Result<Vec<f64>> {
    if !(kappa > 0.0) {
        return Err(Error::InvalidParameter(format!("kappa must be > 0 (got {kappa})")));
    }
    let k = space.len();
    let adj: Vec<Vec<(usize, f64)>> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i)
                .filter_map(|j| {
                    let d = space.dist(i, j);
                    (d <= kappa).then_some((j, d))
                })
                .collect()
        })
        .collect();
    let mut out = vec![f64::INFINITY; k * k];
    for src in 0..k {
        let row = &mut out[src * k..(src + 1) * k];
        row[src] = 0.0;
        if weighted {
            dijkstra(&adj, src, row);
        } else {
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &(v, _) in &adj[u] {
                    if row[v].is_infinite() {
                        row[v] = du + 1.0;
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    // Dijkstra sums can differ in the last ulp between directions.
    for i in 0..k {
        for j in 0..i {
            let d = out[i * k + j].min(out[j * k + i]);
            out[i * k + j] = d;
            out[j * k + i] = d;
        }
    }
    Ok(out)
}

fn dijkstra(adj: &[Vec<(usize, f64)>], src: usize, dist: &mut [f64]) {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    #[derive(PartialEq)]
    struct Key(f64);
    impl Eq for Key {}
    impl PartialOrd for Key {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for Key {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            self.0.total_cmp(&o.0)
        }
    }

    let mut heap = BinaryHeap::from([Reverse((Key(0.0), src))]);
    while let Some(Reverse((Key(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((Key(nd), v)));
            }
        }
    }
}

/// Greedy max-min ordering starting from `start`; ties go to the smallest id.
pub fn farthest_point_sample(space: &SampledSpace, k: usize, start: usize) -> Result<Vec<usize>> {
    let n = space.len();
    if k == 0 || k > n {
        return Err(Error::CountOutOfRange { k, n });
    }
    if start >= n {
        return Err(Error::PointOutOfRange(start));
    }
    let mut order = Vec::with_capacity(k);
    let mut chosen = vec![false; n];
    let mut mind = vec![f64::INFINITY; n];
    let mut next = start;
    for _ in 0..k {
        order.push(next);
        chosen[next] = true;
        let mut best: Option<(f64, usize)> = None;
        for i in 0..n {
            if chosen[i] {
                continue;
            }
            mind[i] = mind[i].min(space.dist(next, i));
            if best.map_or(true, |(d, _)| mind[i] > d) {
                best = Some((mind[i], i));
            }
        }
        match best {
            Some((_, i)) => next = i,
            None => break,
        }
    }
    Ok(order)
}

/// Perturbation model for function values and distances.
#[derive(Clone, Debug, PartialEq)]
pub struct NoiseSpec {
    /// Sup-norm bound on the function-value noise.
    pub zeta: f64,
    /// Neighborhood radius for graph distances.
    pub kappa: f64,
    /// Distortion factor `1 + 4 eps / kappa`.
    pub lambda: f64,
    pub seed: u64,
}

impl NoiseSpec {
    /// Noise with `lambda` derived from a sampling error `eps`.
    pub fn new(zeta: f64, kappa: f64, eps: f64, seed: u64) -> Result<Self> {
        let spec = NoiseSpec {
            zeta,
            kappa,
            lambda: 1.0 + 4.0 * eps / kappa,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Function noise only.
    pub fn values_only(zeta: f64, seed: u64) -> Result<Self> {
        let spec = NoiseSpec {
            zeta,
            kappa: 1.0,
            lambda: 1.0,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if !(self.zeta >= 0.0) {
            return Err(Error::InvalidParameter("zeta must be >= 0".into()));
        }
        if !(self.kappa > 0.0) {
            return Err(Error::InvalidParameter("kappa must be > 0".into()));
        }
        if !(self.lambda >= 1.0) {
            return Err(Error::InvalidParameter("lambda must be >= 1".into()));
        }
        Ok(())
    }
}

/// Adds independent uniform `[-zeta, zeta]` noise to every value entry and,
/// if `regraph`, replaces the metric by hop-count graph distances.
pub fn perturb(space: &SampledSpace, noise: &NoiseSpec, regraph: bool) -> Result<SampledSpace> {
    noise.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
    let values = space
        .values()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    if noise.zeta == 0.0 {
                        *v
                    } else {
                        v + rng.gen_range(-noise.zeta..=noise.zeta)
                    }
                })
                .collect()
        })
        .collect();
    let out = space.with_values(values)?;
    if regraph {
        let d = graph_geodesic(space, noise.kappa, false)?;
        out.with_matrix(d)
    } else {
        Ok(out)
    }
}
