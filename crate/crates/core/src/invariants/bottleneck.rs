use crate::error::{Error, Result};
use crate::grade::Grade;

use super::Barcode;

const NONE: u32 = u32::MAX;

/// Bipartite matching grown one left vertex at a time by BFS augmenting
/// paths.
struct Matching {
    left: Vec<u32>,
    right: Vec<u32>,
    parent: Vec<u32>,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<u32>,
    nbrs: Vec<usize>,
}

impl Matching {
    fn new(nl: usize, nr: usize) -> Self {
        Matching {
            left: vec![NONE; nl],
            right: vec![NONE; nr],
            parent: vec![NONE; nr],
            seen: vec![0; nr],
            stamp: 0,
            queue: Vec::new(),
            nbrs: Vec::new(),
        }
    }

    fn augment(&mut self, u: usize, neighbors: &impl Fn(usize, &mut Vec<usize>)) -> bool {
        self.stamp += 1;
        self.queue.clear();
        self.queue.push(u as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head] as usize;
            head += 1;
            self.nbrs.clear();
            neighbors(x, &mut self.nbrs);
            for k in 0..self.nbrs.len() {
                let r = self.nbrs[k];
                if self.seen[r] == self.stamp {
                    continue;
                }
                self.seen[r] = self.stamp;
                self.parent[r] = x as u32;
                if self.right[r] == NONE {
                    let mut cur = r;
                    loop {
                        let l = self.parent[cur] as usize;
                        let next = self.left[l];
                        self.left[l] = cur as u32;
                        self.right[cur] = l as u32;
                        if l == u {
                            return true;
                        }
                        cur = next as usize;
                    }
                }
                self.queue.push(self.right[r]);
            }
        }
        false
    }
}

/// Whether every vertex in `must` can be matched simultaneously.
fn covers(must: &[usize], nl: usize, nr: usize, neighbors: impl Fn(usize, &mut Vec<usize>)) -> bool {
    if must.len() > nr {
        return false;
    }
    let mut m = Matching::new(nl, nr);
    must.iter().all(|&u| m.augment(u, &neighbors))
}

fn match_cost(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn delete_cost(a: (f64, f64)) -> f64 {
    (a.1 - a.0) / 2.0
}

/// Is there a partial matching of cost at most `t`?
fn feasible(a: &[(f64, f64)], b: &[(f64, f64)], t: f64) -> bool {
    one_side(a, b, t) && one_side(b, a, t)
}

/// Can all bars of `a` too long to delete at cost `t` be matched into `b`?
/// `b` is sorted by birth.
fn one_side(a: &[(f64, f64)], b: &[(f64, f64)], t: f64) -> bool {
    let must: Vec<usize> = (0..a.len()).filter(|&i| delete_cost(a[i]) > t).collect();
    let slack = 2.0 * t + 1e-12;
    covers(&must, a.len(), b.len(), |i, out| {
        let x = a[i];
        let lo = b.partition_point(|y| y.0 < x.0 - slack - x.0.abs() * 1e-12);
        for (j, &y) in b.iter().enumerate().skip(lo) {
            if y.0 > x.0 + slack + x.0.abs() * 1e-12 {
                break;
            }
            if match_cost(x, y) <= t {
                out.push(j);
            }
        }
    })
}

/// Exact bottleneck distance after capping deaths at `truncation`.
///
/// The optimum is one of the finitely many match and deletion costs; it is
/// found as the smallest float at which a matching test succeeds.
pub fn bottleneck(a: &Barcode, b: &Barcode, truncation: f64) -> f64 {
    let a = a.truncated(truncation);
    let b = b.truncated(truncation);
    let (a, b) = (a.bars(), b.bars());
    if feasible(a, b, 0.0) {
        return 0.0;
    }
    let upper = a.iter().chain(b).map(|&x| delete_cost(x)).fold(0.0, f64::max);
    let (mut lo, mut hi) = (0u64, upper.to_bits());
    // invariant: infeasible at lo, feasible at hi
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if feasible(a, b, f64::from_bits(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    f64::from_bits(hi)
}

/// Bottleneck distance by enumerating every partial matching. Exponential;
/// meant as a reference for small barcodes.
pub fn bottleneck_exhaustive(a: &Barcode, b: &Barcode, truncation: f64) -> f64 {
    fn go(a: &[(f64, f64)], b: &[(f64, f64)], i: usize, used: &mut Vec<bool>, acc: f64, best: &mut f64) {
        if acc >= *best {
            return;
        }
        if i == a.len() {
            let rest = b
                .iter()
                .zip(used.iter())
                .filter(|(_, u)| !**u)
                .map(|(&y, _)| delete_cost(y))
                .fold(acc, f64::max);
            *best = best.min(rest);
            return;
        }
        go(a, b, i + 1, used, acc.max(delete_cost(a[i])), best);
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                go(a, b, i + 1, used, acc.max(match_cost(a[i], b[j])), best);
                used[j] = false;
            }
        }
    }
    let a = a.truncated(truncation);
    let b = b.truncated(truncation);
    let mut best = f64::INFINITY;
    go(a.bars(), b.bars(), 0, &mut vec![false; b.len()], 0.0, &mut best);
    best
}

/// Min over perfect matchings of the largest sup-distance in coordinates
/// `2..m`, where matched grades may differ by at most `first_coord_tol` in
/// the first coordinate. `+inf` if no such matching exists.
pub fn vertical_bottleneck_grades(a: &[Grade], b: &[Grade], first_coord_tol: f64) -> Result<f64> {
    let m = a.first().or(b.first()).map_or(0, Grade::dim);
    if let Some(g) = a.iter().chain(b).find(|g| g.dim() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: g.dim(),
        });
    }
    if a.len() != b.len() {
        return Ok(f64::INFINITY);
    }
    if a.is_empty() {
        return Ok(0.0);
    }
    let cost = |x: &Grade, y: &Grade| -> f64 {
        if (x.0[0] - y.0[0]).abs() > first_coord_tol {
            return f64::INFINITY;
        }
        x.0[1..]
            .iter()
            .zip(&y.0[1..])
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    };
    let n = a.len();
    let costs: Vec<f64> = (0..n * n).map(|k| cost(&a[k / n], &b[k % n])).collect();
    let mut cands: Vec<f64> = costs.iter().copied().filter(|c| c.is_finite()).collect();
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    let all: Vec<usize> = (0..n).collect();
    let ok = |t: f64| {
        covers(&all, n, n, |i, out| {
            out.extend((0..n).filter(|&j| costs[i * n + j] <= t));
        })
    };
    if cands.is_empty() || !ok(*cands.last().unwrap()) {
        return Ok(f64::INFINITY);
    }
    let (mut lo, mut hi) = (0, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if ok(cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(cands[lo])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bc(v: &[(f64, f64)]) -> Barcode {
        Barcode::new(v.iter().copied())
    }

    #[test]
    fn examples() {
        let a = bc(&[(0.0, 4.0), (1.0, 2.0)]);
        assert_eq!(bottleneck(&a, &a, 10.0), 0.0);
        assert_eq!(bottleneck(&bc(&[(0.0, 2.0)]), &Barcode::default(), 10.0), 1.0);
        assert_eq!(bottleneck(&a, &bc(&[(0.5, 4.0)]), 10.0), 0.5);
        assert_eq!(bottleneck_exhaustive(&a, &bc(&[(0.5, 4.0)]), 10.0), 0.5);
    }

    #[test]
    fn infinite_bars_are_truncated() {
        let a = bc(&[(0.0, f64::INFINITY)]);
        let b = bc(&[(1.0, f64::INFINITY)]);
        assert_eq!(bottleneck(&a, &b, 10.0), 1.0);
        assert_eq!(bottleneck(&a, &Barcode::default(), 10.0), 5.0);
    }

    #[test]
    fn vertical_examples() {
        let g = |v: [f64; 2]| Grade::from(v);
        assert_eq!(vertical_bottleneck_grades(&[g([1.0, 0.0])], &[g([1.0, 0.5])], 0.0).unwrap(), 0.5);
        assert_eq!(vertical_bottleneck_grades(&[g([1.0, 0.0])], &[g([2.0, 0.0])], 0.0).unwrap(), f64::INFINITY);
        assert_eq!(
            vertical_bottleneck_grades(&[g([1.0, 0.0]), g([0.0, 0.0])], &[g([1.0, 0.0])], 0.0).unwrap(),
            f64::INFINITY
        );
        assert!(vertical_bottleneck_grades(&[g([1.0, 0.0])], &[Grade::from([1.0])], 0.0).is_err());
    }

    fn barcode() -> impl Strategy<Value = Barcode> {
        prop::collection::vec((0u8..12, 1u8..8, prop::bool::weighted(0.15)), 0..=6).prop_map(|v| {
            Barcode::new(v.into_iter().map(|(b, l, inf)| {
                let b = b as f64 * 0.5;
                (b, if inf { f64::INFINITY } else { b + l as f64 * 0.5 })
            }))
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(a in barcode(), b in barcode()) {
            prop_assert_eq!(bottleneck(&a, &b, 10.0), bottleneck_exhaustive(&a, &b, 10.0));
        }

        #[test]
        fn pseudometric(a in barcode(), b in barcode(), c in barcode()) {
            let ab = bottleneck(&a, &b, 10.0);
            prop_assert_eq!(ab, bottleneck(&b, &a, 10.0));
            prop_assert_eq!(bottleneck(&a, &a, 10.0), 0.0);
            prop_assert!(bottleneck(&a, &c, 10.0) <= ab + bottleneck(&b, &c, 10.0));
        }
    }
}
