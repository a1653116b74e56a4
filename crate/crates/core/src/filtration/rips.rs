use super::complex::{BifilteredComplex, Simplex};
use crate::geometry::SampledSpace;

/// The function-Rips multifiltration: a simplex enters at
/// `(diam, max f_1, ..., max f_n)`. Simplices with an infinite pairwise
/// distance are never created.
pub fn build_function_rips(space: &SampledSpace, max_dim: usize) -> BifilteredComplex {
    build_function_rips_truncated(space, max_dim, f64::INFINITY)
}

/// As [`build_function_rips`], keeping only simplices with diameter
/// `<= max_scale`. Exact for every query whose scale is `<= max_scale`.
pub fn build_function_rips_truncated(
    space: &SampledSpace,
    max_dim: usize,
    max_scale: f64,
) -> BifilteredComplex {
    let k = space.len();
    let n = space.n_values();
    // forward neighbors j > i with finite distance under the threshold
    let nbrs: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            (i + 1..k)
                .filter(|&j| {
                    let d = space.dist(i, j);
                    d.is_finite() && d <= max_scale
                })
                .map(|j| j as u32)
                .collect()
        })
        .collect();

    let mut simplices = Vec::new();
    let mut stack_vertices = Vec::with_capacity(max_dim + 1);
    for v in 0..k {
        stack_vertices.clear();
        stack_vertices.push(v as u32);
        let levels = space.value(v).to_vec();
        expand(
            space,
            &nbrs,
            max_dim,
            &mut stack_vertices,
            0.0,
            &levels,
            &nbrs[v],
            &mut simplices,
        );
    }
    BifilteredComplex::from_simplices(simplices, max_dim, n + 1)
}

#[allow(clippy::too_many_arguments)]
fn expand(
    space: &SampledSpace,
    nbrs: &[Vec<u32>],
    max_dim: usize,
    vertices: &mut Vec<u32>,
    diam: f64,
    levels: &[f64],
    candidates: &[u32],
    out: &mut Vec<Simplex>,
) {
    out.push(Simplex {
        vertices: vertices.clone(),
        grade: super::grade_of(diam, levels.iter().copied()),
    });
    if vertices.len() > max_dim {
        return;
    }
    for (ci, &w) in candidates.iter().enumerate() {
        let wd = vertices
            .iter()
            .map(|&u| space.dist(u as usize, w as usize))
            .fold(diam, f64::max);
        let wl: Vec<f64> = levels
            .iter()
            .zip(space.value(w as usize))
            .map(|(a, b)| a.max(*b))
            .collect();
        // candidates of the extension: later candidates adjacent to w
        let next: Vec<u32> = if vertices.len() < max_dim {
            let adj = &nbrs[w as usize];
            candidates[ci + 1..]
                .iter()
                .copied()
                .filter(|x| adj.binary_search(x).is_ok())
                .collect()
        } else {
            Vec::new()
        };
        vertices.push(w);
        expand(space, nbrs, max_dim, vertices, wd, &wl, &next, out);
        vertices.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::grade::Grade;
    use crate::invariants::presentation_barcode;
    use crate::modalg::{homology_presentation, pointwise_homology_dim};

    fn space(coords: Vec<Vec<f64>>, f: &[f64]) -> SampledSpace {
        SampledSpace::euclidean(coords, f.iter().map(|&v| vec![v]).collect()).unwrap()
    }

    #[test]
    fn single_vertex() {
        let c = build_function_rips(&space(vec![vec![0.0]], &[0.3]), 1);
        assert_eq!(c.len(), 1);
        assert_eq!(c.simplices()[0].grade, Grade::new(vec![0.0, 0.3]));
    }

    #[test]
    fn edge_takes_diameter_and_max() {
        let c = build_function_rips(&space(vec![vec![0.0], vec![1.0]], &[0.3, 0.7]), 1);
        assert_eq!(c.of_dim(1).len(), 1);
        assert_eq!(c.of_dim(1)[0].grade, Grade::new(vec![1.0, 0.7]));
    }

    #[test]
    fn square_loop_lives_between_side_and_diagonal() {
        let s = space(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            &[0.0; 4],
        );
        let c = build_function_rips(&s, 2);
        let field = Field::default();
        let h = homology_presentation(&c, 1, field).unwrap();
        let m = &h.matrix;
        let rows: Vec<f64> = m.row_grades().iter().map(|g| g.0[0]).collect();
        let cols: Vec<f64> = m.col_grades().iter().map(|g| g.0[0]).collect();
        let bars = presentation_barcode(field, &rows, &cols, m.cols());
        assert_eq!(bars.bars(), &[(1.0, 2f64.sqrt())]);
        for (d, want) in [(0.5, 0), (1.0, 1), (1.3, 1), (1.5, 0)] {
            let g = Grade::new(vec![d, 0.0]);
            assert_eq!(pointwise_homology_dim(&c, 1, &g, field).unwrap(), want);
        }
    }

    #[test]
    fn scale_grade_is_max_pairwise_distance() {
        let pts = vec![vec![0.0, 0.0], vec![0.3, 0.9], vec![1.1, 0.2], vec![0.5, 0.4]];
        let s = space(pts, &[0.0, 1.0, 2.0, 3.0]);
        let c = build_function_rips(&s, 3);
        assert_eq!(c.len(), 15);
        for sx in c.simplices() {
            let mut diam: f64 = 0.0;
            for &a in &sx.vertices {
                for &b in &sx.vertices {
                    diam = diam.max(s.dist(a as usize, b as usize));
                }
            }
            assert_eq!(sx.grade.0[0], diam);
        }
        assert!(c.check_monotone().is_ok());
    }

    #[test]
    fn infinite_distances_create_nothing() {
        let s = SampledSpace::from_matrix(vec![0.0, f64::INFINITY, f64::INFINITY, 0.0], vec![vec![0.0], vec![0.0]], None);
        let c = build_function_rips(&s.unwrap(), 1);
        assert_eq!(c.of_dim(1).len(), 0);
    }

    #[test]
    fn truncation_keeps_small_simplices() {
        let s = space(vec![vec![0.0], vec![1.0], vec![3.0]], &[0.0; 3]);
        let full = build_function_rips(&s, 2);
        let cut = build_function_rips_truncated(&s, 2, 2.0);
        let small: Vec<_> = full.simplices().iter().filter(|x| x.grade.0[0] <= 2.0).cloned().collect();
        assert_eq!(cut.simplices(), small.as_slice());
    }
}
