use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grade::{format_f64, Grade};
use crate::modalg::GradedMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Simplex {
    /// Sorted vertex ids.
    pub vertices: Vec<u32>,
    pub grade: Grade,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A simplicial complex with one grade per simplex, in canonical order:
/// dimension, then grade (lexicographic), then vertex tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct BifilteredComplex {
    simplices: Vec<Simplex>,
    /// `offsets[d]..offsets[d + 1]` holds the d-simplices.
    offsets: Vec<usize>,
    max_dim: usize,
    params: usize,
}

impl BifilteredComplex {
    /// Canonicalize a face-closed list of graded simplices.
    pub fn from_simplices(simplices: Vec<Simplex>, max_dim: usize, params: usize) -> Self {
        let c = Self::canonical(simplices, max_dim, params);
        debug_assert!(c.check_monotone().is_ok(), "{:?}", c.check_monotone());
        c
    }

    fn canonical(mut simplices: Vec<Simplex>, max_dim: usize, params: usize) -> Self {
        simplices.sort_by(|a, b| {
            a.vertices
                .len()
                .cmp(&b.vertices.len())
                .then_with(|| a.grade.lex_cmp(&b.grade))
                .then_with(|| a.vertices.cmp(&b.vertices))
        });
        let mut offsets = vec![0; max_dim + 2];
        for s in &simplices {
            offsets[s.dim() + 1] += 1;
        }
        for d in 1..offsets.len() {
            offsets[d] += offsets[d - 1];
        }
        BifilteredComplex {
            simplices,
            offsets,
            max_dim,
            params,
        }
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn of_dim(&self, d: usize) -> &[Simplex] {
        if d > self.max_dim {
            return &[];
        }
        &self.simplices[self.offsets[d]..self.offsets[d + 1]]
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Number of filtration parameters `m`.
    pub fn params(&self) -> usize {
        self.params
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.of_dim(0).len()
    }

    pub(crate) fn map_grades(&self, f: impl Fn(&Grade) -> Grade) -> Self {
        let simplices = self
            .simplices
            .iter()
            .map(|s| Simplex {
                vertices: s.vertices.clone(),
                grade: f(&s.grade),
            })
            .collect();
        BifilteredComplex::from_simplices(simplices, self.max_dim, self.params)
    }

    /// Round every grade coordinate to a multiple of `step`.
    pub fn snapped(&self, step: f64) -> Self {
        self.map_grades(|g| g.snapped(step))
    }

    /// Face-index lookup for dimension `d`.
    pub(crate) fn index_of_dim(&self, d: usize) -> HashMap<&[u32], usize> {
        self.of_dim(d)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.vertices.as_slice(), i))
            .collect()
    }

    /// Closure under faces and monotone grading.
    pub fn check_monotone(&self) -> Result<()> {
        for d in 1..=self.max_dim {
            let index = self.index_of_dim(d - 1);
            for s in self.of_dim(d) {
                for skip in 0..s.vertices.len() {
                    let face = drop_vertex(&s.vertices, skip);
                    let Some(&fi) = index.get(face.as_slice()) else {
                        return Err(Error::InvalidParameter(format!(
                            "face {face:?} of {:?} missing",
                            s.vertices
                        )));
                    };
                    if !self.of_dim(d - 1)[fi].grade.le(&s.grade) {
                        return Err(Error::InvalidParameter(format!(
                            "grade of face {face:?} exceeds grade of {:?}",
                            s.vertices
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Text dump, one simplex per line: `dim;v0 v1 ...;g1 ... gm`.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for s in &self.simplices {
            let vs: Vec<String> = s.vertices.iter().map(u32::to_string).collect();
            let gs: Vec<String> = s.grade.0.iter().map(|v| format_f64(*v)).collect();
            let _ = writeln!(out, "{};{};{}", s.dim(), vs.join(" "), gs.join(" "));
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut simplices = Vec::new();
        let mut max_dim = 0;
        let mut params = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: ln + 1,
                msg: msg.to_string(),
            };
            let parts: Vec<&str> = line.split(';').collect();
            if parts.len() != 3 {
                return Err(err("expected `dim;vertices;grade`"));
            }
            let dim: usize = parts[0].trim().parse().map_err(|_| err("bad dimension"))?;
            let vertices: Vec<u32> = parts[1]
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad vertex id"))?;
            let grade: Vec<f64> = parts[2]
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad grade"))?;
            if vertices.len() != dim + 1 || vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(err("vertex list must be sorted with dim+1 entries"));
            }
            match params {
                None => params = Some(grade.len()),
                Some(m) if m != grade.len() => return Err(err("inconsistent grade dimension")),
                _ => {}
            }
            max_dim = max_dim.max(dim);
            simplices.push(Simplex {
                vertices,
                grade: Grade::new(grade),
            });
        }
        let c = BifilteredComplex::canonical(simplices, max_dim, params.unwrap_or(1));
        c.check_monotone()?;
        Ok(c)
    }
}

pub(crate) fn drop_vertex(v: &[u32], skip: usize) -> Vec<u32> {
    v.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, x)| *x)
        .collect()
}

/// Graded boundary matrices `(d_r, d_{r+1})` over `field`, with the
/// alternating-face rule on sorted vertex tuples.
pub fn boundary_matrices(
    c: &BifilteredComplex,
    degree: usize,
    field: Field,
) -> Result<(GradedMatrix, GradedMatrix)> {
    if degree + 1 > c.max_dim() {
        return Err(Error::InsufficientSkeleton {
            degree,
            needed: degree + 1,
            have: c.max_dim(),
        });
    }
    Ok((boundary(c, degree, field), boundary(c, degree + 1, field)))
}

/// The graded matrix of `d_d: C_d -> C_{d-1}`.
pub(crate) fn boundary(c: &BifilteredComplex, d: usize, field: Field) -> GradedMatrix {
    let cols_s = c.of_dim(d);
    let col_grades: Vec<Grade> = cols_s.iter().map(|s| s.grade.clone()).collect();
    if d == 0 {
        return GradedMatrix::new(field, c.params(), Vec::new(), col_grades, vec![Vec::new(); cols_s.len()]);
    }
    let rows_s = c.of_dim(d - 1);
    let index = c.index_of_dim(d - 1);
    let cols = cols_s
        .iter()
        .map(|s| {
            let mut col: Vec<(u32, u32)> = (0..s.vertices.len())
                .map(|skip| {
                    let face = drop_vertex(&s.vertices, skip);
                    let row = index[face.as_slice()] as u32;
                    let sign = if skip % 2 == 0 { 1 } else { -1 };
                    (row, field.from_i64(sign))
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    let row_grades = rows_s.iter().map(|s| s.grade.clone()).collect();
    GradedMatrix::new(field, c.params(), row_grades, col_grades, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::build_function_rips;
    use crate::geometry::SampledSpace;
    use crate::modalg::dense_rank;

    fn dense(m: &GradedMatrix) -> Vec<Vec<u32>> {
        (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.entry(i, j)).collect()).collect()
    }

    fn cloud() -> BifilteredComplex {
        let s = SampledSpace::euclidean(
            vec![vec![0.0, 0.0], vec![1.0, 0.2], vec![0.4, 1.1], vec![1.3, 1.0], vec![0.6, 0.5]],
            vec![vec![0.3], vec![0.1], vec![0.8], vec![0.4], vec![0.6]],
        )
        .unwrap();
        build_function_rips(&s, 3)
    }

    #[test]
    fn single_edge_boundary() {
        let s = SampledSpace::euclidean(vec![vec![0.0], vec![1.0]], vec![vec![0.0], vec![0.0]]).unwrap();
        let field = Field::new(5).unwrap();
        let d1 = boundary(&build_function_rips(&s, 1), 1, field);
        assert_eq!(d1.col(0), &[(0, field.from_i64(-1)), (1, 1)]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = cloud();
        for p in [2, 3, 7] {
            let field = Field::new(p).unwrap();
            for r in 1..3 {
                let (a, b) = boundary_matrices(&c, r, field).unwrap();
                assert!(a.mul(&b).cols().iter().all(|col| col.is_empty()), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn four_cycle_rank() {
        let s = SampledSpace::euclidean(
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]],
            vec![vec![0.0]; 4],
        )
        .unwrap();
        let c = BifilteredComplex::from_simplices(
            build_function_rips(&s, 1)
                .simplices()
                .iter()
                .filter(|x| x.grade.0[0] <= 1.0)
                .cloned()
                .collect(),
            1,
            2,
        );
        let field = Field::new(3).unwrap();
        let d1 = boundary(&c, 1, field);
        assert_eq!(d1.ncols(), 4);
        assert_eq!(dense_rank(field, &dense(&d1), 4), 3);
    }

    #[test]
    fn skeleton_too_small() {
        assert!(matches!(
            boundary_matrices(&cloud(), 3, Field::default()),
            Err(Error::InsufficientSkeleton { .. })
        ));
    }

    #[test]
    fn dump_round_trip() {
        let c = cloud();
        let back = BifilteredComplex::from_dump(&c.to_dump()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn dump_rejects_non_monotone() {
        let text = "0;0;0 1\n0;1;0 0\n1;0 1;1 0.5\n";
        assert!(BifilteredComplex::from_dump(text).is_err());
        assert!(BifilteredComplex::from_dump("0;0;x\n").is_err());
    }
}
