//! Dense brute-force homology over F_p, independent of the graded machinery.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::BifilteredComplex;
use crate::grade::Grade;

type Dense = Vec<Vec<u32>>;

fn rref(field: Field, a: &mut Dense, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        let inv = field.inv(a[row][col]);
        for v in a[row].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for i in 0..a.len() {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for c in 0..ncols {
                    let s = field.mul(f, a[row][c]);
                    a[i][c] = field.sub(a[i][c], s);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

/// Rank of a dense row-major matrix.
pub fn dense_rank(field: Field, a: &[Vec<u32>], ncols: usize) -> usize {
    let mut a = a.to_vec();
    rref(field, &mut a, ncols).len()
}

/// Basis of `{v : A v = 0}` for a dense `m x n` matrix.
pub fn dense_nullspace(field: Field, a: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut a = a.to_vec();
    let pivots = rref(field, &mut a, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (c, r) in is_pivot.iter().enumerate() {
                if let Some(r) = r {
                    v[c] = field.neg(a[*r][free]);
                }
            }
            v
        })
        .collect()
}

fn present_at<'a>(c: &'a BifilteredComplex, d: usize, z: &Grade) -> Vec<&'a [u32]> {
    c.of_dim(d)
        .iter()
        .filter(|s| s.grade.le(z))
        .map(|s| s.vertices.as_slice())
        .collect()
}

/// Dense boundary matrix of `cells` (dimension d) against `faces`, as rows
/// indexed by faces.
fn dense_boundary(field: Field, cells: &[&[u32]], faces: &[&[u32]]) -> Dense {
    let index: HashMap<&[u32], usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut a = vec![vec![0; cells.len()]; faces.len()];
    for (j, s) in cells.iter().enumerate() {
        for skip in 0..s.len() {
            let face: Vec<u32> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, v)| *v).collect();
            let i = index[face.as_slice()];
            a[i][j] = if skip % 2 == 0 { 1 } else { field.neg(1 % field.characteristic()) };
        }
    }
    a
}

fn check_skeleton(c: &BifilteredComplex, degree: usize) -> Result<()> {
    if degree + 1 > c.max_dim() {
        return Err(Error::InsufficientSkeleton {
            degree,
            needed: degree + 1,
            have: c.max_dim(),
        });
    }
    Ok(())
}

/// Cycle basis of the degree-`r` chains present at `z`, written in the
/// coordinates of `basis` (a superset of those chains).
fn cycles(field: Field, c: &BifilteredComplex, r: usize, z: &Grade, basis: &[&[u32]]) -> Dense {
    let cells = present_at(c, r, z);
    let local = if r == 0 {
        (0..cells.len())
            .map(|i| {
                let mut v = vec![0; cells.len()];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        let faces = present_at(c, r - 1, z);
        let d = dense_boundary(field, &cells, &faces);
        dense_nullspace(field, &d, cells.len())
    };
    let index: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    local
        .into_iter()
        .map(|v| {
            let mut w = vec![0; basis.len()];
            for (i, x) in v.into_iter().enumerate() {
                w[index[cells[i]]] = x;
            }
            w
        })
        .collect()
}

/// `(Z_r(K1) + B_r(K2))` rank minus `B_r(K2)` rank, vectors as rows.
fn image_rank(field: Field, c: &BifilteredComplex, r: usize, z1: &Grade, z2: &Grade) -> usize {
    let chains = present_at(c, r, z2);
    let n = chains.len();
    let higher = present_at(c, r + 1, z2);
    let d = dense_boundary(field, &higher, &chains);
    // columns of d as rows
    let mut rows: Dense = (0..higher.len()).map(|j| (0..n).map(|i| d[i][j]).collect()).collect();
    let b = dense_rank(field, &rows, n);
    rows.extend(cycles(field, c, r, z1, &chains));
    dense_rank(field, &rows, n) - b
}

/// Rank of `H_r(R^delta(F_x)) -> H_r(R^{2 delta}(F_x))` at `grade = (delta, x)`,
/// computed from explicit cycle and boundary bases.
pub fn pointwise_image_rank(c: &BifilteredComplex, degree: usize, grade: &Grade, field: Field) -> Result<usize> {
    check_skeleton(c, degree)?;
    let doubled = grade.scale_first(2.0);
    Ok(image_rank(field, c, degree, grade, &doubled))
}

/// `dim H_r` of the complex at `grade`.
pub fn pointwise_homology_dim(c: &BifilteredComplex, degree: usize, grade: &Grade, field: Field) -> Result<usize> {
    check_skeleton(c, degree)?;
    Ok(image_rank(field, c, degree, grade, grade))
}
