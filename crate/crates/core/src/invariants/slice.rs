use crate::error::{Error, Result};
use crate::field::{axpy, Column, Field};
use crate::filtration::BifilteredComplex;
use crate::grade::Grade;
use crate::modalg::{column_rank, hilbert_function, homology_presentation, Presentation};

use super::{Barcode, Line};

const NONE: u32 = u32::MAX;

/// Barcode of a 1-parameter presentation given by row values, column values
/// and sparse columns.
pub fn presentation_barcode(field: Field, rows: &[f64], cols: &[f64], entries: &[Column]) -> Barcode {
    let mut row_order: Vec<usize> = (0..rows.len()).collect();
    row_order.sort_by(|&a, &b| rows[a].total_cmp(&rows[b]).then(a.cmp(&b)));
    let mut rank = vec![0u32; rows.len()];
    for (k, &i) in row_order.iter().enumerate() {
        rank[i] = k as u32;
    }
    let mut col_order: Vec<usize> = (0..cols.len()).collect();
    col_order.sort_by(|&a, &b| cols[a].total_cmp(&cols[b]).then(a.cmp(&b)));

    let p = field.characteristic();
    let graphic = entries
        .iter()
        .all(|c| c.is_empty() || (c.len() == 2 && (c[0].1 as u64 + c[1].1 as u64) % p as u64 == 0));
    let mut bars = Vec::with_capacity(rows.len());
    let mut killed = vec![false; rows.len()];
    if graphic {
        // union-find on ranks; the root of a component is its oldest row
        let mut parent: Vec<u32> = (0..rows.len() as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        for &j in &col_order {
            let c = &entries[j];
            if c.is_empty() {
                continue;
            }
            let a = find(&mut parent, rank[c[0].0 as usize]);
            let b = find(&mut parent, rank[c[1].0 as usize]);
            if a == b {
                continue;
            }
            let (old, young) = if a < b { (a, b) } else { (b, a) };
            parent[young as usize] = old;
            let row = row_order[young as usize];
            killed[row] = true;
            bars.push((rows[row], cols[j]));
        }
    } else {
        let mut owner = vec![NONE; rows.len()];
        let mut reduced: Vec<Column> = vec![Vec::new(); cols.len()];
        for &j in &col_order {
            let mut c: Column = entries[j].iter().map(|&(r, v)| (rank[r as usize], v)).collect();
            c.sort_unstable();
            while let Some(&(piv, val)) = c.last() {
                let o = owner[piv as usize];
                if o == NONE {
                    owner[piv as usize] = j as u32;
                    let row = row_order[piv as usize];
                    killed[row] = true;
                    bars.push((rows[row], cols[j]));
                    break;
                }
                let src = &reduced[o as usize];
                let alpha = field.elim_factor(val, src.last().unwrap().1);
                axpy(field, &mut c, alpha, src);
            }
            reduced[j] = c;
        }
    }
    for (i, &k) in killed.iter().enumerate() {
        if !k {
            bars.push((rows[i], f64::INFINITY));
        }
    }
    Barcode::new(bars)
}

/// Restriction of a 2-parameter module to the vertical line `{delta} x R`.
pub fn slice_vertical(p: &Presentation, delta: f64) -> Result<Barcode> {
    if p.params() != 2 {
        return Err(Error::NotBifiltered(p.params()));
    }
    let m = &p.matrix;
    let rows: Vec<usize> = (0..m.nrows()).filter(|&i| m.row_grades()[i].0[0] <= delta).collect();
    let cols: Vec<usize> = (0..m.ncols()).filter(|&j| m.col_grades()[j].0[0] <= delta).collect();
    let sub = m.submatrix(&rows, &cols);
    let rv: Vec<f64> = sub.row_grades().iter().map(|g| g.0[1]).collect();
    let cv: Vec<f64> = sub.col_grades().iter().map(|g| g.0[1]).collect();
    Ok(presentation_barcode(m.field(), &rv, &cv, sub.cols()))
}

/// Restriction of a presented module to a positive-slope line.
pub fn slice_line(p: &Presentation, line: &Line) -> Result<Barcode> {
    let m = &p.matrix;
    check_dim(line, m.params())?;
    let rv: Vec<f64> = m.row_grades().iter().map(|g| line.push(g)).collect();
    let cv: Vec<f64> = m.col_grades().iter().map(|g| line.push(g)).collect();
    Ok(presentation_barcode(m.field(), &rv, &cv, m.cols()))
}

fn check_dim(line: &Line, m: usize) -> Result<()> {
    if line.base().dim() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: line.base().dim(),
        });
    }
    Ok(())
}

/// Degree-`r` persistence of the complex filtered along a line.
pub fn slice_line_complex(c: &BifilteredComplex, degree: usize, line: &Line, field: Field) -> Result<Barcode> {
    check_dim(line, c.params())?;
    if degree + 1 > c.max_dim() {
        return Err(Error::InsufficientSkeleton {
            degree,
            needed: degree + 1,
            have: c.max_dim(),
        });
    }
    let t = |d: usize| -> Vec<f64> { c.of_dim(d).iter().map(|s| line.push(&s.grade)).collect() };
    Ok(complex_barcode(c, degree, &t(degree), &t(degree + 1), field))
}

/// Standard persistence in one degree from per-simplex filtration values.
fn complex_barcode(c: &BifilteredComplex, degree: usize, tr: &[f64], tr1: &[f64], field: Field) -> Barcode {
    let n = tr.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| tr[a].total_cmp(&tr[b]).then(a.cmp(&b)));
    let mut rank = vec![0u32; n];
    for (k, &i) in order.iter().enumerate() {
        rank[i] = k as u32;
    }
    let d1 = crate::filtration::boundary_of(c, degree + 1, field);
    let mut cols1: Vec<usize> = (0..tr1.len()).collect();
    cols1.sort_by(|&a, &b| tr1[a].total_cmp(&tr1[b]).then(a.cmp(&b)));
    let mut owner = vec![NONE; n];
    let mut reduced: Vec<Column> = vec![Vec::new(); tr1.len()];
    let mut bars = Vec::new();
    let mut paired = vec![false; n];
    for &j in &cols1 {
        let mut col: Column = d1.col(j).iter().map(|&(r, v)| (rank[r as usize], v)).collect();
        col.sort_unstable();
        while let Some(&(piv, val)) = col.last() {
            let o = owner[piv as usize];
            if o == NONE {
                owner[piv as usize] = j as u32;
                let s = order[piv as usize];
                paired[s] = true;
                bars.push((tr[s], tr1[j]));
                break;
            }
            let src = &reduced[o as usize];
            let alpha = field.elim_factor(val, src.last().unwrap().1);
            axpy(field, &mut col, alpha, src);
        }
        reduced[j] = col;
    }
    // essential classes: unpaired simplices whose boundary reduces to zero
    let positive: Vec<bool> = if degree == 0 {
        vec![true; n]
    } else {
        let d0 = crate::filtration::boundary_of(c, degree, field);
        let nl = d0.nrows();
        let mut low_owner = vec![NONE; nl];
        let mut red: Vec<Column> = vec![Vec::new(); n];
        let mut pos = vec![false; n];
        for &j in &order {
            if paired[j] {
                pos[j] = true;
                continue;
            }
            let mut col = d0.col(j).to_vec();
            while let Some(&(piv, val)) = col.last() {
                let o = low_owner[piv as usize];
                if o == NONE {
                    low_owner[piv as usize] = j as u32;
                    break;
                }
                let src = &red[o as usize];
                let alpha = field.elim_factor(val, src.last().unwrap().1);
                axpy(field, &mut col, alpha, src);
            }
            pos[j] = col.is_empty();
            red[j] = col;
        }
        pos
    };
    for s in 0..n {
        if positive[s] && !paired[s] {
            bars.push((tr[s], f64::INFINITY));
        }
    }
    Barcode::new(bars)
}

/// `dim H_r` along `(delta, level)` for each `delta` in the grid; `level`
/// defaults to the top function level of the complex.
pub fn pointwise_dimension_curve(
    c: &BifilteredComplex,
    degree: usize,
    deltas: &[f64],
    level: Option<&[f64]>,
    field: Field,
) -> Result<Vec<usize>> {
    let top: Vec<f64> = match level {
        Some(l) => l.to_vec(),
        None => (1..c.params())
            .map(|i| {
                c.of_dim(0)
                    .iter()
                    .map(|s| s.grade.0[i])
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect(),
    };
    if top.len() + 1 != c.params() {
        return Err(Error::DimensionMismatch {
            expected: c.params() - 1,
            got: top.len(),
        });
    }
    let queries: Vec<Grade> = deltas
        .iter()
        .map(|&d| {
            let mut g = vec![d];
            g.extend_from_slice(&top);
            Grade::new(g)
        })
        .collect();
    if degree == 0 || c.params() <= 2 {
        let p = homology_presentation(c, degree, field)?;
        return Ok(hilbert_function(&p, &queries));
    }
    if degree + 1 > c.max_dim() {
        return Err(Error::InsufficientSkeleton {
            degree,
            needed: degree + 1,
            have: c.max_dim(),
        });
    }
    let dr = crate::filtration::boundary_of(c, degree, field);
    let dr1 = crate::filtration::boundary_of(c, degree + 1, field);
    Ok(queries
        .iter()
        .map(|z| {
            let chains = c.of_dim(degree).iter().filter(|s| s.grade.le(z)).count();
            let sel = |m: &crate::modalg::GradedMatrix| {
                let cols: Vec<&Column> = (0..m.ncols()).filter(|&j| m.col_grades()[j].le(z)).map(|j| &m.cols()[j]).collect();
                column_rank(field, m.nrows(), cols.into_iter())
            };
            chains - sel(&dr) - sel(&dr1)
        })
        .collect())
}
