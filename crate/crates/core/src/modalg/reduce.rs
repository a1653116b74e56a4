//! Column reductions behind the kernel, minimal-generator and lifting steps.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{axpy, Accumulator, Column, Field};
use crate::grade::Grade;

use super::GradedMatrix;

const NONE: u32 = u32::MAX;

/// `cols[t] += alpha * cols[s]`.
fn add_col(field: Field, cols: &mut [Column], t: usize, alpha: u32, s: usize) {
    let src = std::mem::take(&mut cols[s]);
    axpy(field, &mut cols[t], alpha, &src);
    cols[s] = src;
}

/// Result of sweeping a 1- or 2-parameter matrix.
pub(crate) struct Sweep {
    /// Minimal kernel generators `(grade, coefficient column)`, if requested.
    pub kernel: Vec<(Grade, Column)>,
    /// `redundant[j]`: column j lies in the span of columns of lower grade
    /// (equal grades broken by index).
    pub redundant: Vec<bool>,
}

/// Incremental column reduction, sweeping the first grade coordinate and
/// ordering columns by `(y, x, index)` within each step.
///
/// Columns that turn zero during the step at `x` contribute kernel generators
/// at `(x, y_col)`; their recorded column operations are the coefficients.
pub(crate) fn sweep(d: &GradedMatrix, want_kernel: bool) -> Result<Sweep> {
    let m = d.params();
    if m > 2 {
        return Err(Error::TooManyParameters(m));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("graded matrix without parameters".into()));
    }
    let n = d.ncols();
    let field = d.field();
    let grades = d.col_grades();
    let xy = |j: usize| -> (f64, f64) {
        let g = &grades[j].0;
        if m == 2 {
            (g[0], g[1])
        } else {
            (0.0, g[0])
        }
    };

    let mut by_key: Vec<usize> = (0..n).collect();
    by_key.sort_by(|&a, &b| {
        let (xa, ya) = xy(a);
        let (xb, yb) = xy(b);
        ya.total_cmp(&yb).then(xa.total_cmp(&xb)).then(a.cmp(&b))
    });
    let mut rank = vec![0u32; n];
    for (k, &j) in by_key.iter().enumerate() {
        rank[j] = k as u32;
    }
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&a, &b| xy(a).0.total_cmp(&xy(b).0).then(rank[a].cmp(&rank[b])));

    let mut r: Vec<Column> = vec![Vec::new(); n];
    let mut v: Vec<Column> = if want_kernel { vec![Vec::new(); n] } else { Vec::new() };
    let mut owner = vec![NONE; d.nrows()];
    let mut redundant = vec![false; n];
    let mut kernel = Vec::new();
    let mut work = Vec::new();
    let mut zeroed = Vec::new();

    let mut start = 0;
    while start < n {
        let x = xy(by_x[start]).0;
        let mut end = start;
        while end < n && xy(by_x[end]).0.total_cmp(&x) == Ordering::Equal {
            end += 1;
        }
        for &j in &by_x[start..end] {
            r[j] = d.col(j).to_vec();
            if want_kernel {
                v[j] = vec![(j as u32, 1)];
            }
            work.push(j);
            while let Some(c) = work.pop() {
                loop {
                    let Some(&(piv, val)) = r[c].last() else {
                        zeroed.push(c);
                        break;
                    };
                    let o = owner[piv as usize];
                    if o == NONE {
                        owner[piv as usize] = c as u32;
                        break;
                    }
                    let o = o as usize;
                    let oval = r[o].last().expect("owner column is nonzero").1;
                    if rank[o] < rank[c] {
                        let alpha = field.elim_factor(val, oval);
                        add_col(field, &mut r, c, alpha, o);
                        if want_kernel {
                            add_col(field, &mut v, c, alpha, o);
                        }
                    } else {
                        owner[piv as usize] = c as u32;
                        let alpha = field.elim_factor(oval, val);
                        add_col(field, &mut r, o, alpha, c);
                        if want_kernel {
                            add_col(field, &mut v, o, alpha, c);
                        }
                        work.push(o);
                        break;
                    }
                }
            }
        }
        zeroed.sort_by_key(|&c| rank[c]);
        for &c in &zeroed {
            if want_kernel {
                let g = if m == 2 {
                    Grade::new(vec![x, xy(c).1])
                } else {
                    Grade::new(vec![xy(c).1])
                };
                kernel.push((g, std::mem::take(&mut v[c])));
            }
        }
        zeroed.clear();
        for &j in &by_x[start..end] {
            redundant[j] = r[j].is_empty();
        }
        start = end;
    }
    Ok(Sweep { kernel, redundant })
}

/// Express each target as a combination of the linearly independent columns
/// `basis`; fails if some target is outside their span.
pub(crate) fn lift(field: Field, nrows: usize, basis: &[Column], targets: &[Column]) -> Result<Vec<Column>> {
    let k = basis.len();
    let mut r: Vec<Column> = basis.to_vec();
    let mut v: Vec<Column> = (0..k).map(|j| vec![(j as u32, 1)]).collect();
    let mut owner = vec![NONE; nrows];
    for c in 0..k {
        loop {
            let Some(&(piv, val)) = r[c].last() else {
                return Err(Error::InvalidParameter("lift basis is linearly dependent".into()));
            };
            let o = owner[piv as usize];
            if o == NONE {
                owner[piv as usize] = c as u32;
                break;
            }
            let o = o as usize;
            let alpha = field.elim_factor(val, r[o].last().unwrap().1);
            add_col(field, &mut r, c, alpha, o);
            add_col(field, &mut v, c, alpha, o);
        }
    }
    let mut coeffs = Accumulator::new(k);
    targets
        .iter()
        .map(|t| {
            let mut t = t.clone();
            while let Some(&(piv, val)) = t.last() {
                let o = owner[piv as usize];
                if o == NONE {
                    coeffs.drain();
                    return Err(Error::NotInSpan);
                }
                let o = o as usize;
                let alpha = field.elim_factor(val, r[o].last().unwrap().1);
                axpy(field, &mut t, alpha, &r[o]);
                coeffs.add_scaled(field, alpha, &v[o]);
            }
            let mut out = coeffs.drain();
            for e in out.iter_mut() {
                e.1 = field.neg(e.1);
            }
            Ok(out)
        })
        .collect()
}

/// Rank of a set of sparse columns.
pub(crate) fn column_rank<'a>(field: Field, nrows: usize, cols: impl Iterator<Item = &'a Column>) -> usize {
    let mut reduced: Vec<Column> = Vec::new();
    let mut owner = vec![NONE; nrows];
    for col in cols {
        let mut c = col.clone();
        while let Some(&(piv, val)) = c.last() {
            let o = owner[piv as usize];
            if o == NONE {
                owner[piv as usize] = reduced.len() as u32;
                reduced.push(c);
                break;
            }
            let src = &reduced[o as usize];
            let alpha = field.elim_factor(val, src.last().unwrap().1);
            axpy(field, &mut c, alpha, src);
        }
    }
    reduced.len()
}
