//! Cancellation of local pairs: a column whose pivot row carries the same
//! grade as the column itself.

use crate::field::{axpy, Accumulator, Column};

use super::GradedMatrix;

const NONE: u32 = u32::MAX;

pub(crate) struct Elimination {
    /// Schur complement on the unpaired rows and columns (original order).
    pub matrix: GradedMatrix,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
}

impl Elimination {
    pub fn removed(&self, original: &GradedMatrix) -> usize {
        original.ncols() - self.kept_cols.len()
    }
}

/// Pair columns with equal-grade pivot rows and eliminate them.
///
/// Rows are ranked by `(grade, index)` and the pivot is the highest rank.
/// Each removed row is replaced in every other column by its expression
/// through the paired column, which keeps the cokernel (and, read as a
/// chain map, the homology) unchanged up to isomorphism.
pub(crate) fn eliminate_local_pairs(m: &GradedMatrix) -> Elimination {
    let field = m.field();
    let nr = m.nrows();
    let nc = m.ncols();
    let rg = m.row_grades();
    let cg = m.col_grades();

    let mut row_of_rank: Vec<usize> = (0..nr).collect();
    row_of_rank.sort_by(|&a, &b| rg[a].lex_cmp(&rg[b]).then(a.cmp(&b)));
    let mut rank = vec![0u32; nr];
    for (k, &i) in row_of_rank.iter().enumerate() {
        rank[i] = k as u32;
    }
    let mut col_order: Vec<usize> = (0..nc).collect();
    col_order.sort_by(|&a, &b| cg[a].lex_cmp(&cg[b]).then(a.cmp(&b)));

    let mut cols: Vec<Column> = m
        .cols()
        .iter()
        .map(|c| {
            let mut c: Column = c.iter().map(|&(r, v)| (rank[r as usize], v)).collect();
            c.sort_unstable();
            c
        })
        .collect();

    let mut owner = vec![NONE; nr];
    let mut paired_col = vec![false; nc];
    for &j in &col_order {
        let mut c = std::mem::take(&mut cols[j]);
        while let Some(&(piv, val)) = c.last() {
            if rg[row_of_rank[piv as usize]] != cg[j] {
                break;
            }
            let o = owner[piv as usize];
            if o == NONE {
                owner[piv as usize] = j as u32;
                paired_col[j] = true;
                break;
            }
            let src = &cols[o as usize];
            let alpha = field.elim_factor(val, src.last().unwrap().1);
            axpy(field, &mut c, alpha, src);
        }
        cols[j] = c;
    }

    // replacement of every paired row by unpaired rows, in increasing rank
    let mut reps: Vec<Option<Column>> = vec![None; nr];
    let mut acc = Accumulator::new(nr);
    for piv in 0..nr {
        let o = owner[piv];
        if o == NONE {
            continue;
        }
        let col = &cols[o as usize];
        let (_, lambda) = *col.last().unwrap();
        let factor = field.neg(field.inv(lambda));
        for &(r, v) in &col[..col.len() - 1] {
            let v = field.mul(factor, v);
            match &reps[r as usize] {
                Some(rep) => acc.add_scaled(field, v, rep),
                None => acc.add(field, r, v),
            }
        }
        reps[piv] = Some(acc.drain());
    }

    let kept_rows: Vec<usize> = (0..nr).filter(|&i| owner[rank[i] as usize] == NONE).collect();
    let mut new_index = vec![NONE; nr];
    for (k, &i) in kept_rows.iter().enumerate() {
        new_index[rank[i] as usize] = k as u32;
    }
    let kept_cols: Vec<usize> = (0..nc).filter(|&j| !paired_col[j]).collect();
    let new_cols = kept_cols
        .iter()
        .map(|&j| {
            for &(r, v) in &cols[j] {
                match &reps[r as usize] {
                    Some(rep) => acc.add_scaled(field, v, rep),
                    None => acc.add(field, r, v),
                }
            }
            let mut c: Column = acc
                .drain()
                .into_iter()
                .map(|(r, v)| (new_index[r as usize], v))
                .collect();
            c.sort_unstable();
            c
        })
        .collect();
    let matrix = GradedMatrix::new(
        field,
        m.params(),
        kept_rows.iter().map(|&i| rg[i].clone()).collect(),
        kept_cols.iter().map(|&j| cg[j].clone()).collect(),
        new_cols,
    );
    Elimination {
        matrix,
        kept_rows,
        kept_cols,
    }
}
