use crate::error::{Error, Result};
use crate::field::{Column, Field};
use crate::filtration::{boundary_matrices, BifilteredComplex, RescaleHorizontal};
use crate::grade::Grade;

use super::local::eliminate_local_pairs;
use super::reduce::{column_rank, lift, sweep};
use super::{GradedMatrix, Presentation};

/// Minimal homogeneous generators of `ker(D)` for 1- or 2-parameter `D`.
///
/// Rows of the result index the columns of `D` and carry their grades.
pub fn ker_min_gen(d: &GradedMatrix) -> Result<GradedMatrix> {
    let s = sweep(d, true)?;
    let (col_grades, cols): (Vec<Grade>, Vec<Column>) = s.kernel.into_iter().unzip();
    Ok(GradedMatrix::new(
        d.field(),
        d.params(),
        d.col_grades().to_vec(),
        col_grades,
        cols,
    ))
}

/// Presentation of the image of the map between cokernels induced by `gamma`,
/// where `upsilon` presents the target. Both share row grades.
pub fn image_presentation(gamma: &GradedMatrix, upsilon: &GradedMatrix) -> Result<Presentation> {
    let d = gamma.hconcat(&upsilon.negated())?;
    let s = ker_min_gen(&d)?;
    let m1 = gamma.ncols() as u32;
    let cols = s
        .cols()
        .iter()
        .map(|c| c.iter().copied().take_while(|e| e.0 < m1).collect())
        .collect();
    Ok(Presentation::new(GradedMatrix::new(
        d.field(),
        d.params(),
        gamma.col_grades().to_vec(),
        s.col_grades().to_vec(),
        cols,
    )))
}

/// Presentation of `H_r` of a multifiltered complex.
///
/// Degree 0 returns the boundary matrix `d_1` directly (any number of
/// parameters). Higher degrees cancel local pairs in `d_{r+1}` and `d_r`,
/// take minimal kernel generators of the reduced `d_r` and lift the reduced
/// boundaries through them.
pub fn homology_presentation(c: &BifilteredComplex, degree: usize, field: Field) -> Result<Presentation> {
    let (dr, dr1) = boundary_matrices(c, degree, field)?;
    if degree == 0 {
        return Ok(Presentation::new(dr1));
    }
    if c.params() > 2 {
        return Err(Error::TooManyParameters(c.params()));
    }
    // pairs (r+1, r): drop paired r-cells from d_r's columns
    let high = eliminate_local_pairs(&dr1);
    let all_rows: Vec<usize> = (0..dr.nrows()).collect();
    let dr = dr.submatrix(&all_rows, &high.kept_rows);
    // pairs (r, r-1): drop paired r-cells from d_{r+1}'s rows
    let low = eliminate_local_pairs(&dr);
    let dr1 = high.matrix;
    let all_cols: Vec<usize> = (0..dr1.ncols()).collect();
    let dr1 = dr1.submatrix(&low.kept_cols, &all_cols);

    let z = ker_min_gen(&low.matrix)?;
    let nonzero: Vec<usize> = (0..dr1.ncols()).filter(|&j| !dr1.col(j).is_empty()).collect();
    let targets: Vec<Column> = nonzero.iter().map(|&j| dr1.col(j).to_vec()).collect();
    let lifted = lift(field, z.nrows(), z.cols(), &targets)?;
    Ok(Presentation::new(GradedMatrix::new(
        field,
        c.params(),
        z.col_grades().to_vec(),
        nonzero.iter().map(|&j| dr1.col_grades()[j].clone()).collect(),
        lifted,
    )))
}

/// Presentation of `im(H_r(R^delta) -> H_r(R^{2 delta}))`, indexed by `delta`.
///
/// For degree 0 the map is onto, so the result is the degree-0 presentation
/// with the scale coordinate halved.
pub fn smoothed_presentation(c: &BifilteredComplex, degree: usize, field: Field) -> Result<Presentation> {
    let h = homology_presentation(c, degree, field)?;
    if degree == 0 {
        return Ok(Presentation::new(h.matrix.rescale_horizontal(0.5)));
    }
    let source = minimize(&h)?.matrix;
    let target = source.rescale_horizontal(0.5);
    let k = source.nrows();
    let gamma = GradedMatrix::new(
        field,
        source.params(),
        target.row_grades().to_vec(),
        source.row_grades().to_vec(),
        (0..k).map(|i| vec![(i as u32, 1)]).collect(),
    );
    minimize(&image_presentation(&gamma, &target)?)
}

/// Remove redundant relations and local pairs until none remain.
pub fn minimize(p: &Presentation) -> Result<Presentation> {
    if p.params() > 2 {
        return Err(Error::TooManyParameters(p.params()));
    }
    let mut m = p.matrix.clone();
    loop {
        let s = sweep(&m, false)?;
        let keep: Vec<usize> = (0..m.ncols()).filter(|&j| !s.redundant[j]).collect();
        if keep.len() < m.ncols() {
            let rows: Vec<usize> = (0..m.nrows()).collect();
            m = m.submatrix(&rows, &keep);
        }
        let e = eliminate_local_pairs(&m);
        if e.removed(&m) == 0 {
            return Ok(Presentation::new(m));
        }
        m = e.matrix;
    }
}

/// Multigraded Betti numbers of a presented module.
#[derive(Clone, Debug, PartialEq)]
pub struct Betti {
    pub b0: Vec<Grade>,
    pub b1: Vec<Grade>,
    pub b2: Vec<Grade>,
}

impl Betti {
    pub fn degree(&self, i: usize) -> &[Grade] {
        match i {
            0 => &self.b0,
            1 => &self.b1,
            2 => &self.b2,
            _ => &[],
        }
    }

    /// `sum_i (-1)^i |{g in beta_i : g <= z}|`.
    pub fn euler_at(&self, z: &Grade) -> i64 {
        let count = |v: &[Grade]| v.iter().filter(|g| g.le(z)).count() as i64;
        count(&self.b0) - count(&self.b1) + count(&self.b2)
    }
}

pub fn betti_numbers(p: &Presentation) -> Result<Betti> {
    let min = minimize(p)?;
    let syz = ker_min_gen(&min.matrix)?;
    Ok(Betti {
        b0: min.matrix.row_grades().to_vec(),
        b1: min.matrix.col_grades().to_vec(),
        b2: syz.col_grades().to_vec(),
    })
}

/// `dim M_z` for each query grade `z`.
pub fn hilbert_function(p: &Presentation, queries: &[Grade]) -> Vec<usize> {
    let m = &p.matrix;
    queries
        .iter()
        .map(|z| {
            let rows = m.row_grades().iter().filter(|g| g.le(z)).count();
            if rows == 0 {
                return 0;
            }
            let cols = (0..m.ncols())
                .filter(|&j| m.col_grades()[j].le(z))
                .map(|j| &m.cols()[j]);
            rows - column_rank(m.field(), m.nrows(), cols)
        })
        .collect()
}
