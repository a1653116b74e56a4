use crate::error::{Error, Result};
use crate::field::{Column, Field};
use crate::grade::Grade;

/// A sparse matrix over F_p with a grade on every row and column.
///
/// Columns are sorted `(row, value)` lists. A nonzero entry `(i, j)` requires
/// `row_grades[i] <= col_grades[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix {
    field: Field,
    params: usize,
    row_grades: Vec<Grade>,
    col_grades: Vec<Grade>,
    cols: Vec<Column>,
}

impl GradedMatrix {
    /// Build without validation beyond debug assertions.
    pub fn new(
        field: Field,
        params: usize,
        row_grades: Vec<Grade>,
        col_grades: Vec<Grade>,
        cols: Vec<Column>,
    ) -> Self {
        let m = GradedMatrix {
            field,
            params,
            row_grades,
            col_grades,
            cols,
        };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    /// Build and check every invariant.
    pub fn try_new(
        field: Field,
        params: usize,
        row_grades: Vec<Grade>,
        col_grades: Vec<Grade>,
        cols: Vec<Column>,
    ) -> Result<Self> {
        let m = GradedMatrix {
            field,
            params,
            row_grades,
            col_grades,
            cols,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(field: Field, params: usize) -> Self {
        GradedMatrix::new(field, params, Vec::new(), Vec::new(), Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        if self.cols.len() != self.col_grades.len() {
            return Err(Error::InvalidParameter("column count differs from column grade count".into()));
        }
        for g in self.row_grades.iter().chain(&self.col_grades) {
            if g.dim() != self.params {
                return Err(Error::DimensionMismatch {
                    expected: self.params,
                    got: g.dim(),
                });
            }
            if g.0.iter().any(|v| v.is_nan()) {
                return Err(Error::InvalidParameter("NaN grade".into()));
            }
        }
        let p = self.field.characteristic();
        for (j, col) in self.cols.iter().enumerate() {
            if col.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::InvalidParameter(format!("column {j} not sorted")));
            }
            for &(r, v) in col {
                if r as usize >= self.row_grades.len() {
                    return Err(Error::InvalidParameter(format!("row {r} out of range in column {j}")));
                }
                if v == 0 || v >= p {
                    return Err(Error::InvalidParameter(format!("entry {v} outside 1..{p}")));
                }
                if !self.row_grades[r as usize].le(&self.col_grades[j]) {
                    return Err(Error::InvalidParameter(format!(
                        "entry ({r}, {j}) violates the grading: {} !<= {}",
                        self.row_grades[r as usize], self.col_grades[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn nrows(&self) -> usize {
        self.row_grades.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_grades(&self) -> &[Grade] {
        &self.row_grades
    }

    pub fn col_grades(&self) -> &[Grade] {
        &self.col_grades
    }

    pub fn cols(&self) -> &[Column] {
        &self.cols
    }

    pub fn col(&self, j: usize) -> &[(u32, u32)] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        crate::field::entry(&self.cols[j], i as u32)
    }

    pub fn into_parts(self) -> (Field, usize, Vec<Grade>, Vec<Grade>, Vec<Column>) {
        (self.field, self.params, self.row_grades, self.col_grades, self.cols)
    }

    pub fn map_grades(&self, f: impl Fn(&Grade) -> Grade) -> Self {
        GradedMatrix::new(
            self.field,
            self.params,
            self.row_grades.iter().map(&f).collect(),
            self.col_grades.iter().map(&f).collect(),
            self.cols.clone(),
        )
    }

    /// Keep the listed rows and columns (in the given order), reindexing.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut new_index = vec![u32::MAX; self.nrows()];
        for (k, &r) in rows.iter().enumerate() {
            new_index[r] = k as u32;
        }
        let new_cols = cols
            .iter()
            .map(|&j| {
                let mut c: Column = self.cols[j]
                    .iter()
                    .filter(|e| new_index[e.0 as usize] != u32::MAX)
                    .map(|&(r, v)| (new_index[r as usize], v))
                    .collect();
                c.sort_unstable();
                c
            })
            .collect();
        GradedMatrix::new(
            self.field,
            self.params,
            rows.iter().map(|&r| self.row_grades[r].clone()).collect(),
            cols.iter().map(|&j| self.col_grades[j].clone()).collect(),
            new_cols,
        )
    }

    /// Column-wise concatenation `[self | other]`.
    pub fn hconcat(&self, other: &GradedMatrix) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.characteristic(),
                other.field.characteristic(),
            ));
        }
        if self.row_grades != other.row_grades {
            return Err(Error::RowGradeMismatch);
        }
        let mut col_grades = self.col_grades.clone();
        col_grades.extend(other.col_grades.iter().cloned());
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(GradedMatrix::new(
            self.field,
            self.params,
            self.row_grades.clone(),
            col_grades,
            cols,
        ))
    }

    /// Multiply every entry by `-1`.
    pub fn negated(&self) -> Self {
        let f = self.field;
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&(r, v)| (r, f.neg(v))).collect())
            .collect();
        GradedMatrix::new(
            f,
            self.params,
            self.row_grades.clone(),
            self.col_grades.clone(),
            cols,
        )
    }

    /// Sparse product `self * other`; `other`'s rows index `self`'s columns.
    pub fn mul(&self, other: &GradedMatrix) -> Self {
        assert_eq!(self.ncols(), other.nrows(), "shape mismatch");
        let f = self.field;
        let mut acc = crate::field::Accumulator::new(self.nrows());
        let cols = other
            .cols
            .iter()
            .map(|c| {
                for &(k, v) in c {
                    acc.add_scaled(f, v, &self.cols[k as usize]);
                }
                acc.drain()
            })
            .collect();
        GradedMatrix::new(
            f,
            self.params,
            self.row_grades.clone(),
            other.col_grades.clone(),
            cols,
        )
    }
}

/// A finite free presentation: rows are generators, columns relations, and
/// the presented module is the cokernel.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub matrix: GradedMatrix,
}

impl Presentation {
    pub fn new(matrix: GradedMatrix) -> Self {
        Presentation { matrix }
    }

    pub fn params(&self) -> usize {
        self.matrix.params()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn generators(&self) -> &[Grade] {
        self.matrix.row_grades()
    }

    pub fn relations(&self) -> &[Grade] {
        self.matrix.col_grades()
    }

    pub fn map_grades(&self, f: impl Fn(&Grade) -> Grade) -> Self {
        Presentation::new(self.matrix.map_grades(f))
    }
}

impl From<GradedMatrix> for Presentation {
    fn from(matrix: GradedMatrix) -> Self {
        Presentation { matrix }
    }
}
