//! Function-Rips and function-Cech multifiltrations as graded simplicial
//! complexes.
//!
//! Membership is read with closed thresholds: a simplex graded at `g` is
//! present at every query `z` with `g <= z`.

mod cech;
mod complex;
mod rips;

pub use cech::{build_function_cech_euclidean, build_function_cech_truncated, min_enclosing_radius};
pub use complex::{boundary_matrices, BifilteredComplex, Simplex};
pub use rips::{build_function_rips, build_function_rips_truncated};

pub(crate) use complex::boundary as boundary_of;

use crate::grade::Grade;
use crate::modalg::GradedMatrix;

/// Multiply the scale coordinate of every grade by a positive factor.
pub trait RescaleHorizontal: Sized {
    fn rescale_horizontal(&self, factor: f64) -> Self;
}

impl RescaleHorizontal for BifilteredComplex {
    fn rescale_horizontal(&self, factor: f64) -> Self {
        assert!(factor > 0.0, "rescale factor must be positive");
        self.map_grades(|g| g.scale_first(factor))
    }
}

impl RescaleHorizontal for GradedMatrix {
    fn rescale_horizontal(&self, factor: f64) -> Self {
        assert!(factor > 0.0, "rescale factor must be positive");
        self.map_grades(|g| g.scale_first(factor))
    }
}

/// Free-function form of [`RescaleHorizontal::rescale_horizontal`].
pub fn rescale_horizontal<T: RescaleHorizontal>(x: &T, factor: f64) -> T {
    x.rescale_horizontal(factor)
}

pub(crate) fn grade_of(scale: f64, levels: impl Iterator<Item = f64>) -> Grade {
    let mut c = vec![scale];
    c.extend(levels);
    Grade::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SampledSpace;

    fn complex() -> BifilteredComplex {
        let s = SampledSpace::euclidean(
            vec![vec![0.0], vec![0.7], vec![1.9], vec![0.3]],
            vec![vec![0.1], vec![0.5], vec![0.2], vec![0.9]],
        )
        .unwrap();
        build_function_rips(&s, 2)
    }

    #[test]
    fn factor_one_is_identity() {
        let c = complex();
        assert_eq!(rescale_horizontal(&c, 1.0), c);
    }

    #[test]
    fn doubling_a_grade() {
        assert_eq!(Grade::new(vec![1.0, 0.5]).scale_first(2.0), Grade::new(vec![2.0, 0.5]));
    }

    #[test]
    fn double_then_halve_is_exact() {
        let c = complex();
        let back = rescale_horizontal(&rescale_horizontal(&c, 2.0), 0.5);
        assert_eq!(back, c);
        let d = rescale_horizontal(&c, 3.0);
        for (a, b) in c.simplices().iter().zip(d.simplices()) {
            assert_eq!(a.vertices, b.vertices);
            assert_eq!(a.grade.0[1..], b.grade.0[1..]);
        }
    }
}
