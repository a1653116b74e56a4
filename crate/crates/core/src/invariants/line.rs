use crate::error::{Error, Result};
use crate::grade::Grade;

/// A line `base + t * dir` with a strictly positive direction, normalized
/// to `max dir_i = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    base: Grade,
    dir: Grade,
}

impl Line {
    pub fn new(base: Grade, dir: Grade) -> Result<Line> {
        if base.dim() != dir.dim() {
            return Err(Error::DimensionMismatch {
                expected: base.dim(),
                got: dir.dim(),
            });
        }
        if dir.0.iter().any(|&d| !(d > 0.0 && d.is_finite())) {
            return Err(Error::NonPositiveDirection);
        }
        let top = dir.0.iter().copied().fold(0.0, f64::max);
        let dir = Grade::new(dir.0.iter().map(|d| d / top).collect());
        Ok(Line { base, dir })
    }

    pub fn base(&self) -> &Grade {
        &self.base
    }

    pub fn dir(&self) -> &Grade {
        &self.dir
    }

    /// Weight of the line in the matching distance: the smallest direction
    /// component.
    pub fn weight(&self) -> f64 {
        self.dir.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// The first parameter at which the line enters the upset of `g`.
    pub fn push(&self, g: &Grade) -> f64 {
        g.0.iter()
            .zip(&self.base.0)
            .zip(&self.dir.0)
            .map(|((x, b), d)| (x - b) / d)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_is_max() {
        let l = Line::new(Grade::from([0.0, 0.0]), Grade::from([1.0, 1.0])).unwrap();
        assert_eq!(l.push(&Grade::from([2.0, 0.0])), 2.0);
        assert!(Line::new(Grade::from([0.0, 0.0]), Grade::from([1.0, 0.0])).is_err());
    }
}
