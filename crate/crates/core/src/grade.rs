//! Points of R^m under the product order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A multi-parameter filtration value. For function-geometric filtrations the
/// first coordinate is the scale and the remaining ones are function levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grade(pub Vec<f64>);

impl Grade {
    pub fn new(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| !c.is_nan()), "NaN grade");
        Grade(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// Product order: every coordinate `<=`.
    pub fn le(&self, other: &Grade) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Lexicographic total order; extends the product order.
    pub fn lex_cmp(&self, other: &Grade) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.dim().cmp(&other.dim())
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &Grade) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a.max(*b)).collect())
    }

    /// Coordinatewise minimum.
    pub fn meet(&self, other: &Grade) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a.min(*b)).collect())
    }

    /// Multiply the scale (first) coordinate, leaving function levels alone.
    pub fn scale_first(&self, factor: f64) -> Grade {
        let mut c = self.0.clone();
        if let Some(first) = c.first_mut() {
            *first *= factor;
        }
        Grade(c)
    }

    /// Componentwise product with `weights`.
    pub fn hadamard(&self, weights: &[f64]) -> Grade {
        Grade(self.0.iter().zip(weights).map(|(a, w)| a * w).collect())
    }

    /// Round every coordinate to the nearest multiple of `step`.
    pub fn snapped(&self, step: f64) -> Grade {
        Grade(
            self.0
                .iter()
                .map(|v| if v.is_finite() { (v / step).round() * step } else { *v })
                .collect(),
        )
    }
}

impl From<Vec<f64>> for Grade {
    fn from(v: Vec<f64>) -> Self {
        Grade::new(v)
    }
}

impl<const N: usize> From<[f64; N]> for Grade {
    fn from(v: [f64; N]) -> Self {
        Grade::new(v.to_vec())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format_f64(*v)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Shortest decimal that round-trips exactly; `inf`/`-inf` for infinities.
pub fn format_f64(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".to_string()
    } else if v == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{v:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_order_is_partial() {
        let a = Grade::from([1.0, 0.0]);
        let b = Grade::from([0.0, 1.0]);
        assert!(!a.le(&b) && !b.le(&a));
        assert!(a.le(&a.join(&b)));
        assert_eq!(a.lex_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn float_text_round_trip() {
        for v in [0.1, 1.0 / 3.0, 2.0f64.sqrt(), 1e-300, f64::INFINITY] {
            let s = format_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }
}
