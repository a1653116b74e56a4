//! Sampled metric spaces with function values, and the synthetic spaces used
//! by the experiments.

mod metric;
mod sampling;

pub use metric::{
    farthest_point_sample, graph_geodesic, hausdorff, hausdorff_1d, hausdorff_by, perturb,
    NoiseSpec,
};
pub use sampling::{
    brownian_path, sample_circle, sample_circle_with_grid, CircleSample, DEFAULT_REFERENCE_GRID,
};

use crate::error::{Error, Result};

/// How pairwise distances are obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum Metric {
    /// Row-major `k x k` matrix; `+inf` marks disconnected pairs.
    Matrix(Vec<f64>),
    /// Euclidean distance between ambient coordinates, computed on demand.
    Euclidean,
}

/// A finite sample `P` with pairwise distances and values `f(p)` in R^n.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledSpace {
    coords: Option<Vec<Vec<f64>>>,
    metric: Metric,
    values: Vec<Vec<f64>>,
}

impl SampledSpace {
    /// Points with ambient coordinates and the Euclidean metric.
    pub fn euclidean(coords: Vec<Vec<f64>>, values: Vec<Vec<f64>>) -> Result<Self> {
        if coords.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "{} coordinate rows but {} value rows",
                coords.len(),
                values.len()
            )));
        }
        check_rectangular(&coords)?;
        check_rectangular(&values)?;
        Ok(SampledSpace {
            coords: Some(coords),
            metric: Metric::Euclidean,
            values,
        })
    }

    /// Points given by an explicit distance matrix (row-major, `k*k`).
    pub fn from_matrix(
        dist: Vec<f64>,
        values: Vec<Vec<f64>>,
        coords: Option<Vec<Vec<f64>>>,
    ) -> Result<Self> {
        let k = values.len();
        if dist.len() != k * k {
            return Err(Error::InvalidParameter(format!(
                "distance matrix has {} entries, expected {}",
                dist.len(),
                k * k
            )));
        }
        for i in 0..k {
            if dist[i * k + i] != 0.0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                let d = dist[i * k + j];
                if d.is_nan() || d < 0.0 || d != dist[j * k + i] {
                    return Err(Error::InvalidParameter(format!(
                        "distance ({i},{j}) is negative, NaN or asymmetric"
                    )));
                }
            }
        }
        check_rectangular(&values)?;
        if let Some(c) = &coords {
            if c.len() != k {
                return Err(Error::InvalidParameter("coordinate count mismatch".into()));
            }
        }
        Ok(SampledSpace {
            coords,
            metric: Metric::Matrix(dist),
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of function components `n` (0 for an empty space).
    pub fn n_values(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &[f64] {
        &self.values[i]
    }

    pub fn coords(&self) -> Option<&[Vec<f64>]> {
        self.coords.as_deref()
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        match &self.metric {
            Metric::Matrix(m) => m[i * self.len() + j],
            Metric::Euclidean => {
                let c = self.coords.as_ref().expect("euclidean space has coordinates");
                euclid(&c[i], &c[j])
            }
        }
    }

    /// Dense copy of the distance matrix.
    pub fn distance_matrix(&self) -> Vec<f64> {
        match &self.metric {
            Metric::Matrix(m) => m.clone(),
            Metric::Euclidean => {
                let k = self.len();
                let mut out = vec![0.0; k * k];
                for i in 0..k {
                    for j in 0..i {
                        let d = self.dist(i, j);
                        out[i * k + j] = d;
                        out[j * k + i] = d;
                    }
                }
                out
            }
        }
    }

    /// Same points and metric with new function values.
    pub fn with_values(&self, values: Vec<Vec<f64>>) -> Result<Self> {
        if values.len() != self.len() {
            return Err(Error::InvalidParameter("value row count mismatch".into()));
        }
        check_rectangular(&values)?;
        Ok(SampledSpace {
            coords: self.coords.clone(),
            metric: self.metric.clone(),
            values,
        })
    }

    /// Same points and values with an explicit distance matrix.
    pub fn with_matrix(&self, dist: Vec<f64>) -> Result<Self> {
        SampledSpace::from_matrix(dist, self.values.clone(), self.coords.clone())
    }

    /// Restriction to the listed points, in the given order.
    pub fn subset(&self, ids: &[usize]) -> Result<Self> {
        if let Some(&bad) = ids.iter().find(|&&i| i >= self.len()) {
            return Err(Error::PointOutOfRange(bad));
        }
        let values = ids.iter().map(|&i| self.values[i].clone()).collect();
        let coords = self
            .coords
            .as_ref()
            .map(|c| ids.iter().map(|&i| c[i].clone()).collect());
        let metric = match &self.metric {
            Metric::Euclidean => Metric::Euclidean,
            Metric::Matrix(_) => {
                let mut m = Vec::with_capacity(ids.len() * ids.len());
                for &i in ids {
                    for &j in ids {
                        m.push(self.dist(i, j));
                    }
                }
                Metric::Matrix(m)
            }
        };
        Ok(SampledSpace {
            coords,
            metric,
            values,
        })
    }

    /// Disjoint union; cross distances are `+inf`.
    pub fn disjoint_union(&self, other: &SampledSpace) -> Result<Self> {
        if !self.is_empty() && !other.is_empty() && self.n_values() != other.n_values() {
            return Err(Error::DimensionMismatch {
                expected: self.n_values(),
                got: other.n_values(),
            });
        }
        let (a, b) = (self.len(), other.len());
        let k = a + b;
        let mut m = vec![f64::INFINITY; k * k];
        for i in 0..a {
            for j in 0..a {
                m[i * k + j] = self.dist(i, j);
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i) * k + a + j] = other.dist(i, j);
            }
        }
        let coords = match (&self.coords, &other.coords) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
            _ => None,
        };
        let values = self.values.iter().chain(&other.values).cloned().collect();
        SampledSpace::from_matrix(m, values, coords)
    }
}

pub(crate) fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn check_rectangular(rows: &[Vec<f64>]) -> Result<()> {
    if let Some(first) = rows.first() {
        if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
            return Err(Error::DimensionMismatch {
                expected: first.len(),
                got: bad.len(),
            });
        }
    }
    Ok(())
}
