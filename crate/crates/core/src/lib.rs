//! Estimating multiparameter persistent homology of a function from samples.
//!
//! The pipeline: a [`geometry::SampledSpace`] feeds the function-Rips (or
//! Euclidean function-Cech) multifiltration of [`filtration`]; [`modalg`]
//! turns it into a free presentation of the smoothed estimator
//! `im H(R^delta) -> H(R^{2 delta})`; [`invariants`] slices and compares
//! the result; [`scale`] picks `delta`; [`harness`] runs the experiments.

pub mod error;
pub mod field;
pub mod filtration;
pub mod geometry;
pub mod grade;
pub mod harness;
pub mod invariants;
pub mod modalg;
pub mod scale;

pub use error::{Error, Result};
pub use field::Field;
pub use filtration::{BifilteredComplex, Simplex};
pub use geometry::SampledSpace;
pub use grade::Grade;
pub use modalg::{GradedMatrix, Presentation};
