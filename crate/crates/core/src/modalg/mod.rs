//! Graded-matrix algebra over prime fields: kernels, image presentations,
//! minimization, Betti numbers and Hilbert functions.

mod io;
mod local;
mod matrix;
mod oracle;
mod presentation;
mod reduce;

pub use io::{read_pres, write_pres};

pub(crate) use reduce::column_rank;
pub use matrix::{GradedMatrix, Presentation};
pub use oracle::{dense_nullspace, dense_rank, pointwise_homology_dim, pointwise_image_rank};
pub use presentation::{
    betti_numbers, hilbert_function, homology_presentation, image_presentation, ker_min_gen,
    minimize, smoothed_presentation, Betti,
};
