//! One-parameter restrictions, barcodes, bottleneck and matching distances.

mod barcode;
mod bottleneck;
mod io;
mod line;
mod matching;
mod slice;

pub use barcode::Barcode;
pub use bottleneck::{bottleneck, bottleneck_exhaustive, vertical_bottleneck_grades};
pub use io::{betti_to_csv, curve_to_csv};
pub use line::Line;
pub use matching::{matching_distance_mc, matching_distance_on, random_line, SliceSource};
pub use slice::{
    pointwise_dimension_curve, presentation_barcode, slice_line, slice_line_complex, slice_vertical,
};
