use std::fmt::Write as _;

use crate::grade::format_f64;
use crate::modalg::Betti;

/// Betti CSV: `degree,g1,...,gm`, one grade per row.
pub fn betti_to_csv(b: &Betti, params: usize) -> String {
    let mut out = String::from("degree");
    for i in 1..=params {
        let _ = write!(out, ",g{i}");
    }
    out.push('\n');
    for d in 0..3 {
        for g in b.degree(d) {
            let _ = write!(out, "{d}");
            for v in &g.0 {
                let _ = write!(out, ",{}", format_f64(*v));
            }
            out.push('\n');
        }
    }
    out
}

/// Curve CSV: `delta,dim`.
pub fn curve_to_csv(deltas: &[f64], dims: &[usize]) -> String {
    let mut out = String::from("delta,dim\n");
    for (d, k) in deltas.iter().zip(dims) {
        let _ = writeln!(out, "{},{k}", format_f64(*d));
    }
    out
}
