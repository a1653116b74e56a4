use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::filtration::BifilteredComplex;
use crate::grade::Grade;
use crate::modalg::Presentation;

use super::{bottleneck, slice_line, slice_line_complex, Barcode, Line};

/// Something whose restriction to a line has a barcode.
#[derive(Clone, Copy, Debug)]
pub enum SliceSource<'a> {
    Presentation(&'a Presentation),
    Complex {
        complex: &'a BifilteredComplex,
        degree: usize,
        field: Field,
    },
}

impl SliceSource<'_> {
    pub fn params(&self) -> usize {
        match self {
            SliceSource::Presentation(p) => p.params(),
            SliceSource::Complex { complex, .. } => complex.params(),
        }
    }

    pub fn slice(&self, line: &Line) -> Result<Barcode> {
        match *self {
            SliceSource::Presentation(p) => slice_line(p, line),
            SliceSource::Complex { complex, degree, field } => slice_line_complex(complex, degree, line, field),
        }
    }

    fn grades(&self) -> Box<dyn Iterator<Item = &Grade> + '_> {
        match self {
            SliceSource::Presentation(p) => Box::new(p.generators().iter().chain(p.relations())),
            SliceSource::Complex { complex, .. } => Box::new(complex.simplices().iter().map(|s| &s.grade)),
        }
    }
}

/// Coordinatewise bounds of the finite grade coordinates of both sources.
fn bounding_box(a: &SliceSource, b: &SliceSource) -> (Vec<f64>, Vec<f64>) {
    let m = a.params();
    let mut lo = vec![f64::INFINITY; m];
    let mut hi = vec![f64::NEG_INFINITY; m];
    for g in a.grades().chain(b.grades()) {
        for (i, &v) in g.0.iter().enumerate() {
            if v.is_finite() {
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
    }
    for i in 0..m {
        if lo[i] > hi[i] {
            lo[i] = 0.0;
            hi[i] = 0.0;
        }
    }
    (lo, hi)
}

/// The `index`-th random line for `seed`: base uniform in the box,
/// direction uniform on the positive simplex. Each line has its own stream.
pub fn random_line(lo: &[f64], hi: &[f64], seed: u64, index: u64) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let base: Vec<f64> = lo
        .iter()
        .zip(hi)
        .map(|(&l, &h)| if h > l { rng.gen_range(l..=h) } else { l })
        .collect();
    let dir: Vec<f64> = (0..lo.len())
        .map(|_| {
            let u: f64 = rng.gen_range(f64::EPSILON..1.0);
            -u.ln()
        })
        .collect();
    Line::new(Grade::new(base), Grade::new(dir)).expect("exponential draws are positive")
}

/// Monte-Carlo estimate of the matching distance: the largest weighted
/// bottleneck distance between line restrictions over `n_lines` random
/// lines. Deaths are capped at `truncation` along each line.
pub fn matching_distance_mc(
    a: &SliceSource,
    b: &SliceSource,
    n_lines: usize,
    seed: u64,
    truncation: f64,
) -> Result<f64> {
    if a.params() != b.params() {
        return Err(Error::DimensionMismatch {
            expected: a.params(),
            got: b.params(),
        });
    }
    if n_lines == 0 {
        return Err(Error::InvalidParameter("n_lines must be >= 1".into()));
    }
    let (lo, hi) = bounding_box(a, b);
    let lines: Vec<Line> = (0..n_lines as u64).map(|i| random_line(&lo, &hi, seed, i)).collect();
    matching_distance_on(a, b, &lines, truncation)
}

/// Weighted bottleneck supremum over an explicit family of lines.
pub fn matching_distance_on(a: &SliceSource, b: &SliceSource, lines: &[Line], truncation: f64) -> Result<f64> {
    let per_line: Vec<f64> = lines
        .par_iter()
        .map(|l| -> Result<f64> {
            let d = bottleneck(&a.slice(l)?, &b.slice(l)?, truncation);
            Ok(l.weight() * d)
        })
        .collect::<Result<_>>()?;
    Ok(per_line.into_iter().fold(0.0, f64::max))
}
