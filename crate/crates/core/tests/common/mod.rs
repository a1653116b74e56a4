#![allow(dead_code)]

use fgest::field::Field;
use fgest::geometry::SampledSpace;
use fgest::{Grade, GradedMatrix, Presentation};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random 2-parameter presentation with small integer grades, so equal
/// grades and coincident joins occur often.
pub fn random_presentation(rng: &mut ChaCha8Rng, field: Field) -> Presentation {
    let g = rng.gen_range(1..7);
    let r = rng.gen_range(0..9);
    let gens: Vec<Grade> = (0..g)
        .map(|_| Grade::new(vec![rng.gen_range(0..5) as f64, rng.gen_range(0..5) as f64]))
        .collect();
    let mut cols = Vec::new();
    let mut grades = Vec::new();
    for _ in 0..r {
        let support = rng.gen_range(1..=g.min(3));
        let mut rows: Vec<u32> = Vec::new();
        while rows.len() < support {
            let i = rng.gen_range(0..g) as u32;
            if !rows.contains(&i) {
                rows.push(i);
            }
        }
        rows.sort_unstable();
        let mut grade = rows.iter().fold(Grade::new(vec![0.0, 0.0]), |a, &i| a.join(&gens[i as usize]));
        for c in grade.0.iter_mut() {
            *c += rng.gen_range(0..3) as f64;
        }
        let p = field.characteristic();
        cols.push(rows.into_iter().map(|i| (i, rng.gen_range(1..p))).collect());
        grades.push(grade);
    }
    Presentation::new(GradedMatrix::new(field, 2, gens, grades, cols))
}

pub fn grid(n: usize, lo: f64, hi: f64) -> Vec<Grade> {
    let step = (hi - lo) / (n - 1) as f64;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push(Grade::new(vec![lo + step * i as f64, lo + step * j as f64]));
        }
    }
    out
}

/// Small planar point cloud with a scalar function.
pub fn random_plane_space(rng: &mut ChaCha8Rng, k: usize) -> SampledSpace {
    let coords: Vec<Vec<f64>> = (0..k).map(|_| vec![rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)]).collect();
    let values = (0..k).map(|_| vec![rng.gen_range(0.0..1.0)]).collect();
    SampledSpace::euclidean(coords, values).unwrap()
}
