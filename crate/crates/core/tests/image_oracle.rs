use fgest::filtration::build_function_rips;
use fgest::modalg::{hilbert_function, pointwise_image_rank, smoothed_presentation};
use fgest::{Field, Grade, SampledSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_space(rng: &mut ChaCha8Rng) -> SampledSpace {
    let k = rng.gen_range(4..=12);
    let shape = rng.gen_range(0..3);
    let coords: Vec<Vec<f64>> = (0..k)
        .map(|i| match shape {
            0 => vec![rng.gen_range(0.0..1.0)],
            1 => vec![rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)],
            _ => {
                let t = std::f64::consts::TAU * (i as f64 + rng.gen_range(-0.2..0.2)) / k as f64;
                vec![t.cos(), t.sin()]
            }
        })
        .collect();
    let values = coords
        .iter()
        .map(|c| vec![c.last().unwrap() + rng.gen_range(-0.1..0.1)])
        .collect();
    SampledSpace::euclidean(coords, values).unwrap()
}

#[test]
fn smoothed_matches_image_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nonzero = 0;
    for _ in 0..80 {
        let sp = random_space(&mut rng);
        let r = rng.gen_range(0..=1usize);
        let c = build_function_rips(&sp, r + 1);
        let f = Field::default();
        let p = smoothed_presentation(&c, r, f).unwrap();
        let mut qs = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                qs.push(Grade::new(vec![0.25 * i as f64, -1.0 + 0.6 * j as f64]));
            }
        }
        let h = hilbert_function(&p, &qs);
        for (q, got) in qs.iter().zip(h) {
            if r == 1 && got > 0 {
                nonzero += 1;
            }
            assert_eq!(got, pointwise_image_rank(&c, r, q, f).unwrap(), "r={r} at {q}");
        }
    }
    assert!(nonzero > 0);
}
