mod common;

use common::{grid, random_plane_space, random_presentation};
use fgest::filtration::{boundary_matrices, build_function_rips};
use fgest::invariants::slice_vertical;
use fgest::modalg::{betti_numbers, hilbert_function, homology_presentation, ker_min_gen, minimize, smoothed_presentation};
use fgest::{Field, Grade, Presentation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sorted_grades(p: &Presentation) -> (Vec<String>, Vec<String>) {
    let f = |gs: &[Grade]| {
        let mut v: Vec<String> = gs.iter().map(|g| format!("{:?}", g.0)).collect();
        v.sort();
        v
    };
    (f(p.generators()), f(p.relations()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimize_preserves_hilbert_and_is_idempotent(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = Field::new(p).unwrap();
        let pres = random_presentation(&mut rng, field);
        let m = minimize(&pres).unwrap();
        m.matrix.validate().unwrap();
        let q = grid(8, 0.0, 9.0);
        prop_assert_eq!(hilbert_function(&pres, &q), hilbert_function(&m, &q));
        let mm = minimize(&m).unwrap();
        prop_assert_eq!(sorted_grades(&m), sorted_grades(&mm));
    }

    #[test]
    fn kernel_generators_are_cycles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = Field::new(3).unwrap();
        let d = random_presentation(&mut rng, field).matrix;
        let s = ker_min_gen(&d).unwrap();
        s.validate().unwrap();
        prop_assert!(d.mul(&s).cols().iter().all(|c| c.is_empty()));
        for (g, h) in s.row_grades().iter().zip(d.col_grades()) {
            prop_assert_eq!(g, h);
        }
    }

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pres = random_presentation(&mut rng, Field::default());
        let b = betti_numbers(&pres).unwrap();
        let q = grid(10, 0.0, 9.0);
        let dims = hilbert_function(&pres, &q);
        for (z, d) in q.iter().zip(dims) {
            prop_assert_eq!(b.euler_at(z), d as i64);
        }
    }

    #[test]
    fn hilbert_independent_of_characteristic(seed in any::<u64>(), degree in 0usize..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = random_plane_space(&mut rng, 8);
        let c = build_function_rips(&space, degree + 1);
        let q = grid(6, 0.0, 1.2);
        let h2 = homology_presentation(&c, degree, Field::new(2).unwrap()).unwrap();
        let h3 = homology_presentation(&c, degree, Field::new(3).unwrap()).unwrap();
        prop_assert_eq!(hilbert_function(&h2, &q), hilbert_function(&h3, &q));
    }

    #[test]
    fn vertical_slice_agrees_with_hilbert(seed in any::<u64>(), degree in 0usize..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = random_plane_space(&mut rng, 8);
        let c = build_function_rips(&space, degree + 1);
        let p = smoothed_presentation(&c, degree, Field::default()).unwrap();
        for delta in [0.1, 0.25, 0.4] {
            let bars = slice_vertical(&p, delta).unwrap();
            for y in [0.0, 0.2, 0.5, 0.8, 1.0] {
                let dim = hilbert_function(&p, &[Grade::new(vec![delta, y])])[0];
                prop_assert_eq!(bars.alive_at(y), dim, "delta {} y {}", delta, y);
            }
        }
    }

    #[test]
    fn chain_condition_on_random_clouds(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = build_function_rips(&random_plane_space(&mut rng, 7), 3);
        prop_assert!(c.check_monotone().is_ok());
        let (a, b) = boundary_matrices(&c, 2, Field::new(p).unwrap()).unwrap();
        prop_assert!(a.mul(&b).cols().iter().all(|col| col.is_empty()));
    }
}
