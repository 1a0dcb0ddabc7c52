//! Randomized invariants for the linear-algebra layer and structural
//! properties of the calculus. Random instances are drawn from a fixed
//! seed so failures reproduce.

use mopkit_core::linalg::Mat;
use mopkit_core::scalar::{Cf64, Rat, Scalar};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x0bad_5eed_0000_0001;

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    Rat::from_fraction(num, den)
}

fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat<Rat> {
    Mat::from_fn(rows, cols, |_, _| random_rat(rng))
}

#[test]
fn schur_determinant_relation_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < 25 {
        let k = rng.gen_range(1usize..=3);
        let d = rng.gen_range(1usize..=3);
        let m = random_mat(&mut rng, k + d, k + d);
        let a = m.block(0, k, 0, k);
        if a.det().is_zero() {
            continue;
        }
        let s = m.schur_complement(k).unwrap();
        assert_eq!(s.det() * a.det(), m.det());
        checked += 1;
    }
}

#[test]
fn schur_entries_are_determinant_ratios() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x11);
    let mut checked = 0;
    while checked < 10 {
        let m = random_mat(&mut rng, 4, 4);
        let k = 2;
        let a = m.block(0, k, 0, k);
        let det_a = a.det();
        if det_a.is_zero() {
            continue;
        }
        let s = m.schur_complement(k).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                // det [[A, b_j], [c_i, d_ij]] / det A
                let bordered = Mat::from_fn(k + 1, k + 1, |r, c| {
                    if r < k && c < k {
                        m[(r, c)].clone()
                    } else if r < k {
                        m[(r, k + j)].clone()
                    } else if c < k {
                        m[(k + i, c)].clone()
                    } else {
                        m[(k + i, k + j)].clone()
                    }
                });
                assert_eq!(s[(i, j)], bordered.det() / det_a.clone());
            }
        }
        checked += 1;
    }
}

#[test]
fn schur_left_multiplication_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x22);
    let mut checked = 0;
    while checked < 10 {
        let k = 2;
        let d = 2;
        let m = random_mat(&mut rng, k + d, k + d);
        if m.block(0, k, 0, k).det().is_zero() {
            continue;
        }
        let u = random_mat(&mut rng, d, d);
        let s = m.schur_complement(k).unwrap();
        // Premultiply the trailing block rows by U.
        let c = m.block(k, k + d, 0, k);
        let dd = m.block(k, k + d, k, k + d);
        let scaled = Mat::from_blocks(&[
            vec![m.block(0, k, 0, k), m.block(0, k, k, k + d)],
            vec![u.matmul(&c), u.matmul(&dd)],
        ]);
        assert_eq!(u.matmul(&s), scaled.schur_complement(k).unwrap());
        checked += 1;
    }
}

#[test]
fn bareiss_and_pivoted_elimination_agree_on_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x33);
    for _ in 0..20 {
        let n = rng.gen_range(1usize..=5);
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-20i64..=20)).collect())
            .collect();
        let exact = Mat::from_fn(n, n, |i, j| Rat::from_int(entries[i][j]));
        let float = Mat::from_fn(n, n, |i, j| Cf64::from_int(entries[i][j]));
        let want = exact.det().to_complex();
        assert!(
            float.det().approx_eq(&want, 1e-10),
            "n = {}, exact = {}, float = {}",
            n,
            exact.det().render(),
            float.det().render()
        );
    }
}

proptest! {
    #[test]
    fn solve_multiplies_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1usize..=4);
        let a = random_mat(&mut rng, n, n);
        let b = random_mat(&mut rng, n, 2);
        if let Ok(x) = a.solve(&b) {
            prop_assert_eq!(a.matmul(&x), b);
        } else {
            prop_assert!(a.det().is_zero());
        }
    }

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1usize..=4);
        let a = random_mat(&mut rng, n, n);
        let b = random_mat(&mut rng, n, n);
        prop_assert_eq!(a.matmul(&b).det(), a.det() * b.det());
    }

    #[test]
    fn transpose_preserves_determinant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1usize..=4);
        let a = random_mat(&mut rng, n, n);
        prop_assert_eq!(a.transpose().det(), a.det());
    }
}

#[test]
fn larger_exact_system_stays_consistent() {
    // n = 8 on ten atoms: the moment matrix entries grow quickly, the
    // fraction-free elimination must still give the same average as
    // the Gram-determinant oracle.
    use mopkit_core::averages::avg_char;
    use mopkit_core::oracles::oracle_andreief;
    use mopkit_core::{DiscreteMeasure, EnsembleSpec, MultiIndexPair, Weights};

    let nodes: Vec<Rat> = (0..10).map(|k| Rat::from_fraction(2 * k - 9, 2)).collect();
    let masses: Vec<Rat> = (1..=10).map(|k| Rat::from_fraction(k, 55)).collect();
    let measure = DiscreteMeasure::new(nodes, masses).unwrap();
    let pair = MultiIndexPair::new(vec![8], vec![8]).unwrap();
    let spec = EnsembleSpec::new(Weights::units(1, 1), measure, pair).unwrap();
    assert!(spec.is_normal(spec.pair()).unwrap());
    let y = Rat::from_fraction(13, 2);
    let formula = avg_char(&spec, &y).unwrap();
    let gram = oracle_andreief(&spec, &[y], &[]).unwrap();
    assert_eq!(formula, gram);
}

#[test]
fn cauchy_vandermonde_random_instances() {
    use mopkit_core::oracles::{cauchy_vandermonde, cauchy_vandermonde_matrix};
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x44);
    let mut checked = 0;
    while checked < 20 {
        let n = rng.gen_range(0usize..=4);
        let m = rng.gen_range(0usize..=(6 - n).min(3));
        if n + m == 0 {
            continue;
        }
        let mut pool: Vec<Rat> = Vec::new();
        while pool.len() < n + 2 * m {
            let v = random_rat(&mut rng);
            if !pool.contains(&v) {
                pool.push(v);
            }
        }
        let xs: Vec<Rat> = pool[..n + m].to_vec();
        let zs: Vec<Rat> = pool[n + m..].to_vec();
        let closed = cauchy_vandermonde(&xs, &zs).unwrap();
        let brute = cauchy_vandermonde_matrix(&xs, &zs, n).det();
        assert_eq!(closed, brute, "n = {}, m = {}", n, m);
        checked += 1;
    }
}
