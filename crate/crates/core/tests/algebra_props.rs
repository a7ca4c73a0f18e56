use std::collections::BTreeMap;
use std::sync::Arc;

use hamlie_core::linalg::{nullspace, rank, rref};
use hamlie_core::reps::{binomial, contraction_theta, fundamental_rep};
use hamlie_core::symplectic::{bar, int_vector, pairing, positive_roots, root_height};
use hamlie_core::{Scalar, SparseMatrix, SpAlgebra, Subspace};
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = SparseMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
            let rows: Vec<_> = xs.chunks(c).map(int_vector).collect();
            SparseMatrix::from_dense(&rows, c)
        })
    })
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, ambient), 0..=ambient)
        .prop_map(move |vs| Subspace::from_vectors(ambient, vs.iter().map(|v| int_vector(v)).collect()).unwrap())
}

fn rational_vector(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), len)
        .prop_map(|v| v.into_iter().map(|(p, q)| hamlie_core::scalar::q(p, q)).collect())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in small_matrix(5, 6)) {
        let (once, r1) = rref(&m);
        let (twice, r2) = rref(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn rank_nullity(m in small_matrix(5, 6)) {
        prop_assert_eq!(rank(&m) + nullspace(&m).dim(), m.cols());
    }

    #[test]
    fn modular_dimension_law(a in subspace(5), b in subspace(5)) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a).unwrap() && a.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn bar_pairing_antisymmetric(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = hamlie_core::sampling::rng(seed);
        let r = hamlie_core::sampling::rational_vector(&mut rng, 2 * n, 7);
        let s = hamlie_core::sampling::rational_vector(&mut rng, 2 * n, 7);
        let rs = pairing(&bar(&r), &s).unwrap();
        let sr = pairing(&bar(&s), &r).unwrap();
        prop_assert_eq!(rs, -sr);
        prop_assert_eq!(pairing(&bar(&r), &r).unwrap(), Scalar::ZERO);
    }

    #[test]
    fn rank_one_lies_in_sp(u in (1usize..=4).prop_flat_map(|n| rational_vector(2 * n))) {
        let alg = SpAlgebra::new(u.len() / 2).unwrap();
        let m = alg.rank_one(&u).unwrap();
        prop_assert!(alg.is_symplectic(&m));
        let c = alg.decompose(&m).unwrap();
        prop_assert_eq!(alg.combine(&c), m);
    }
}

#[test]
fn heights_match_closed_forms() {
    for n in 1..=10usize {
        for root in positive_roots(n) {
            let d = root_height(&root, n).unwrap();
            let nz: Vec<usize> = (0..n).filter(|&i| root[i] != 0).collect();
            let expected = match (nz.as_slice(), root[nz[0]]) {
                // ε_i − ε_j
                ([i, j], 1) if root[*j] == -1 => (j - i) as i64,
                // ε_i + ε_j, 1-based: 2n − (i + j) + 1
                ([i, j], 1) => (2 * n - (i + j + 2) + 1) as i64,
                // 2ε_i
                ([i], 2) => (2 * n - 2 * (i + 1) + 1) as i64,
                _ => panic!("unexpected root {root:?}"),
            };
            assert_eq!(d.height, expected, "n={n}, {root:?}");
            assert!(d.height >= 1);
        }
    }
}

#[test]
fn fundamental_dims_and_theta_rank() {
    for n in 2..=4usize {
        let alg = Arc::new(SpAlgebra::new(n).unwrap());
        let big = 2 * n as u64;
        for k in 2..=n {
            let rep = fundamental_rep(&alg, k).unwrap();
            let expected = binomial(big, k as u64).unwrap() - binomial(big, k as u64 - 2).unwrap();
            assert_eq!(rep.dim() as u128, expected, "n={n}, k={k}");
            let theta = contraction_theta(&alg, k).unwrap();
            assert_eq!(rank(&theta.matrix) as u128, binomial(big, k as u64 - 2).unwrap());
        }
    }
}

#[test]
fn fundamental_weights_symmetric_under_sign_changes() {
    for n in 2..=3usize {
        let alg = Arc::new(SpAlgebra::new(n).unwrap());
        for k in 2..=n {
            let rep = fundamental_rep(&alg, k).unwrap();
            let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
            for w in rep.weights() {
                *counts.entry(w.clone()).or_default() += 1;
            }
            for i in 0..n {
                for (w, c) in &counts {
                    let mut flipped = w.clone();
                    flipped[i] = -flipped[i];
                    assert_eq!(counts.get(&flipped), Some(c), "n={n}, k={k}, weight {w:?}");
                }
            }
        }
    }
}

#[test]
fn constructed_reps_preserve_brackets() {
    for n in 1..=3usize {
        let alg = Arc::new(SpAlgebra::new(n).unwrap());
        let natural = hamlie_core::Representation::natural(alg.clone());
        let mut reps = vec![natural.clone(), natural.symmetric_power(2).unwrap(), natural.exterior_power(2).unwrap()];
        if n >= 2 {
            reps.push(fundamental_rep(&alg, 2).unwrap());
        }
        for rep in reps {
            assert!(rep.bracket_violations().is_empty(), "n={n}, dim {}", rep.dim());
        }
    }
}
