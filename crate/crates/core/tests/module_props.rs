use std::sync::Arc;

use hamlie_core::hamiltonian::BracketOutcome;
use hamlie_core::reps::fundamental_rep;
use hamlie_core::symplectic::bar_pairing_int;
use hamlie_core::{GradedVector, ModuleParams, Representation, Scalar, ShenLarssonModule, SpAlgebra};
use proptest::prelude::*;

/// `(n, which rep)`: 0 natural, 1 Sym², 2 V(δ₂).
fn module(n: usize, which: u8, seed: u64) -> ShenLarssonModule {
    let alg = Arc::new(SpAlgebra::new(n).unwrap());
    let natural = Representation::natural(alg.clone());
    let rep = match which {
        0 => natural,
        1 => natural.symmetric_power(2).unwrap(),
        _ => fundamental_rep(&alg, 2).unwrap(),
    };
    let mut rng = hamlie_core::sampling::rng(seed);
    let alpha = hamlie_core::sampling::rational_vector(&mut rng, 2 * n, 5);
    let beta = hamlie_core::sampling::rational_vector(&mut rng, 2 * n, 5);
    ShenLarssonModule::new(ModuleParams::new(Arc::new(rep), alpha, beta).unwrap())
}

fn setup() -> impl Strategy<Value = (usize, u8, u64)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), if n >= 2 { 0u8..=2 } else { 0u8..=1 }, any::<u64>()))
}

fn lattice(n: usize, nonzero: bool) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 2 * n).prop_filter("nonzero", move |v| !nonzero || v.iter().any(|&c| c != 0))
}

fn case() -> impl Strategy<Value = (ShenLarssonModule, Vec<i64>, Vec<i64>, GradedVector)> {
    setup().prop_flat_map(|(n, which, seed)| {
        let m = module(n, which, seed);
        let dim = m.rep().dim();
        (
            Just(m),
            lattice(n, true),
            lattice(n, true),
            lattice(n, false),
            proptest::collection::vec(-4i64..=4, dim),
        )
            .prop_map(|(m, r, s, g, p)| (m, r, s, GradedVector::new(g, hamlie_core::symplectic::int_vector(&p))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_law((m, r, s, x) in case()) {
        let outcome = m.verify_ham_bracket(&r, &s, &x).unwrap();
        prop_assert_eq!(outcome, BracketOutcome::Holds);
    }

    #[test]
    fn grade_additivity((m, r, _s, x) in case()) {
        let y = m.act_h(&r, &x).unwrap();
        let expected: Vec<i64> = x.grade.iter().zip(&r).map(|(a, b)| a + b).collect();
        prop_assert_eq!(y.grade, expected);
        prop_assert_eq!(y.payload.len(), m.rep().dim());
    }

    #[test]
    fn derivations_scale_by_shifted_grade((m, _r, _s, x) in case()) {
        for i in 0..x.grade.len() {
            let y = m.act_d(i, &x).unwrap();
            let c = &Scalar::from_int(x.grade[i]) + &m.params().beta()[i];
            let expected: Vec<Scalar> = x.payload.iter().map(|v| v * &c).collect();
            prop_assert_eq!(&y.grade, &x.grade);
            prop_assert_eq!(y.payload, expected);
        }
    }

    #[test]
    fn hamiltonian_and_derivation_commute_up_to_grade((m, r, _s, x) in case()) {
        // [d_i, H_r] = r_i H_r
        for i in 0..r.len() {
            let a = m.act_d(i, &m.act_h(&r, &x).unwrap()).unwrap();
            let b = m.act_h(&r, &m.act_d(i, &x).unwrap()).unwrap();
            let h = m.act_h(&r, &x).unwrap();
            let lhs: Vec<Scalar> = a.payload.iter().zip(&b.payload).map(|(p, q)| p - q).collect();
            let rhs: Vec<Scalar> = h.payload.iter().map(|v| v * &Scalar::from_int(r[i])).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn opposite_generators_compose_to_grade_preserving_operator() {
    let m = module(2, 0, 7);
    let r = [1, -2, 0, 1];
    let minus: Vec<i64> = r.iter().map(|c| -c).collect();
    assert_eq!(bar_pairing_int(&r, &minus), 0);
    let x = GradedVector::new(vec![0, 1, -1, 2], hamlie_core::symplectic::int_vector(&[1, 0, 2, -1]));
    assert_eq!(m.verify_ham_bracket(&r, &minus, &x).unwrap(), BracketOutcome::Holds);
}
