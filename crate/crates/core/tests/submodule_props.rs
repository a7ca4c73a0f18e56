use std::sync::Arc;

use hamlie_core::reps::fundamental_rep;
use hamlie_core::scalar::q;
use hamlie_core::submodules::{
    build_submodule, closure, invariance_check, GeneratorSet, InvarianceStrategy, LatticeBox, SubmoduleKind,
};
use hamlie_core::symplectic::{bar, int_vector, pairing};
use hamlie_core::{GradedVector, ModuleParams, Representation, Scalar, ShenLarssonModule, SpAlgebra};
use proptest::prelude::*;

fn alg(n: usize) -> Arc<SpAlgebra> {
    Arc::new(SpAlgebra::new(n).unwrap())
}

fn params(rep: Representation, alpha: Vec<Scalar>) -> ModuleParams {
    let beta = vec![Scalar::ZERO; alpha.len()];
    ModuleParams::new(Arc::new(rep), alpha, beta).unwrap()
}

fn alpha_strategy(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-3i64..=3, prop_oneof![Just(1i64), Just(2), Just(3), Just(5), Just(7)]), 2 * n)
        .prop_map(|v| v.into_iter().map(|(p, d)| q(p, d)).collect())
}

fn seeds(dim: usize, big: usize) -> impl Strategy<Value = Vec<GradedVector>> {
    let one = (proptest::collection::vec(-1i64..=1, big), proptest::collection::vec(-2i64..=2, dim))
        .prop_map(|(g, p)| GradedVector::new(g, int_vector(&p)));
    proptest::collection::vec(one, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_ignores_seed_order(alpha in alpha_strategy(1), mut xs in seeds(2, 2)) {
        let m = ShenLarssonModule::new(params(Representation::natural(alg(1)), alpha));
        let lattice = LatticeBox::new(2, 2).unwrap();
        let gens = GeneratorSet::new(2, 1).unwrap();
        let a = closure(&m, &xs, &lattice, &gens).unwrap();
        xs.reverse();
        let b = closure(&m, &xs, &lattice, &gens).unwrap();
        prop_assert_eq!(a.spaces(), b.spaces());
    }

    #[test]
    fn closure_is_monotone(alpha in alpha_strategy(1), xs in seeds(2, 2)) {
        let m = ShenLarssonModule::new(params(Representation::natural(alg(1)), alpha));
        let small_box = LatticeBox::new(2, 2).unwrap();
        let big_box = LatticeBox::new(2, 3).unwrap();
        let g1 = GeneratorSet::new(2, 1).unwrap();
        let g2 = GeneratorSet::new(2, 2).unwrap();
        let base = closure(&m, &xs, &small_box, &g1).unwrap();
        let more_gens = closure(&m, &xs, &small_box, &g2).unwrap();
        let more_box = closure(&m, &xs, &big_box, &g1).unwrap();
        prop_assert!(more_gens.contains_family(&base, &small_box).unwrap());
        prop_assert!(more_box.contains_family(&base, &small_box).unwrap());
    }

    #[test]
    fn delta1_closed_form(alpha in alpha_strategy(2), r in proptest::collection::vec(-2i64..=2, 4),
                          s in proptest::collection::vec(-2i64..=2, 4).prop_filter("nonzero", |s| s.iter().any(|&c| c != 0))) {
        // H_s (r+α) ⊗ t^r = (s̄, r+α) (s+r+α) ⊗ t^{r+s}
        let p = params(Representation::natural(alg(2)), alpha.clone());
        let m = ShenLarssonModule::new(p);
        let shifted: Vec<Scalar> = r.iter().zip(&alpha).map(|(a, b)| &Scalar::from_int(*a) + b).collect();
        let y = m.act_h(&s, &GradedVector::new(r.clone(), shifted.clone())).unwrap();
        let c = pairing(&bar(&int_vector(&s)), &shifted).unwrap();
        let expected: Vec<Scalar> = shifted.iter().zip(&s).map(|(v, si)| &c * &(v + &Scalar::from_int(*si))).collect();
        prop_assert_eq!(y.payload, expected);
    }

    #[test]
    fn trivial_line_annihilated(alpha in proptest::collection::vec(-3i64..=3, 4),
                                r in proptest::collection::vec(-3i64..=3, 4).prop_filter("nonzero", |r| r.iter().any(|&c| c != 0))) {
        let p = params(Representation::trivial(alg(2)), int_vector(&alpha));
        let m = ShenLarssonModule::new(p);
        let grade: Vec<i64> = alpha.iter().map(|a| -a).collect();
        let y = m.act_h(&r, &GradedVector::new(grade, vec![Scalar::ONE])).unwrap();
        prop_assert!(y.is_zero());
    }
}

#[test]
fn deltak_dimension_bounds() {
    for (n, k) in [(2usize, 2usize), (3, 2), (3, 3)] {
        let a = alg(n);
        let big = 2 * n;
        let alphas = [
            vec![Scalar::ZERO; big],
            (0..big).map(|i| q(i as i64 % 3 - 1, 2)).collect::<Vec<_>>(),
        ];
        for alpha in alphas {
            let rep = fundamental_rep(&a, k).unwrap();
            let dim = rep.dim();
            let p = params(rep, alpha.clone());
            let lattice = LatticeBox::new(big, 1).unwrap();
            let family = build_submodule(SubmoduleKind::DeltaK, &p, &lattice).unwrap();
            for g in lattice.grades() {
                let d = family.space(&g).unwrap().dim();
                let at_origin = g.iter().zip(&alpha).all(|(x, a)| Scalar::from_int(*x) + a.clone() == Scalar::ZERO);
                if !at_origin {
                    assert!(0 < d && d < dim, "n={n}, k={k}, grade {g:?}: dim {d} of {dim}");
                }
            }
        }
    }
}

#[test]
fn built_families_invariant_for_small_radii() {
    let a = alg(1);
    let alpha = vec![q(1, 2), q(-1, 3)];
    let natural = params(Representation::natural(a.clone()), alpha);
    let trivial = params(Representation::trivial(a), int_vector(&[1, -1]));
    for (kind, p) in [(SubmoduleKind::Delta1, natural), (SubmoduleKind::TrivialLine, trivial)] {
        for box_radius in 2..=4 {
            let lattice = LatticeBox::new(2, box_radius).unwrap();
            let family = build_submodule(kind, &p, &lattice).unwrap();
            for gen_radius in 1..=3 {
                let gens = GeneratorSet::new(2, gen_radius).unwrap();
                let report = invariance_check(&family, &gens, InvarianceStrategy::Exhaustive).unwrap();
                assert!(report.passed(), "{kind} box {box_radius} gens {gen_radius}");
            }
        }
    }
}
