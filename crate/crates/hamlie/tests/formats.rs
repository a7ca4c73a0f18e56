use std::sync::Arc;

use hamlie::formats::{self, FormatError, TruncatedModuleJson};
use hamlie::parallel;
use hamlie_core::reps::fundamental_rep;
use hamlie_core::scalar::q;
use hamlie_core::submodules::{
    build_submodule, invariance_check, GeneratorSet, InvarianceStrategy, LatticeBox, ProbeOptions, SubmoduleKind,
};
use hamlie_core::{ModuleParams, Representation, Scalar, SpAlgebra};

fn alg(n: usize) -> Arc<SpAlgebra> {
    Arc::new(SpAlgebra::new(n).unwrap())
}

#[test]
fn rep_files_round_trip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let a = alg(2);
    for rep in [Representation::natural(a.clone()), fundamental_rep(&a, 2).unwrap()] {
        let path = dir.path().join(format!("rep{}.json", rep.dim()));
        formats::serialize_rep(&rep, &path).unwrap();
        let back = formats::deserialize_rep(&path, None).unwrap();
        assert_eq!(back.dim(), rep.dim());
        assert_eq!(back.action(), rep.action());
        assert_eq!(formats::rep_to_string(&back), std::fs::read_to_string(&path).unwrap());
    }
}

#[test]
fn corrupted_rep_files_name_the_problem() {
    let a = alg(1);
    let good = formats::rep_to_string(&Representation::natural(a));
    assert!(matches!(formats::rep_from_str(&good[..good.len() - 10], None), Err(FormatError::Json(_))));

    let bad = good.replacen("\"dim\": 2", "\"dim\": 3", 1);
    assert_ne!(bad, good);
    let err = formats::rep_from_str(&bad, None).unwrap_err();
    assert!(matches!(err, FormatError::Field { .. }), "{err}");

    let missing = std::path::Path::new("/nonexistent/rep.json");
    assert!(matches!(formats::deserialize_rep(missing, None), Err(FormatError::Io { .. })));
}

#[test]
fn truncated_module_json_round_trip() {
    let a = alg(2);
    let rep = Arc::new(fundamental_rep(&a, 2).unwrap());
    let alpha = vec![q(1, 3), Scalar::ZERO, Scalar::ZERO, q(-1, 2)];
    let params = ModuleParams::new(rep.clone(), alpha, vec![Scalar::ZERO; 4]).unwrap();
    let lattice = LatticeBox::new(4, 1).unwrap();
    let family = build_submodule(SubmoduleKind::DeltaK, &params, &lattice).unwrap();
    let json = TruncatedModuleJson::new(&family, "fundamental:2");
    let text = formats::to_json(&json);
    let parsed: TruncatedModuleJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, json);
    assert_eq!(parsed.to_family(rep).unwrap(), family);
}

#[test]
fn parallel_invariance_matches_sequential() {
    let a = alg(2);
    let rep = Arc::new(Representation::natural(a));
    let params = ModuleParams::new(rep, vec![q(1, 2), q(1, 5), Scalar::ZERO, Scalar::ZERO], vec![Scalar::ZERO; 4]).unwrap();
    let lattice = LatticeBox::new(4, 2).unwrap();
    let gens = GeneratorSet::new(4, 1).unwrap();
    let family = build_submodule(SubmoduleKind::Delta1, &params, &lattice).unwrap();
    for strategy in [InvarianceStrategy::Exhaustive, InvarianceStrategy::Reduced] {
        let seq = invariance_check(&family, &gens, strategy).unwrap();
        let par = parallel::install(Some(3), || parallel::invariance_check(&family, &gens, strategy).unwrap());
        assert_eq!(formats::to_json(&seq), formats::to_json(&par));
        assert!(seq.passed());
    }
}

#[test]
fn parallel_probe_matches_sequential() {
    let a = alg(1);
    let rep = Arc::new(Representation::natural(a));
    let params = ModuleParams::new(rep, vec![q(1, 2), Scalar::ZERO], vec![Scalar::ZERO; 2]).unwrap();
    let lattice = LatticeBox::new(2, 3).unwrap();
    let gens = GeneratorSet::new(2, 2).unwrap();
    let options = ProbeOptions::default();
    let seq = parallel::irreducibility_probe_sequential(&params, &lattice, &gens, &options).unwrap();
    let par = parallel::install(Some(2), || parallel::irreducibility_probe(&params, &lattice, &gens, &options).unwrap());
    assert_eq!(formats::to_json(&seq.report), formats::to_json(&par.report));
    assert_eq!(seq.families, par.families);
}
