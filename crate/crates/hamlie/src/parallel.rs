//! Rayon drivers for the per-generator invariance tests and per-seed probe
//! closures. Results are collected in input order, so reports do not depend
//! on the schedule.

use hamlie_core::submodules::{
    self, assemble_probe_report, probe_one, probe_seeds, GeneratorSet, InvarianceChecker, InvarianceStrategy,
    LatticeBox, ProbeOptions, ProbeOutcome, TruncatedModule,
};
use hamlie_core::{CheckReport, Error, ModuleParams, ShenLarssonModule};
use rayon::prelude::*;

/// Runs `f` on a pool of `threads` workers (rayon's default when `None`).
pub fn install<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

pub fn invariance_check(
    family: &TruncatedModule,
    gens: &GeneratorSet,
    strategy: InvarianceStrategy,
) -> hamlie_core::Result<CheckReport> {
    let checker = InvarianceChecker::new(family, gens, strategy)?;
    let outcomes = (0..checker.generator_count())
        .into_par_iter()
        .map(|gi| checker.check_generator(gi))
        .collect();
    Ok(checker.report(outcomes))
}

pub fn irreducibility_probe(
    params: &ModuleParams,
    lattice: &LatticeBox,
    gens: &GeneratorSet,
    options: &ProbeOptions,
) -> hamlie_core::Result<ProbeOutcome> {
    if gens.radius() > lattice.radius() {
        return Err(Error::InvalidRadius);
    }
    let module = ShenLarssonModule::with_cache(params.clone(), gens.gens())?;
    let seeds = probe_seeds(params, options.extra_seeds, options.rng_seed);
    let results = seeds
        .par_iter()
        .map(|(label, seed)| probe_one(&module, label, seed, lattice, gens, options.confirm))
        .collect::<hamlie_core::Result<Vec<_>>>()?;
    let (reports, families) = results.into_iter().unzip();
    Ok(ProbeOutcome {
        report: assemble_probe_report(params, lattice, gens, options, reports),
        families,
    })
}

/// The sequential engine, re-exported for comparison in tests.
pub use submodules::irreducibility_probe as irreducibility_probe_sequential;
