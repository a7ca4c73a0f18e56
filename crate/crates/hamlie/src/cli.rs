//! Command-line interface. [`run`] turns parsed arguments into an
//! [`Outcome`]; `main` only prints it and picks the exit code.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use hamlie_core::hamiltonian::{bracket_sweep, verify_shift_isomorphism};
use hamlie_core::reps::{binomial, contraction_theta, fundamental_rep, verify_intertwiner};
use hamlie_core::report::{join, CheckReport, Counterexample};
use hamlie_core::sampling;
use hamlie_core::submodules::{
    build_submodule, claim1_inequality, claim2_sweep, claim2_witness, GeneratorSet, InvarianceStrategy,
    LatticeBox, ProbeOptions, ProbeReport, SeedStatus, SubmoduleKind, Verdict,
};
use hamlie_core::{ModuleParams, Scalar, ShenLarssonModule, SpAlgebra};
use serde_json::Value;

use crate::formats::{self, FormatError, RepJson, TruncatedModuleJson};
use crate::parallel;
use crate::repspec::RepSpec;

#[derive(Debug, Parser)]
#[command(name = "hamlie", version, about = "Exact checks for sp(2n) modules and Shen-Larsson modules over the Hamiltonian Lie algebra")]
#[command(arg_required_else_help = true)]
pub struct Cli {
    /// Print what each subcommand checks and exit
    #[arg(long)]
    pub list_checks: bool,
    /// Cap on worker threads; results never depend on it
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print the JSON report on stdout instead of the summary
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    /// Rank n of sp(2n); lattice vectors have 2n entries
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// natural, trivial, fundamental:k, sym:k, exterior:k or file:path
    #[arg(long, default_value = "natural")]
    pub rep: RepSpec,
    /// Comma-separated rationals such as 1/3,0,0,0 (default all zero)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Comma-separated rationals (default all zero)
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// Number of random samples (each subcommand has its own default)
    #[arg(long)]
    pub samples: Option<usize>,
    /// RNG seed, decimal or 0x-prefixed hex
    #[arg(long, default_value = "0xC0FFEE", value_parser = parse_seed)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BoxArgs {
    /// Box radius: grades s with every |s_i| at most this
    #[arg(long = "box", default_value_t = 3)]
    pub box_radius: i64,
    /// Generator radius: H_r with 0 < max |r_i| at most this
    #[arg(long, default_value_t = 2)]
    pub gens: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// sp(2n) basis closure, symplectic condition and r r̄ᵗ membership
    SpCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Build a representation and emit it as JSON
    RepBuild {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "natural")]
        rep: RepSpec,
    },
    /// Equivariance and kernel dimension of the contraction maps
    ThetaCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Only this degree (default every 2 ≤ k ≤ n)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Dimensions, irreducibility and highest weights of V(δ_k)
    DimCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Random samples of [H_r, H_s] = (r̄, s) H_{r+s}
    HamBracket {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "natural")]
        rep: RepSpec,
        /// Coordinate bound for r, s and grades
        #[arg(long, default_value_t = 3)]
        radius: i64,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Expansion of g₁(s) in the sp(2n) basis
    G1Check {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Quartic coefficient table of g₂(s), plus evaluations
    G2Table {
        #[command(flatten)]
        module: ModuleArgs,
        /// Lattice vector r (default random)
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        /// Grade k (default random)
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Closed forms of H_{e_i}, H_{e_{n+i}} and H_{e_i+e_{n+j}}
    NamedActions {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Shift isomorphism between parameters (α, β) and (α+γ, β+γ)
    ShiftIso {
        #[command(flatten)]
        module: ModuleArgs,
        /// Integer shift γ (default e_1)
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Build an explicit submodule family and check it is invariant
    SubmoduleCheck {
        /// trivial_line, delta1 or deltak
        kind: SubmoduleKind,
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        bounds: BoxArgs,
        /// auto, exhaustive or reduced
        #[arg(long, default_value = "auto", value_parser = parse_strategy)]
        strategy: InvarianceStrategy,
        /// Write the family as JSON
        #[arg(long)]
        save_family: Option<PathBuf>,
    },
    /// Nonzero elements of W_r^k ∩ Ker θ_k (random sweep, or one instance with --r)
    Claim2Witness {
        /// Largest rank in the sweep, or the rank of the single instance
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// C(2n,k) − C(2n,k−2) > C(2n−1,k−1) for 2 ≤ k ≤ n ≤ N
    Claim1Ineq {
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Closure of grade-0 seeds on a box: FULL, PROPER or INCONCLUSIVE
    Probe {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        bounds: BoxArgs,
        /// Random seeds on top of the basis vectors
        #[arg(long, default_value_t = 4)]
        extra_seeds: usize,
        /// Skip rerunning deficient seeds on a box one larger
        #[arg(long)]
        no_confirm: bool,
        #[arg(long, default_value = "0xC0FFEE", value_parser = parse_seed)]
        seed: u64,
    },
}

/// What each subcommand checks.
pub const CHECKS: &[(&str, &str)] = &[
    ("sp-check", "sp(2n) basis brackets stay in the span; basis matrices preserve the form; r r̄ᵗ lies in sp(2n)"),
    ("rep-build", "a representation satisfies the bracket relations; JSON round trip"),
    ("theta-check", "θ_k is sp(2n)-equivariant; dim Ker θ_k = C(2n,k) − C(2n,k−2)"),
    ("dim-check", "V(δ_k) has the stated dimension, is irreducible, and has highest weight δ_k"),
    ("ham-bracket", "[H_r, H_s] = (r̄, s) H_{r+s} on the module, for random α"),
    ("g1-check", "degree-2 and linear parts of g₁(s) and its values agree with the action"),
    ("g2-table", "quartic coefficients of g₂(s) match the closed-form table; values match H_{r−s} H_s"),
    ("named-actions", "closed forms of H_{e_i}, H_{e_{n+i}}, H_{e_i+e_{n+j}}"),
    ("shift-iso", "v ⊗ t^r ↦ v ⊗ t^{r−γ} intertwines (α, β) with (α+γ, β+γ)"),
    ("submodule-check", "the line at −α, span{r+α}, and W_r^k ∩ Ker θ_k families are invariant with the stated dimensions"),
    ("claim2-witness", "W_r^k ∩ Ker θ_k ≠ 0 via iterated L(v) = v^⊥ ∩ v̄^⊥"),
    ("claim1-ineq", "dim V(δ_k) > C(2n−1, k−1)"),
    ("probe", "irreducibility evidence (FULL) or a reducibility certificate (PROPER) on a finite box"),
];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] hamlie_core::Error),
}

/// A finished subcommand.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub success: bool,
}

impl Outcome {
    fn from_report(report: &CheckReport) -> Self {
        Self {
            report: serde_json::to_value(report).expect("reports serialize"),
            summary: summarize(report),
            success: report.passed(),
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("`{s}`: {e}"))
}

fn parse_strategy(s: &str) -> Result<InvarianceStrategy, String> {
    match s {
        "auto" => Ok(InvarianceStrategy::Auto),
        "exhaustive" => Ok(InvarianceStrategy::Exhaustive),
        "reduced" => Ok(InvarianceStrategy::Reduced),
        _ => Err(format!("`{s}`: expected auto, exhaustive or reduced")),
    }
}

/// Comma-separated exact rationals; floats are rejected.
pub fn parse_rationals(name: &str, s: &str, len: usize) -> Result<Vec<Scalar>, CliError> {
    let v = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<Scalar>()
                .map_err(|e| CliError::Usage(format!("--{name}: `{}`: {e}", x.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_len(name, v.len(), len)?;
    Ok(v)
}

pub fn parse_lattice(name: &str, s: &str, len: usize) -> Result<Vec<i64>, CliError> {
    let v = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| CliError::Usage(format!("--{name}: `{}`: {e}", x.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_len(name, v.len(), len)?;
    Ok(v)
}

fn check_len(name: &str, found: usize, len: usize) -> Result<(), CliError> {
    if found != len {
        return Err(CliError::Usage(format!("--{name} has {found} entries, expected 2n = {len}")));
    }
    Ok(())
}

fn algebra(n: usize) -> Result<Arc<SpAlgebra>, CliError> {
    if n == 0 {
        return Err(CliError::Usage(String::from("--n must be at least 1")));
    }
    Ok(Arc::new(SpAlgebra::new(n)?))
}

impl ModuleArgs {
    pub fn params(&self) -> Result<ModuleParams, CliError> {
        let alg = algebra(self.n)?;
        let rep = Arc::new(self.rep.resolve(&alg)?);
        let big = 2 * self.n;
        let vector = |name: &str, v: &Option<String>| match v {
            Some(s) => parse_rationals(name, s, big),
            None => Ok(vec![Scalar::ZERO; big]),
        };
        Ok(ModuleParams::new(rep, vector("alpha", &self.alpha)?, vector("beta", &self.beta)?)?)
    }
}

fn lattice_and_gens(params: &ModuleParams, b: &BoxArgs) -> Result<(LatticeBox, GeneratorSet), CliError> {
    let usage = |what: &str| CliError::Usage(format!("--{what} must be at least 1"));
    let lattice = LatticeBox::new(params.lattice_dim(), b.box_radius).map_err(|_| usage("box"))?;
    let gens = GeneratorSet::new(params.lattice_dim(), b.gens).map_err(|_| usage("gens"))?;
    Ok((lattice, gens))
}

/// Human-readable rendering of a report.
pub fn summarize(report: &CheckReport) -> String {
    let mut s = String::new();
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let _ = write!(s, "{}: {verdict}", report.check);
    if report.samples > 0 {
        let _ = write!(s, " ({}/{} samples)", report.passes, report.samples);
    }
    s.push('\n');
    for (k, v) in &report.params {
        let _ = writeln!(s, "  {k} = {v}");
    }
    for e in &report.entries {
        let _ = writeln!(s, "  [{}] {}", if e.passed { "ok" } else { "FAIL" }, e.label);
    }
    for f in report.failures.iter().take(5) {
        let _ = writeln!(s, "  counterexample: {}", describe_counterexample(f));
    }
    if report.failures.len() > 5 {
        let _ = writeln!(s, "  ... {} more counterexamples in the JSON report", report.failures.len() - 5);
    }
    s
}

fn describe_counterexample(c: &Counterexample) -> String {
    let mut parts = Vec::new();
    if let Some(r) = &c.r {
        parts.push(format!("r=({})", join(r)));
    }
    if let Some(s) = &c.s {
        parts.push(format!("s=({})", join(s)));
    }
    if let Some(g) = &c.grade {
        parts.push(format!("grade=({})", join(g)));
    }
    if let Some(p) = &c.payload {
        parts.push(format!("v=({})", join(p)));
    }
    if let Some(a) = &c.alpha {
        parts.push(format!("alpha=({})", join(a)));
    }
    parts.push(c.detail.clone());
    parts.join(" ")
}

fn summarize_probe(report: &ProbeReport) -> String {
    let mut s = format!(
        "probe: {} (box {}, gens {}, inner radius {}, dim V = {})\n",
        report.verdict, report.box_radius, report.gen_radius, report.inner_radius, report.dim
    );
    for seed in &report.seeds {
        let hist: Vec<String> = seed.histogram.iter().map(|(d, c)| format!("{c}x dim {d}")).collect();
        let status = match seed.status {
            SeedStatus::Full => "full",
            SeedStatus::Proper => "proper",
            SeedStatus::Unstable => "unstable",
            SeedStatus::ZeroInner => "zero on inner box",
        };
        let _ = writeln!(s, "  {:<10} {status:<18} {}", seed.label, hist.join(", "));
    }
    let _ = writeln!(s, "  note: {}", report.note);
    s
}

/// Prints the check table used by `--list-checks`.
pub fn list_checks() -> String {
    let width = CHECKS.iter().map(|(c, _)| c.len()).max().unwrap_or(0);
    CHECKS
        .iter()
        .map(|(c, d)| format!("{c:<width$}  {d}\n"))
        .collect()
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let Some(command) = &cli.command else {
        return Err(CliError::Usage(String::from("missing subcommand (see --help)")));
    };
    parallel::install(cli.threads, || run_command(command))
}

fn run_command(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::SpCheck { n, sampling } => sp_check(*n, sampling),
        Command::RepBuild { n, rep } => {
            let alg = algebra(*n)?;
            let built = rep.resolve(&alg)?;
            let violations = built.bracket_violations();
            let json = formats::rep_to_string(&built);
            let back = formats::rep_from_str(&json, Some(alg))?;
            let mut summary = format!(
                "rep-build: {rep}, n = {n}, dim {}, irreducible: {}\n",
                built.dim(),
                built.is_irreducible()
            );
            for (label, w) in built.labels().iter().zip(built.weights()) {
                let _ = writeln!(summary, "  {label:<16} weight ({})", join(w));
            }
            let success = violations.is_empty() && back == built;
            if !success {
                let _ = writeln!(summary, "  FAIL: bracket violations {violations:?}");
            }
            Ok(Outcome {
                report: serde_json::to_value(RepJson::from(&built)).expect("serializes"),
                summary,
                success,
            })
        }
        Command::ThetaCheck { n, k } => theta_check(*n, *k),
        Command::DimCheck { n } => dim_check(*n),
        Command::HamBracket {
            n,
            rep,
            radius,
            sampling,
        } => {
            let alg = algebra(*n)?;
            let rep = Arc::new(rep.resolve(&alg)?);
            let mut rng = sampling::rng(sampling.seed);
            let report = bracket_sweep(&rep, &mut rng, sampling.samples.unwrap_or(500), *radius)?;
            Ok(Outcome::from_report(&report.param("seed", sampling.seed)))
        }
        Command::G1Check { module, sampling } => {
            let params = module.params()?;
            let m = ShenLarssonModule::new(params.clone());
            let mut rng = sampling::rng(sampling.seed);
            let mut report = CheckReport::new("g1-check").param("seed", sampling.seed);
            for _ in 0..sampling.samples.unwrap_or(10) {
                let r = sampling::nonzero_int_vector(&mut rng, params.lattice_dim(), 3);
                report.merge(m.verify_g1_expansion(&r, &mut rng, 3)?);
            }
            Ok(Outcome::from_report(&params.describe(report)))
        }
        Command::G2Table {
            module,
            r,
            k,
            sampling,
        } => {
            let params = module.params()?;
            let big = params.lattice_dim();
            let mut rng = sampling::rng(sampling.seed);
            let r = match r {
                Some(s) => parse_lattice("r", s, big)?,
                None => sampling::nonzero_int_vector(&mut rng, big, 3),
            };
            let k = match k {
                Some(s) => parse_lattice("k", s, big)?,
                None => sampling::int_vector(&mut rng, big, 3),
            };
            let m = ShenLarssonModule::new(params);
            let mut report = m.verify_g2_table(&r, &k)?;
            report.merge(m.verify_g2_evaluations(&r, &k, &mut rng, sampling.samples.unwrap_or(5))?);
            Ok(Outcome::from_report(&report.param("seed", sampling.seed)))
        }
        Command::NamedActions { module, sampling } => {
            let params = module.params()?;
            let mut rng = sampling::rng(sampling.seed);
            let report =
                ShenLarssonModule::new(params).verify_named_actions(&mut rng, sampling.samples.unwrap_or(100))?;
            Ok(Outcome::from_report(&report.param("seed", sampling.seed)))
        }
        Command::ShiftIso {
            module,
            gamma,
            sampling,
        } => {
            let params = module.params()?;
            let big = params.lattice_dim();
            let gamma = match gamma {
                Some(s) => parse_lattice("gamma", s, big)?,
                None => (0..big).map(|i| i64::from(i == 0)).collect(),
            };
            let mut rng = sampling::rng(sampling.seed);
            let report = verify_shift_isomorphism(&params, &gamma, &mut rng, sampling.samples.unwrap_or(100))?;
            Ok(Outcome::from_report(&report.param("seed", sampling.seed)))
        }
        Command::SubmoduleCheck {
            kind,
            module,
            bounds,
            strategy,
            save_family,
        } => {
            let params = module.params()?;
            let (lattice, gens) = lattice_and_gens(&params, bounds)?;
            let family = build_submodule(*kind, &params, &lattice)?;
            let mut report = parallel::invariance_check(&family, &gens, *strategy)?;
            report.check = String::from("submodule-check");
            report = report.param("kind", kind).param("rep", &module.rep);
            record_dimension_bounds(&mut report, *kind, &family);
            if let Some(path) = save_family {
                let json = TruncatedModuleJson::new(&family, &module.rep.to_string());
                formats::write_atomic(path, &formats::to_json(&json))?;
            }
            Ok(Outcome::from_report(&report))
        }
        Command::Claim2Witness {
            n,
            r,
            alpha,
            k,
            sampling,
        } => match r {
            None => {
                let mut rng = sampling::rng(sampling.seed);
                let report = claim2_sweep(&mut rng, sampling.samples.unwrap_or(200), *n)?;
                Ok(Outcome::from_report(&report.param("seed", sampling.seed)))
            }
            Some(r) => {
                let alg = algebra(*n)?;
                let big = 2 * n;
                let r = parse_lattice("r", r, big)?;
                let alpha = match alpha {
                    Some(a) => parse_rationals("alpha", a, big)?,
                    None => vec![Scalar::ZERO; big],
                };
                let u: Vec<Scalar> = r.iter().zip(&alpha).map(|(&x, a)| a + &Scalar::from_int(x)).collect();
                let w = claim2_witness(&alg, &u, *k)?;
                let mut summary = format!("claim2-witness: n = {n}, k = {k}, u = r + α = ({})\n", join(&u));
                for (i, f) in w.factors.iter().enumerate() {
                    let _ = writeln!(summary, "  factor {}: ({})", i + 1, join(f));
                }
                let _ = writeln!(summary, "  wedge: ({})", join(&w.wedge));
                Ok(Outcome {
                    report: serde_json::to_value(&w).expect("serializes"),
                    summary,
                    success: true,
                })
            }
        },
        Command::Claim1Ineq { n } => Ok(Outcome::from_report(&claim1_inequality(*n)?)),
        Command::Probe {
            module,
            bounds,
            extra_seeds,
            no_confirm,
            seed,
        } => {
            let params = module.params()?;
            let (lattice, gens) = lattice_and_gens(&params, bounds)?;
            let options = ProbeOptions {
                extra_seeds: *extra_seeds,
                rng_seed: *seed,
                confirm: !no_confirm,
            };
            let mut outcome = parallel::irreducibility_probe(&params, &lattice, &gens, &options)?;
            outcome
                .report
                .params
                .insert(String::from("rep"), module.rep.to_string());
            Ok(Outcome {
                report: serde_json::to_value(&outcome.report).expect("serializes"),
                summary: summarize_probe(&outcome.report),
                success: outcome.report.verdict != Verdict::Inconclusive,
            })
        }
    }
}

fn sp_check(n: usize, sampling: &SampleArgs) -> Result<Outcome, CliError> {
    let alg = algebra(n)?;
    let samples = sampling.samples.unwrap_or(1000);
    let mut report = CheckReport::new("sp-check")
        .param("n", n)
        .param("dim", alg.dim())
        .param("seed", sampling.seed);
    report.record_entry(String::from("basis brackets lie in the span"), alg.verify_closure().is_ok());
    let bad: Vec<String> = alg
        .labels()
        .iter()
        .zip(alg.matrices())
        .filter(|(_, m)| !alg.is_symplectic(m))
        .map(|(g, _)| g.to_string())
        .collect();
    report.record_entry(
        if bad.is_empty() {
            String::from("every basis matrix satisfies MᵗJ + JM = 0")
        } else {
            format!("symplectic condition fails for {}", bad.join(", "))
        },
        bad.is_empty(),
    );
    let mut rng = sampling::rng(sampling.seed);
    for _ in 0..samples {
        let r = sampling::nonzero_int_vector(&mut rng, 2 * n, 5);
        let u = hamlie_core::symplectic::int_vector(&r);
        let m = alg.rank_one(&u)?;
        match alg.decompose(&m) {
            Ok(c) if alg.combine(&c) == m => report.record_pass(),
            _ => report.record_failure(Counterexample {
                r: Some(r),
                detail: String::from("r r̄ᵗ is not in the span of the sp(2n) basis"),
                ..Counterexample::default()
            }),
        }
    }
    Ok(Outcome::from_report(&report))
}

fn theta_check(n: usize, only: Option<usize>) -> Result<Outcome, CliError> {
    let alg = algebra(n)?;
    let degrees: Vec<usize> = match only {
        Some(k) if (2..=n).contains(&k) => vec![k],
        Some(k) => return Err(CliError::Usage(format!("--k {k}: need 2 ≤ k ≤ n = {n}"))),
        None => (2..=n).collect(),
    };
    let mut report = CheckReport::new("theta-check").param("n", n);
    for k in degrees {
        let theta = contraction_theta(&alg, k)?;
        let bad = verify_intertwiner(&theta)?;
        report.record_entry(
            if bad.is_empty() {
                format!("k={k}: θ_k commutes with every basis element")
            } else {
                format!("k={k}: θ_k fails to commute with {}", join(&bad))
            },
            bad.is_empty(),
        );
        let kernel = hamlie_core::linalg::nullspace(&theta.matrix).dim();
        let expected = expected_fundamental_dim(n, k);
        report.record_entry(
            format!("k={k}: dim Ker θ_k = {kernel}, C(2n,k) − C(2n,k−2) = {expected}"),
            kernel as u128 == expected,
        );
    }
    Ok(Outcome::from_report(&report))
}

/// `C(2n,k) − C(2n,k−2)`, which is `1` for `k = 0` and `2n` for `k = 1`.
pub fn expected_fundamental_dim(n: usize, k: usize) -> u128 {
    let b = |k: usize| binomial(2 * n as u64, k as u64).expect("small binomial");
    b(k) - if k >= 2 { b(k - 2) } else { 0 }
}

fn dim_check(n: usize) -> Result<Outcome, CliError> {
    let alg = algebra(n)?;
    let mut report = CheckReport::new("dim-check").param("n", n);
    for k in 0..=n {
        let rep = fundamental_rep(&alg, k)?;
        let expected = expected_fundamental_dim(n, k);
        report.record_entry(
            format!("k={k}: dim V(δ_k) = {}, expected {expected}", rep.dim()),
            rep.dim() as u128 == expected,
        );
        report.record_entry(format!("k={k}: V(δ_k) is irreducible"), rep.is_irreducible());
        let weights: Vec<Vec<i64>> = rep.highest_weight_vectors().into_iter().map(|(_, w)| w).collect();
        let delta = alg.fundamental_weight(k);
        report.record_entry(
            format!("k={k}: highest weight ({}) only", join(&delta)),
            weights == [delta],
        );
    }
    Ok(Outcome::from_report(&report))
}

/// Records the dimension statements for each family kind and the observed
/// dimension histogram.
fn record_dimension_bounds(report: &mut CheckReport, kind: SubmoduleKind, family: &hamlie_core::submodules::TruncatedModule) {
    let params = family.params();
    let dim = params.rep().dim();
    let minus_alpha: Option<Vec<i64>> = params.integral_alpha().map(|a| a.iter().map(|x| -x).collect());
    let mut histogram = std::collections::BTreeMap::<usize, usize>::new();
    let mut bad = Vec::new();
    for (g, space) in family.lattice().grades().zip(family.spaces()) {
        let d = space.dim();
        *histogram.entry(d).or_default() += 1;
        let at_minus_alpha = minus_alpha.as_ref() == Some(&g);
        let ok = match kind {
            SubmoduleKind::TrivialLine => d == usize::from(at_minus_alpha),
            SubmoduleKind::Delta1 => d == usize::from(!at_minus_alpha),
            SubmoduleKind::DeltaK if at_minus_alpha => d == dim,
            SubmoduleKind::DeltaK => d > 0 && d < dim,
        };
        if !ok {
            bad.push(format!("({}) has dim {d}", join(&g)));
        }
    }
    let rule = match kind {
        SubmoduleKind::TrivialLine => "dim 1 at −α, 0 elsewhere",
        SubmoduleKind::Delta1 => "dim 1 except 0 at −α",
        SubmoduleKind::DeltaK => "0 < dim < dim V where r + α ≠ 0, all of V at −α",
    };
    let label = if bad.is_empty() {
        format!("{rule}: holds at all {} grades", family.spaces().len())
    } else {
        format!("{rule}: fails at {}", bad.iter().take(5).cloned().collect::<Vec<_>>().join("; "))
    };
    report.record_entry(label, bad.is_empty());
    let hist: Vec<String> = histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    report.params.insert(String::from("observed_dims"), hist.join(","));
}

#[cfg(test)]
mod tests {
    use super::*;
    use hamlie_core::sampling::DEFAULT_SEED;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
        run(&cli)
    }

    #[test]
    fn vectors_parse_exactly() {
        assert_eq!(
            parse_rationals("alpha", "1/3, 0,-2/4,5", 4).unwrap(),
            vec![Scalar::new(1, 3).unwrap(), Scalar::ZERO, Scalar::new(-1, 2).unwrap(), Scalar::from_int(5)]
        );
        assert!(parse_rationals("alpha", "0.5,0", 2).is_err());
        assert!(parse_rationals("alpha", "1,0,0", 2).is_err());
        assert!(parse_lattice("r", "1,x", 2).is_err());
        assert_eq!(parse_seed("0xC0FFEE").unwrap(), DEFAULT_SEED);
        assert_eq!(parse_seed("17").unwrap(), 17);
    }

    #[test]
    fn small_commands_pass() {
        for args in [
            &["hamlie", "sp-check", "--n", "2", "--samples", "50"][..],
            &["hamlie", "theta-check", "--n", "2"],
            &["hamlie", "dim-check", "--n", "2"],
            &["hamlie", "claim1-ineq", "--n", "4"],
            &["hamlie", "g2-table", "--n", "1", "--rep", "natural"],
            &["hamlie", "named-actions", "--n", "1", "--alpha", "1/2,-1/3", "--samples", "10"],
            &["hamlie", "submodule-check", "trivial_line", "--n", "1", "--rep", "trivial", "--alpha", "1,0"],
            &["hamlie", "claim2-witness", "--n", "2", "--r", "1,0,0,0"],
        ] {
            let out = run_args(args).unwrap();
            assert!(out.success, "{args:?}\n{}", out.summary);
        }
    }

    #[test]
    fn bad_input_is_a_usage_error() {
        assert!(matches!(run_args(&["hamlie", "probe", "--n", "1", "--alpha", "1/2"]), Err(CliError::Usage(_))));
        assert!(run_args(&["hamlie", "probe", "--n", "1", "--rep", "bogus"]).is_err());
        let err = run_args(&["hamlie", "submodule-check", "deltak", "--n", "2", "--rep", "natural"]).unwrap_err();
        assert!(err.to_string().contains("deltak"), "{err}");
    }
}
