//! Tensor modules `F^{α,β}(V) = V ⊗ Q[t^{±1}]` over the Hamiltonian Lie
//! algebra.
//!
//! `H_r` sends `v ⊗ t^s` to `((r̄, s+α)I + ρ(r r̄ᵗ))v ⊗ t^{r+s}` and `d_i`
//! scales `v ⊗ t^s` by `s_i + β_i`. Every grade carries a full copy of `V`,
//! so a graded vector is just a grade plus a payload in `V`.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vector, scaled, sub_vectors, SparseMatrix, Vector};
use crate::polynomial::{expand_bilinear, monomial, AffineVector, MatrixPolynomial, ScalarPoly};
use crate::report::{join, CheckReport, Counterexample};
use crate::reps::Representation;
use crate::sampling::{self, SampleRng};
use crate::scalar::Scalar;
use crate::symplectic::{bar, bar_pairing_int, bar_pairing_mixed, int_vector, Generator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleParams {
    alpha: Vector,
    beta: Vector,
    rep: Arc<Representation>,
}

impl ModuleParams {
    pub fn new(rep: Arc<Representation>, alpha: Vector, beta: Vector) -> Result<Self> {
        let big = rep.algebra().natural_dim();
        for v in [&alpha, &beta] {
            if v.len() != big {
                return Err(Error::DimensionMismatch {
                    expected: big,
                    found: v.len(),
                });
            }
        }
        Ok(Self { alpha, beta, rep })
    }

    /// `α = β = 0`.
    pub fn untwisted(rep: Arc<Representation>) -> Self {
        let big = rep.algebra().natural_dim();
        Self {
            alpha: vec![Scalar::ZERO; big],
            beta: vec![Scalar::ZERO; big],
            rep,
        }
    }

    pub fn alpha(&self) -> &[Scalar] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Scalar] {
        &self.beta
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn rank(&self) -> usize {
        self.rep.algebra().rank()
    }

    /// `N = 2n`, the number of grade coordinates.
    pub fn lattice_dim(&self) -> usize {
        self.alpha.len()
    }

    /// `α` as an integer vector if it lies in `Z^N`.
    pub fn integral_alpha(&self) -> Option<Vec<i64>> {
        self.alpha.iter().map(Scalar::to_i64).collect()
    }

    /// Parameters `(α + γ, β + γ)`.
    pub fn shifted(&self, gamma: &[i64]) -> Self {
        let add = |v: &[Scalar]| -> Vector {
            v.iter()
                .zip(gamma)
                .map(|(x, &g)| x + &Scalar::from_int(g))
                .collect()
        };
        Self {
            alpha: add(&self.alpha),
            beta: add(&self.beta),
            rep: self.rep.clone(),
        }
    }

    /// `s + α`
    pub fn shifted_grade(&self, s: &[i64]) -> Vector {
        s.iter()
            .zip(&self.alpha)
            .map(|(&x, a)| a + &Scalar::from_int(x))
            .collect()
    }

    /// Adds `n`, `dim`, `alpha` and `beta` to a report's parameters.
    pub fn describe(&self, report: CheckReport) -> CheckReport {
        report
            .param("n", self.rank())
            .param("dim", self.rep.dim())
            .param("alpha", join(&self.alpha))
            .param("beta", join(&self.beta))
    }
}

/// `v ⊗ t^grade`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GradedVector {
    pub grade: Vec<i64>,
    pub payload: Vector,
}

impl GradedVector {
    pub fn new(grade: Vec<i64>, payload: Vector) -> Self {
        Self { grade, payload }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.payload)
    }
}

/// Outcome of one bracket-law comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketOutcome {
    Holds,
    Fails { lhs: Vector, rhs: Vector },
    Skipped(&'static str),
}

/// `F^{α,β}(V)` with a table of `ρ(r r̄ᵗ)` for frequently used `r`.
///
/// The table is filled when the module is built and is read-only
/// afterwards, so a module can be shared across threads freely. Lookups
/// for other `r` compute the matrix on the spot.
#[derive(Clone, Debug)]
pub struct ShenLarssonModule {
    params: ModuleParams,
    cache: BTreeMap<Vec<i64>, SparseMatrix>,
}

impl ShenLarssonModule {
    pub fn new(params: ModuleParams) -> Self {
        Self {
            params,
            cache: BTreeMap::new(),
        }
    }

    /// Builds the module with `ρ(r r̄ᵗ)` precomputed for every `r` in `gens`.
    pub fn with_cache<'a, I>(params: ModuleParams, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Vec<i64>>,
    {
        let mut m = Self::new(params);
        for r in gens {
            let rho = m.compute_rank_one(r)?;
            m.cache.insert(r.clone(), rho);
        }
        Ok(m)
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
    }

    pub fn rep(&self) -> &Representation {
        &self.params.rep
    }

    fn check_lattice(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.params.lattice_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.params.lattice_dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn compute_rank_one(&self, r: &[i64]) -> Result<SparseMatrix> {
        self.check_lattice(r)?;
        self.rho_rank_one(&int_vector(r))
    }

    /// `ρ(u ūᵗ)` for any rational `u`.
    pub fn rho_rank_one(&self, u: &[Scalar]) -> Result<SparseMatrix> {
        let alg = self.params.rep.algebra();
        self.params.rep.action_of_matrix(&alg.rank_one(u)?)
    }

    /// `ρ(r r̄ᵗ)`, from the table when available.
    pub fn rank_one_action(&self, r: &[i64]) -> Result<Cow<'_, SparseMatrix>> {
        match self.cache.get(r) {
            Some(m) => Ok(Cow::Borrowed(m)),
            None => self.compute_rank_one(r).map(Cow::Owned),
        }
    }

    /// `(r̄, s + α)`
    pub fn scalar_term(&self, r: &[i64], grade: &[i64]) -> Scalar {
        Scalar::from_int(bar_pairing_int(r, grade)) + bar_pairing_mixed(r, &self.params.alpha)
    }

    /// `(r̄, s+α)I + ρ(r r̄ᵗ)`, the matrix by which `H_r` acts on grade `s`.
    /// Defined (as zero) for `r = 0` so polynomial evaluations can use it.
    pub fn coefficient_matrix(&self, r: &[i64], grade: &[i64]) -> Result<SparseMatrix> {
        self.check_lattice(grade)?;
        let mut m = self.rank_one_action(r)?.into_owned();
        let c = self.scalar_term(r, grade);
        m.add_scaled(&Scalar::ONE, &SparseMatrix::scalar_identity(m.rows(), &c));
        Ok(m)
    }

    /// Payload of `H_r(v ⊗ t^grade)` without the zero-generator check.
    pub fn apply(&self, r: &[i64], grade: &[i64], payload: &[Scalar]) -> Result<Vector> {
        self.check_lattice(grade)?;
        let m = self.rank_one_action(r)?;
        let mut out = m.checked_mul_vec(payload)?;
        let c = self.scalar_term(r, grade);
        if !c.is_zero() {
            for (o, p) in out.iter_mut().zip(payload) {
                o.add_mul(&c, p);
            }
        }
        Ok(out)
    }

    /// `H_r` on a graded vector; `r = 0` is rejected.
    pub fn act_h(&self, r: &[i64], x: &GradedVector) -> Result<GradedVector> {
        self.check_lattice(r)?;
        if r.iter().all(|&c| c == 0) {
            return Err(Error::ZeroGenerator);
        }
        let payload = self.apply(r, &x.grade, &x.payload)?;
        let grade = x.grade.iter().zip(r).map(|(a, b)| a + b).collect();
        Ok(GradedVector { grade, payload })
    }

    /// `d_i` (zero-based `i`) scales by `s_i + β_i`.
    pub fn act_d(&self, i: usize, x: &GradedVector) -> Result<GradedVector> {
        self.check_lattice(&x.grade)?;
        let big = self.params.lattice_dim();
        if i >= big {
            return Err(Error::IndexOutOfRange { index: i, bound: big });
        }
        let c = &Scalar::from_int(x.grade[i]) + &self.params.beta[i];
        Ok(GradedVector {
            grade: x.grade.clone(),
            payload: scaled(&x.payload, &c),
        })
    }

    /// Compares `H_r H_s x − H_s H_r x` with `(r̄, s) H_{r+s} x`.
    ///
    /// For `r + s = 0` the right side is taken to be zero: the structure
    /// constant `(r̄, −r)` vanishes and there is no `H_0` to multiply.
    pub fn verify_ham_bracket(&self, r: &[i64], s: &[i64], x: &GradedVector) -> Result<BracketOutcome> {
        self.check_lattice(r)?;
        self.check_lattice(s)?;
        if r.iter().all(|&c| c == 0) || s.iter().all(|&c| c == 0) {
            return Ok(BracketOutcome::Skipped("H_0 is not a generator"));
        }
        let rs = self.act_h(r, &self.act_h(s, x)?)?;
        let sr = self.act_h(s, &self.act_h(r, x)?)?;
        let lhs = sub_vectors(&rs.payload, &sr.payload);
        let sum: Vec<i64> = r.iter().zip(s).map(|(a, b)| a + b).collect();
        let rhs = if sum.iter().all(|&c| c == 0) {
            vec![Scalar::ZERO; lhs.len()]
        } else {
            let c = Scalar::from_int(bar_pairing_int(r, s));
            scaled(&self.act_h(&sum, x)?.payload, &c)
        };
        Ok(if lhs == rhs {
            BracketOutcome::Holds
        } else {
            BracketOutcome::Fails { lhs, rhs }
        })
    }

    /// `(ū, w)I + ρ(u ūᵗ)` for vectors affine in `s`.
    pub fn coefficient_polynomial(&self, u: &AffineVector, w: &AffineVector) -> Result<MatrixPolynomial> {
        let big = self.params.lattice_dim();
        let dim = self.rep().dim();
        let mut scalar = ScalarPoly::new();
        for (e, c) in expand_bilinear(u, w, |a, b| dot(&bar(a), b)) {
            if !c.is_zero() {
                let entry = scalar.entry(e).or_insert(Scalar::ZERO);
                *entry += c;
            }
        }
        scalar.retain(|_, c| !c.is_zero());
        let mut poly = MatrixPolynomial::zero(big, dim);
        poly.add_scalar(&scalar);

        // u ūᵗ = ½σ(c,c) + Σ s_i σ(c,l_i) + Σ_{i<j} s_i s_j σ(l_i,l_j) + Σ s_i² ½σ(l_i,l_i)
        // with σ(x,y) = x ȳᵗ + y x̄ᵗ, so ½σ(x,x) = x x̄ᵗ.
        let c = &u.constant;
        let l = &u.linear;
        if !is_zero_vector(c) {
            poly.add_term(monomial(big, &[]), &self.rho_rank_one(c)?);
        }
        for i in 0..big {
            if is_zero_vector(&l[i]) {
                continue;
            }
            if !is_zero_vector(c) {
                poly.add_term(monomial(big, &[i]), &self.rho_sym(c, &l[i])?);
            }
            poly.add_term(monomial(big, &[i, i]), &self.rho_rank_one(&l[i])?);
            for j in i + 1..big {
                if !is_zero_vector(&l[j]) {
                    poly.add_term(monomial(big, &[i, j]), &self.rho_sym(&l[i], &l[j])?);
                }
            }
        }
        Ok(poly)
    }

    /// `ρ(x ȳᵗ + y x̄ᵗ)`
    fn rho_sym(&self, x: &[Scalar], y: &[Scalar]) -> Result<SparseMatrix> {
        let sum: Vector = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let mut m = self.rho_rank_one(&sum)?;
        m = m.sub(&self.rho_rank_one(x)?)?;
        m.sub(&self.rho_rank_one(y)?)
    }

    /// `g₁(s) = (s̄, r+α)I + ρ(s s̄ᵗ)`, the matrix of `H_s` on grade `r`.
    pub fn g1_polynomial(&self, r: &[i64]) -> Result<MatrixPolynomial> {
        self.check_lattice(r)?;
        let big = self.params.lattice_dim();
        let w = AffineVector::constant(self.params.shifted_grade(r));
        self.coefficient_polynomial(&AffineVector::variables(big), &w)
    }

    /// `g₂(s) = [(r̄−s̄, k+s+α)I + ρ((r−s)(r̄−s̄)ᵗ)]·[(s̄, k+α)I + ρ(s s̄ᵗ)]`,
    /// the matrix of `H_{r−s} H_s` on grade `k`.
    pub fn g2_polynomial(&self, r: &[i64], k: &[i64]) -> Result<MatrixPolynomial> {
        self.check_lattice(r)?;
        self.check_lattice(k)?;
        let big = self.params.lattice_dim();
        let s = AffineVector::variables(big);
        let ka = AffineVector::constant(self.params.shifted_grade(k));
        let first = self.coefficient_polynomial(
            &AffineVector::constant(int_vector(r)).sub(&s),
            &ka.add(&s),
        )?;
        let second = self.coefficient_polynomial(&s, &ka)?;
        first.mul(&second)
    }

    /// Checks the degree-2 part of `g₁` against its expansion in the sp
    /// basis, its linear part against `(s̄, r+α)`, and evaluations against
    /// the action matrices.
    pub fn verify_g1_expansion(&self, r: &[i64], rng: &mut SampleRng, evaluations: usize) -> Result<CheckReport> {
        let n = self.params.rank();
        let big = 2 * n;
        let g1 = self.g1_polynomial(r)?;
        let act = |g: Generator| self.rep().act(g).cloned();
        let half = Scalar::new(1, 2).expect("nonzero");
        let mut report = self.params.describe(CheckReport::new("g1-check")).param("r", join(r));

        let mut expected = Vec::new();
        for a in 0..n {
            expected.push((monomial(big, &[a, n + a]), act(Generator::Cartan(a))?));
            expected.push((monomial(big, &[n + a, n + a]), act(Generator::Lowering(a, a))?.scale(&half)));
            expected.push((monomial(big, &[a, a]), act(Generator::Raising(a, a))?.scale(&-&half)));
        }
        for b in 0..n {
            for c in 0..n {
                if b != c {
                    expected.push((monomial(big, &[b, n + c]), act(Generator::Mixed(b, c))?));
                }
            }
        }
        for d in 0..n {
            for e in d + 1..n {
                expected.push((monomial(big, &[n + d, n + e]), act(Generator::Lowering(d, e))?));
                expected.push((monomial(big, &[d, e]), act(Generator::Raising(d, e))?.scale(&-Scalar::ONE)));
            }
        }
        let quadratic = g1.homogeneous(2);
        for (e, m) in &expected {
            report.record_entry(
                format!("coefficient of {}", monomial_label(e, n)),
                &quadratic.coefficient(e) == m,
            );
        }
        // every degree-2 monomial is listed above
        let listed = expected.len() == big * (big + 1) / 2;
        report.record_entry(String::from("expansion covers all quadratic monomials"), listed);

        let ra = self.params.shifted_grade(r);
        let mut linear = MatrixPolynomial::zero(big, self.rep().dim());
        for i in 0..big {
            // (s̄, w) = Σ_i s_{n+i} w_i − s_i w_{n+i}
            let coeff = if i < n { -&ra[n + i] } else { ra[i - n].clone() };
            linear.add_term(monomial(big, &[i]), &SparseMatrix::scalar_identity(self.rep().dim(), &coeff));
        }
        report.record_entry(String::from("linear part is (s̄, r+α)I"), g1.homogeneous(1) == linear);
        report.record_entry(String::from("g1(0) = 0"), g1.homogeneous(0).is_zero());

        for _ in 0..evaluations {
            let s = sampling::int_vector(rng, big, 4);
            let lhs = g1.evaluate(&int_vector(&s))?;
            let rhs = self.coefficient_matrix(&s, r)?;
            if lhs == rhs {
                report.record_pass();
            } else {
                report.record_failure(Counterexample {
                    r: Some(r.to_vec()),
                    s: Some(s),
                    detail: String::from("g1(s) differs from the action matrix of H_s"),
                    ..Counterexample::default()
                });
            }
        }
        Ok(report)
    }

    /// Evaluates `g₂` at random integer `s` and compares with the composed
    /// action matrices of `H_{r−s} ∘ H_s` on grade `k`.
    pub fn verify_g2_evaluations(&self, r: &[i64], k: &[i64], rng: &mut SampleRng, samples: usize) -> Result<CheckReport> {
        let g2 = self.g2_polynomial(r, k)?;
        let big = self.params.lattice_dim();
        let mut report = self
            .params
            .describe(CheckReport::new("g2-evaluation"))
            .param("r", join(r))
            .param("k", join(k));
        for _ in 0..samples {
            let s = sampling::int_vector(rng, big, 4);
            let rs: Vec<i64> = r.iter().zip(&s).map(|(a, b)| a - b).collect();
            let ks: Vec<i64> = k.iter().zip(&s).map(|(a, b)| a + b).collect();
            let composed = self.coefficient_matrix(&rs, &ks)?.mul(&self.coefficient_matrix(&s, k)?)?;
            if g2.evaluate(&int_vector(&s))? == composed {
                report.record_pass();
            } else {
                report.record_failure(Counterexample {
                    r: Some(r.to_vec()),
                    s: Some(s),
                    grade: Some(k.to_vec()),
                    detail: String::from("g2(s) differs from the composed action"),
                    ..Counterexample::default()
                });
            }
        }
        Ok(report)
    }

    /// The degree-4 coefficient table of `g₂`.
    pub fn verify_g2_table(&self, r: &[i64], k: &[i64]) -> Result<CheckReport> {
        let n = self.params.rank();
        let big = 2 * n;
        let quartic = self.g2_polynomial(r, k)?.homogeneous(4);
        let act = |g: Generator| self.rep().act(g).cloned();
        let quarter = Scalar::new(1, 4).expect("nonzero");
        let half = Scalar::new(1, 2).expect("nonzero");
        let mut report = self
            .params
            .describe(CheckReport::new("g2-table"))
            .param("r", join(r))
            .param("k", join(k));
        let check = |report: &mut CheckReport, row: &str, e: Vec<u8>, expected: SparseMatrix| {
            let label = format!("{row}: {}", monomial_label(&e, n));
            report.record_entry(label, quartic.coefficient(&e) == expected);
        };
        for i in 0..n {
            let x = act(Generator::Raising(i, i))?;
            check(&mut report, "s_i^4", monomial(big, &[i; 4]), x.mul(&x)?.scale(&quarter));
            let y = act(Generator::Lowering(i, i))?;
            check(&mut report, "s_{n+i}^4", monomial(big, &[n + i; 4]), y.mul(&y)?.scale(&quarter));
        }
        for i in 0..n {
            for j in i + 1..n {
                let x = act(Generator::Raising(i, j))?;
                let t = x.mul(&x)?.add(&act(Generator::Raising(i, i))?.mul(&act(Generator::Raising(j, j))?)?.scale(&half))?;
                check(&mut report, "s_i^2 s_j^2", monomial(big, &[i, i, j, j]), t);
                let y = act(Generator::Lowering(i, j))?;
                let t = y.mul(&y)?.add(&act(Generator::Lowering(j, j))?.mul(&act(Generator::Lowering(i, i))?)?.scale(&half))?;
                check(&mut report, "s_{n+i}^2 s_{n+j}^2", monomial(big, &[n + i, n + i, n + j, n + j]), t);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let x = act(Generator::Mixed(i, j))?;
                let lo = act(Generator::Lowering(j, j))?;
                let hi = act(Generator::Raising(i, i))?;
                let t = x.mul(&x)?.sub(&lo.mul(&hi)?.scale(&half))?;
                check(&mut report, "s_i^2 s_{n+j}^2", monomial(big, &[i, i, n + j, n + j]), t);
                let t = x.mul(&hi)?.scale(&-Scalar::ONE);
                check(&mut report, "s_i^3 s_{n+j}", monomial(big, &[i, i, i, n + j]), t);
            }
        }
        Ok(report)
    }

    /// The three displayed action formulas for `H_{e_i}`, `H_{e_{n+i}}` and
    /// `H_{e_i + e_{n+j}}` (`i ≠ j`), on random `v ⊗ t^k`.
    pub fn verify_named_actions(&self, rng: &mut SampleRng, samples: usize) -> Result<CheckReport> {
        let n = self.params.rank();
        let big = 2 * n;
        let dim = self.rep().dim();
        let half = Scalar::new(1, 2).expect("nonzero");
        let alpha = &self.params.alpha;
        let mut report = self
            .params
            .describe(CheckReport::new("named-actions"))
            .param("samples", samples);
        let x2 = |i| self.rep().act(Generator::Raising(i, i));
        let y2 = |i| self.rep().act(Generator::Lowering(i, i));
        for _ in 0..samples {
            let k = sampling::int_vector(rng, big, 4);
            let v = sampling::rational_vector(rng, dim, 3);
            let x = GradedVector::new(k.clone(), v.clone());
            let ka = |i: usize| &Scalar::from_int(k[i]) + &alpha[i];
            let mut failed = Vec::new();
            for i in 0..n {
                let e = unit_lattice(big, &[i]);
                let got = self.act_h(&e, &x)?.payload;
                let mut want = scaled(&v, &-ka(n + i));
                crate::linalg::axpy(&mut want, &-&half, &x2(i)?.mul_vec(&v));
                if got != want {
                    failed.push(format!("item 1, i={}", i + 1));
                }
                let e = unit_lattice(big, &[n + i]);
                let got = self.act_h(&e, &x)?.payload;
                let mut want = scaled(&v, &ka(i));
                crate::linalg::axpy(&mut want, &half, &y2(i)?.mul_vec(&v));
                if got != want {
                    failed.push(format!("item 2, i={}", i + 1));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let e = unit_lattice(big, &[i, n + j]);
                    let got = self.act_h(&e, &x)?.payload;
                    let mut want = scaled(&v, &(&ka(j) - &ka(n + i)));
                    crate::linalg::axpy(&mut want, &Scalar::ONE, &self.rep().act(Generator::Mixed(i, j))?.mul_vec(&v));
                    crate::linalg::axpy(&mut want, &half, &y2(j)?.mul_vec(&v));
                    crate::linalg::axpy(&mut want, &-&half, &x2(i)?.mul_vec(&v));
                    if got != want {
                        failed.push(format!("item 3, i={}, j={}", i + 1, j + 1));
                    }
                }
            }
            if failed.is_empty() {
                report.record_pass();
            } else {
                report.record_failure(Counterexample {
                    grade: Some(k),
                    payload: Some(v),
                    detail: failed.join("; "),
                    ..Counterexample::default()
                });
            }
        }
        Ok(report)
    }
}

/// `v ⊗ t^r ↦ v ⊗ t^{r−γ}` intertwines `F^{α,β}(V)` with
/// `F^{α+γ,β+γ}(V)`; checked on random `H_m` and on every `d_i`.
pub fn verify_shift_isomorphism(
    params: &ModuleParams,
    gamma: &[i64],
    rng: &mut SampleRng,
    samples: usize,
) -> Result<CheckReport> {
    let big = params.lattice_dim();
    if gamma.len() != big {
        return Err(Error::DimensionMismatch {
            expected: big,
            found: gamma.len(),
        });
    }
    let source = ShenLarssonModule::new(params.clone());
    let target = ShenLarssonModule::new(params.shifted(gamma));
    let shift = |x: &GradedVector| GradedVector {
        grade: x.grade.iter().zip(gamma).map(|(a, b)| a - b).collect(),
        payload: x.payload.clone(),
    };
    let dim = params.rep().dim();
    let mut report = params
        .describe(CheckReport::new("shift-iso"))
        .param("gamma", join(gamma))
        .param("samples", samples);
    for _ in 0..samples {
        let m = sampling::nonzero_int_vector(rng, big, 3);
        let x = GradedVector::new(
            sampling::int_vector(rng, big, 4),
            sampling::rational_vector(rng, dim, 3),
        );
        let mut ok = shift(&source.act_h(&m, &x)?) == target.act_h(&m, &shift(&x))?;
        for i in 0..big {
            ok &= shift(&source.act_d(i, &x)?) == target.act_d(i, &shift(&x))?;
        }
        if ok {
            report.record_pass();
        } else {
            report.record_failure(Counterexample {
                r: Some(m),
                grade: Some(x.grade),
                payload: Some(x.payload),
                detail: String::from("shift map does not intertwine"),
                ..Counterexample::default()
            });
        }
    }
    Ok(report)
}

/// Random bracket-law samples: each draws `α`, `r`, `s`, a grade and a
/// payload. `r + s = 0` is allowed and compared against zero.
pub fn bracket_sweep(rep: &Arc<Representation>, rng: &mut SampleRng, samples: usize, radius: i64) -> Result<CheckReport> {
    let big = rep.algebra().natural_dim();
    let dim = rep.dim();
    let mut report = CheckReport::new("ham-bracket")
        .param("n", rep.algebra().rank())
        .param("dim", dim)
        .param("samples", samples)
        .param("radius", radius);
    for _ in 0..samples {
        let alpha = sampling::rational_vector(rng, big, 3);
        let beta = sampling::rational_vector(rng, big, 3);
        let r = sampling::nonzero_int_vector(rng, big, radius);
        let s = sampling::nonzero_int_vector(rng, big, radius);
        let x = GradedVector::new(
            sampling::int_vector(rng, big, radius),
            sampling::nonzero_rational_vector(rng, dim, 3),
        );
        let module = ShenLarssonModule::new(ModuleParams::new(rep.clone(), alpha.clone(), beta)?);
        match module.verify_ham_bracket(&r, &s, &x)? {
            BracketOutcome::Holds | BracketOutcome::Skipped(_) => report.record_pass(),
            BracketOutcome::Fails { .. } => report.record_failure(Counterexample {
                r: Some(r),
                s: Some(s),
                grade: Some(x.grade),
                payload: Some(x.payload),
                alpha: Some(alpha),
                detail: String::from("[H_r, H_s] differs from (r̄, s) H_{r+s}"),
            }),
        }
    }
    Ok(report)
}

fn unit_lattice(len: usize, ones: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; len];
    for &i in ones {
        v[i] += 1;
    }
    v
}

/// `s1^2 s3` style rendering with one-based variable indices.
pub fn monomial_label(e: &[u8], _n: usize) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| {
            if p == 1 {
                format!("s{}", i + 1)
            } else {
                format!("s{}^{}", i + 1, p)
            }
        })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join(" ")
    }
}
