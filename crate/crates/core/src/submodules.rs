//! Box-truncated graded subspaces of `F^{α,β}(V)`: closure under the
//! `H_r`, invariance checking, the explicit submodules built from `V(δ_k)`,
//! and a finite irreducibility probe.
//!
//! A family assigns a subspace of `V` to every grade of a finite box
//! `[-R, R]^N`. Generators `H_r` are taken from `0 < max|r_i| ≤ R_gen` and
//! only act when the target grade stays in the box.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hamiltonian::{GradedVector, ModuleParams, ShenLarssonModule};
use crate::linalg::{is_zero_vector, nullspace, SparseMatrix, Subspace, Vector};
use crate::report::{join, CheckReport, Counterexample};
use crate::reps::{binomial, combinations, contraction_theta, fundamental_realization, wedge_vectors, Representation};
use crate::sampling::{self, SampleRng};
use crate::scalar::Scalar;
use crate::symplectic::{bar, bar_pairing_int, bar_pairing_mixed, SpAlgebra};

/// The grades `s ∈ Z^N` with `|s_i| ≤ radius`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBox {
    dim: usize,
    radius: i64,
}

impl LatticeBox {
    pub fn new(dim: usize, radius: i64) -> Result<Self> {
        if radius < 1 {
            return Err(Error::InvalidRadius);
        }
        Ok(Self { dim, radius })
    }

    /// The box shrunk by `by` on every side; may have radius 0.
    pub fn shrink(&self, by: i64) -> Option<Self> {
        (self.radius >= by && by >= 0).then_some(Self {
            dim: self.dim,
            radius: self.radius - by,
        })
    }

    pub fn enlarge(&self, by: i64) -> Self {
        Self {
            dim: self.dim,
            radius: self.radius + by.max(0),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    fn side(&self) -> usize {
        (2 * self.radius + 1) as usize
    }

    /// Number of grades.
    pub fn len(&self) -> usize {
        self.side().pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, g: &[i64]) -> bool {
        g.len() == self.dim && g.iter().all(|x| x.abs() <= self.radius)
    }

    pub fn index_of(&self, g: &[i64]) -> Option<usize> {
        if !self.contains(g) {
            return None;
        }
        let side = self.side();
        Some(
            g.iter()
                .fold(0usize, |acc, &x| acc * side + (x + self.radius) as usize),
        )
    }

    pub fn grade_at(&self, mut idx: usize) -> Vec<i64> {
        let side = self.side();
        let mut g = vec![0i64; self.dim];
        for x in g.iter_mut().rev() {
            *x = (idx % side) as i64 - self.radius;
            idx /= side;
        }
        g
    }

    pub fn grades(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.len()).map(move |i| self.grade_at(i))
    }
}

/// `{r ∈ Z^N : r ≠ 0, max|r_i| ≤ radius}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    radius: i64,
    gens: Vec<Vec<i64>>,
}

impl GeneratorSet {
    pub fn new(dim: usize, radius: i64) -> Result<Self> {
        let cube = LatticeBox::new(dim, radius)?;
        let gens = cube.grades().filter(|g| g.iter().any(|&x| x != 0)).collect();
        Ok(Self { radius, gens })
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn gens(&self) -> &[Vec<i64>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// A subspace of `V` at every grade of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedModule {
    params: ModuleParams,
    lattice: LatticeBox,
    spaces: Vec<Subspace>,
}

impl TruncatedModule {
    pub fn zero(params: ModuleParams, lattice: LatticeBox) -> Self {
        let dim = params.rep().dim();
        Self {
            spaces: vec![Subspace::zero(dim); lattice.len()],
            params,
            lattice,
        }
    }

    pub fn full(params: ModuleParams, lattice: LatticeBox) -> Self {
        let dim = params.rep().dim();
        Self {
            spaces: vec![Subspace::full(dim); lattice.len()],
            params,
            lattice,
        }
    }

    /// Builds a family from one subspace per grade, in box order.
    pub fn from_spaces(params: ModuleParams, lattice: LatticeBox, spaces: Vec<Subspace>) -> Result<Self> {
        if spaces.len() != lattice.len() {
            return Err(Error::DimensionMismatch {
                expected: lattice.len(),
                found: spaces.len(),
            });
        }
        let dim = params.rep().dim();
        if let Some(s) = spaces.iter().find(|s| s.ambient_dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: s.ambient_dim(),
            });
        }
        Ok(Self {
            params,
            lattice,
            spaces,
        })
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.lattice
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn space(&self, grade: &[i64]) -> Option<&Subspace> {
        self.lattice.index_of(grade).map(|i| &self.spaces[i])
    }

    pub fn set_space(&mut self, grade: &[i64], s: Subspace) -> Result<()> {
        let i = self
            .lattice
            .index_of(grade)
            .ok_or_else(|| Error::SeedOutsideBox(join(grade)))?;
        if s.ambient_dim() != self.params.rep().dim() {
            return Err(Error::DimensionMismatch {
                expected: self.params.rep().dim(),
                found: s.ambient_dim(),
            });
        }
        self.spaces[i] = s;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    /// Dimensions at the grades of `inner` (which must fit in the box), in
    /// `inner`'s order.
    pub fn profile(&self, inner: &LatticeBox) -> Vec<usize> {
        inner
            .grades()
            .map(|g| self.space(&g).map_or(0, Subspace::dim))
            .collect()
    }

    /// `other(s) ⊆ self(s)` for every grade `s` of `on`.
    pub fn contains_family(&self, other: &TruncatedModule, on: &LatticeBox) -> Result<bool> {
        for g in on.grades() {
            let (Some(a), Some(b)) = (self.space(&g), other.space(&g)) else {
                return Err(Error::SeedOutsideBox(join(&g)));
            };
            if !b.is_subspace_of(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self(s) = other(s)` for every grade `s` of `on`.
    pub fn equals_on(&self, other: &TruncatedModule, on: &LatticeBox) -> Result<bool> {
        Ok(self.contains_family(other, on)? && other.contains_family(self, on)?)
    }
}

/// `ρ(r r̄ᵗ)` and `(r̄, α)` for every generator, aligned with the set.
struct GenTable {
    rho: Vec<SparseMatrix>,
    alpha_term: Vec<Scalar>,
}

impl GenTable {
    fn new(module: &ShenLarssonModule, gens: &GeneratorSet) -> Result<Self> {
        let alpha = module.params().alpha();
        let mut rho = Vec::with_capacity(gens.len());
        let mut alpha_term = Vec::with_capacity(gens.len());
        for r in gens.gens() {
            rho.push(module.rank_one_action(r)?.into_owned());
            alpha_term.push(bar_pairing_mixed(r, alpha));
        }
        Ok(Self { rho, alpha_term })
    }

    fn apply(&self, gi: usize, r: &[i64], grade: &[i64], v: &[Scalar]) -> Vector {
        let mut out = self.rho[gi].mul_vec(v);
        let c = Scalar::from_int(bar_pairing_int(r, grade)) + &self.alpha_term[gi];
        if !c.is_zero() {
            for (o, x) in out.iter_mut().zip(v) {
                o.add_mul(&c, x);
            }
        }
        out
    }
}

fn shifted_index(lattice: &LatticeBox, grade: &[i64], r: &[i64]) -> Option<usize> {
    let side = lattice.side();
    let mut idx = 0usize;
    for (&g, &x) in grade.iter().zip(r) {
        let t = g + x;
        if t.abs() > lattice.radius {
            return None;
        }
        idx = idx * side + (t + lattice.radius) as usize;
    }
    Some(idx)
}

/// Smallest family containing the seeds and closed under every `H_r`,
/// `r ∈ gens`, whose target grade lies in the box.
pub fn closure(
    module: &ShenLarssonModule,
    seeds: &[GradedVector],
    lattice: &LatticeBox,
    gens: &GeneratorSet,
) -> Result<TruncatedModule> {
    closure_until(module, seeds, lattice, gens, None).map(|(f, _)| f)
}

/// Like [`closure`], but may stop as soon as every grade of `stop_when_full`
/// holds all of `V`. Returns the family and whether the fixed point was
/// reached. Stopping early never changes the family on `stop_when_full`,
/// since closure only ever grows subspaces.
pub fn closure_until(
    module: &ShenLarssonModule,
    seeds: &[GradedVector],
    lattice: &LatticeBox,
    gens: &GeneratorSet,
    stop_when_full: Option<&LatticeBox>,
) -> Result<(TruncatedModule, bool)> {
    let params = module.params().clone();
    let dim = params.rep().dim();
    if lattice.dim() != params.lattice_dim() {
        return Err(Error::DimensionMismatch {
            expected: params.lattice_dim(),
            found: lattice.dim(),
        });
    }
    let table = GenTable::new(module, gens)?;
    let mut family = TruncatedModule::zero(params, *lattice);
    let mut watch = vec![false; lattice.len()];
    let mut remaining = 0usize;
    if let Some(inner) = stop_when_full {
        for g in inner.grades() {
            let i = lattice
                .index_of(&g)
                .ok_or_else(|| Error::SeedOutsideBox(join(&g)))?;
            watch[i] = true;
            remaining += 1;
        }
    }
    let mut queue: VecDeque<(usize, Vector)> = VecDeque::new();
    let insert = |family: &mut TruncatedModule, remaining: &mut usize, idx: usize, v: Vector, queue: &mut VecDeque<(usize, Vector)>| -> Result<()> {
        let space = &mut family.spaces[idx];
        if space.insert(&v)? {
            if watch[idx] && space.dim() == dim {
                *remaining -= 1;
            }
            queue.push_back((idx, v));
        }
        Ok(())
    };
    for seed in seeds {
        if seed.payload.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: seed.payload.len(),
            });
        }
        let idx = lattice
            .index_of(&seed.grade)
            .ok_or_else(|| Error::SeedOutsideBox(join(&seed.grade)))?;
        insert(&mut family, &mut remaining, idx, seed.payload.clone(), &mut queue)?;
    }
    while let Some((idx, v)) = queue.pop_front() {
        if stop_when_full.is_some() && remaining == 0 {
            return Ok((family, false));
        }
        let grade = lattice.grade_at(idx);
        for (gi, r) in gens.gens().iter().enumerate() {
            let Some(t) = shifted_index(lattice, &grade, r) else {
                continue;
            };
            if family.spaces[t].is_full() {
                continue;
            }
            let w = table.apply(gi, r, &grade, &v);
            insert(&mut family, &mut remaining, t, w, &mut queue)?;
        }
    }
    Ok((family, true))
}

/// How [`invariance_check`] chooses the (generator, grade) pairs it tests
/// directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvarianceStrategy {
    /// Every pair.
    Exhaustive,
    /// A subset from which all other pairs follow; see [`InvarianceChecker`].
    Reduced,
    /// Exhaustive for small instances, reduced otherwise.
    Auto,
}

/// Pair count below which [`InvarianceStrategy::Auto`] stays exhaustive.
pub const AUTO_EXHAUSTIVE_LIMIT: u64 = 4_000_000;

/// Integer form of one grade's subspace: primitive integer basis rows and
/// annihilator rows, so membership is a handful of integer dot products.
#[derive(Clone, Debug, Default)]
struct IntGrade {
    basis: Vec<Vec<i64>>,
    max_entry: i64,
    /// largest l1 norm of an annihilator row
    ann_l1: i64,
    /// sparse: annihilator rows of an RREF basis have at most `dim + 1`
    /// nonzero entries
    annihilator: Vec<Vec<(usize, i64)>>,
}

/// Entries of integer data are kept below this bound so that every
/// intermediate product fits in an `i128`.
const INT_BOUND: i64 = 1 << 30;

fn to_primitive(v: &[Scalar]) -> Option<Vec<i64>> {
    let mut lcm: i64 = 1;
    for x in v {
        let (_, d) = x.as_small()?;
        lcm = num_integer::lcm(lcm, d);
        if lcm > INT_BOUND {
            return None;
        }
    }
    let mut out = Vec::with_capacity(v.len());
    let mut g: i64 = 0;
    for x in v {
        let (p, d) = x.as_small()?;
        let y = p.checked_mul(lcm / d)?;
        g = num_integer::gcd(g, y);
        out.push(y);
    }
    if g > 1 {
        for y in &mut out {
            *y /= g;
        }
    }
    out.iter().all(|y| y.abs() < INT_BOUND).then_some(out)
}

/// Integer form of `ρ(r r̄ᵗ)`: `rows / denom`.
#[derive(Clone, Debug)]
struct IntGen {
    rows: Vec<Vec<(usize, i64)>>,
    /// largest l1 norm of a row
    row_l1: i64,
    denom: i64,
    /// `D · (r̄, α)` with `D` the common denominator of `α`
    alpha_term: i64,
}

/// Checks that every `H_r`, `r ∈ gens`, maps a family into itself.
///
/// **Reduced strategy.** Write `F(m, s)` for "`H_m` maps the space at `s`
/// into the space at `s + m`". On any module `[H_a, H_b] = (ā, b) H_{a+b}`,
/// so if `(ā, b) ≠ 0` and `s + a`, `s + b` lie in the box, then
/// `F(a, s)`, `F(b, s+a)`, `F(b, s)`, `F(a, s+b)` together give
/// `F(a+b, s)`. Write `c'` for the partner coordinate of `c` (`c ± n`).
///
/// * `m` has a pair with `m_c ≠ 0 ≠ m_{c'}`: split off `a = m_c e_c`.
///   Then `(ā, b) = ±m_c m_{c'} ≠ 0` and, since `a` lies coordinatewise
///   between `0` and `m`, every intermediate grade is in the box.
/// * `m = x e_c` with `|x| ≥ 2`: use `(±e_c + e_{c'}) + ((x ∓ 1) e_c − e_{c'})`,
///   two generators of the first kind. Needs `|s_{c'}| < R`.
/// * any other `m` with no pair as above (an *atom*) and support of size at
///   least two: pick `c` in the support with `|m_c| ≥ 2` or `c ≥ n`, and
///   `σ = ±1`; use `m = (m + σ e_{c'}) + (−σ e_{c'})`. The first term
///   splits as `m_c e_c` plus the atom `m' = m − m_c e_c + σ e_{c'}`, both
///   strictly below `m` in the order (sum of `|m_i|`, then number of nonzero
///   coordinates among the last `n`). Needs `|s_{c'}| < R`.
///
/// Generators of the first kind depend only on generators with smaller
/// coordinate sum, so induction shows it is enough to test directly: `±e_c`
/// at every grade, atoms with no admissible `c` at every grade, and every
/// other single-coordinate generator or atom at the grades where
/// `|s_{c'}| = R` for all admissible `c`. If all of those pass the family
/// is invariant; a failing direct test is a genuine violation.
pub struct InvarianceChecker<'a> {
    family: &'a TruncatedModule,
    gens: &'a GeneratorSet,
    table: GenTable,
    strategy: InvarianceStrategy,
    /// per generator, coordinates pinned to `±R` (`None`: no direct tests)
    plan: Vec<Option<Vec<usize>>>,
    int_grades: Option<Vec<Option<IntGrade>>>,
    int_gens: Option<Vec<Option<IntGen>>>,
    alpha_denom: i64,
}

/// Result of the direct tests for one generator.
#[derive(Clone, Debug, Default)]
pub struct GeneratorOutcome {
    pub checked: usize,
    pub failed: usize,
    /// the first [`MAX_REPORTED_VIOLATIONS`] failures
    pub violations: Vec<Counterexample>,
}

/// Violations kept in a report; the count is always exact.
pub const MAX_REPORTED_VIOLATIONS: usize = 64;

impl<'a> InvarianceChecker<'a> {
    pub fn new(family: &'a TruncatedModule, gens: &'a GeneratorSet, strategy: InvarianceStrategy) -> Result<Self> {
        let params = family.params();
        let lattice = family.lattice();
        let module = ShenLarssonModule::new(params.clone());
        let table = GenTable::new(&module, gens)?;
        let n = params.rank();
        let strategy = match strategy {
            InvarianceStrategy::Auto => {
                let pairs: u64 = gens
                    .gens()
                    .iter()
                    .map(|m| valid_grade_count(lattice, m, &[]))
                    .sum();
                if pairs <= AUTO_EXHAUSTIVE_LIMIT {
                    InvarianceStrategy::Exhaustive
                } else {
                    InvarianceStrategy::Reduced
                }
            }
            s => s,
        };
        let plan = gens
            .gens()
            .iter()
            .map(|m| match strategy {
                InvarianceStrategy::Reduced => reduced_plan(m, n),
                _ => Some(Vec::new()),
            })
            .collect();

        let dim = params.rep().dim();
        let alpha_denom = params
            .alpha()
            .iter()
            .try_fold(1i64, |acc, a| {
                let (_, d) = a.as_small()?;
                let l = num_integer::lcm(acc, d);
                (l <= 1 << 20).then_some(l)
            });
        let mut int_grades = None;
        let mut int_gens = None;
        if let (Some(den), true) = (alpha_denom, dim <= 32) {
            int_grades = Some(
                family
                    .spaces()
                    .iter()
                    .map(|s| {
                        let basis = s.basis().iter().map(|b| to_primitive(b)).collect::<Option<Vec<_>>>()?;
                        let annihilator = s
                            .annihilator()
                            .iter()
                            .map(|y| {
                                let y = to_primitive(y)?;
                                Some(y.into_iter().enumerate().filter(|(_, x)| *x != 0).collect())
                            })
                            .collect::<Option<Vec<_>>>()?;
                        let max_entry = basis.iter().flatten().map(|x: &i64| x.abs()).max().unwrap_or(0);
                        let ann_l1 = annihilator
                            .iter()
                            .map(|y: &Vec<(usize, i64)>| y.iter().map(|(_, x)| x.abs()).sum())
                            .max()
                            .unwrap_or(0);
                        Some(IntGrade {
                            basis,
                            max_entry,
                            ann_l1,
                            annihilator,
                        })
                    })
                    .collect(),
            );
            int_gens = Some(
                gens.gens()
                    .iter()
                    .enumerate()
                    .map(|(gi, _)| int_generator(&table, gi, den))
                    .collect(),
            );
        }
        Ok(Self {
            family,
            gens,
            table,
            strategy,
            plan,
            int_grades,
            int_gens,
            alpha_denom: alpha_denom.unwrap_or(1),
        })
    }

    pub fn strategy(&self) -> InvarianceStrategy {
        self.strategy
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    /// Runs the direct tests planned for generator `gi`.
    pub fn check_generator(&self, gi: usize) -> GeneratorOutcome {
        let mut out = GeneratorOutcome::default();
        let Some(pinned) = &self.plan[gi] else {
            return out;
        };
        let m = &self.gens.gens()[gi];
        let lattice = self.family.lattice();
        let big = lattice.dim();
        let radius = lattice.radius();
        let ranges: Vec<(i64, i64, bool)> = (0..big)
            .map(|j| {
                if pinned.contains(&j) {
                    (-radius, radius, true)
                } else {
                    ((-radius).max(-radius - m[j]), radius.min(radius - m[j]), false)
                }
            })
            .collect();
        if ranges.iter().any(|&(lo, hi, _)| lo > hi) {
            return out;
        }
        let mut s: Vec<i64> = ranges.iter().map(|&(lo, _, _)| lo).collect();
        loop {
            out.checked += 1;
            if let Some(v) = self.check_pair(gi, &s) {
                out.failed += 1;
                if out.violations.len() < MAX_REPORTED_VIOLATIONS {
                    out.violations.push(v);
                }
            }
            // odometer over the allowed values
            let mut j = big;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                let (lo, hi, pin) = ranges[j];
                if pin {
                    if s[j] == lo {
                        s[j] = hi;
                        break;
                    }
                    s[j] = lo;
                } else if s[j] < hi {
                    s[j] += 1;
                    break;
                } else {
                    s[j] = lo;
                }
            }
        }
    }

    fn check_pair(&self, gi: usize, s: &[i64]) -> Option<Counterexample> {
        let lattice = self.family.lattice();
        let m = &self.gens.gens()[gi];
        let si = lattice.index_of(s)?;
        let ti = shifted_index(lattice, s, m)?;
        let source = &self.family.spaces[si];
        let target = &self.family.spaces[ti];
        if source.is_zero() || target.is_full() {
            return None;
        }
        if let (Some(grades), Some(gens)) = (&self.int_grades, &self.int_gens) {
            if let (Some(gs), Some(gt), Some(g)) = (&grades[si], &grades[ti], &gens[gi]) {
                if let Some(bad) = self.check_pair_int(g, m, s, gs, gt) {
                    return bad.then(|| self.violation(gi, s, si));
                }
            }
        }
        for b in source.basis() {
            let w = self.table.apply(gi, m, s, b);
            if !target.contains(&w).unwrap_or(false) {
                return Some(self.violation(gi, s, si));
            }
        }
        None
    }

    /// `Some(true)` on a violation, `Some(false)` if clean, `None` if the
    /// integer path cannot be used for this pair.
    fn check_pair_int(&self, g: &IntGen, m: &[i64], s: &[i64], gs: &IntGrade, gt: &IntGrade) -> Option<bool> {
        let dc = i128::from(self.alpha_denom) * i128::from(bar_pairing_int(m, s)) + i128::from(g.alpha_term);
        let scale = dc.checked_mul(i128::from(g.denom))?;
        if scale.abs() >= 1i128 << 50 {
            return None;
        }
        // |w_j| ≤ bound, |y·w| ≤ ann_l1 · bound
        let bound = (scale.abs() + i128::from(self.alpha_denom) * i128::from(g.row_l1)) * i128::from(gs.max_entry);
        if bound.saturating_mul(i128::from(gt.ann_l1)) < 1i128 << 62 {
            Some(violates::<i64>(scale as i64, self.alpha_denom, g, gs, gt))
        } else {
            Some(violates::<i128>(scale, i128::from(self.alpha_denom), g, gs, gt))
        }
    }

    fn violation(&self, gi: usize, s: &[i64], si: usize) -> Counterexample {
        let m = &self.gens.gens()[gi];
        let target = self.family.lattice().index_of(&s.iter().zip(m).map(|(a, b)| a + b).collect::<Vec<_>>());
        let space = &self.family.spaces[si];
        let bad = space.basis().iter().find(|b| {
            let w = self.table.apply(gi, m, s, b);
            target.is_some_and(|t| !self.family.spaces[t].contains(&w).unwrap_or(false))
        });
        Counterexample {
            r: Some(m.clone()),
            grade: Some(s.to_vec()),
            payload: bad.cloned(),
            detail: String::from("H_r maps the family at this grade outside the family"),
            ..Counterexample::default()
        }
    }

    /// Merges per-generator outcomes (in generator order) into a report.
    pub fn report(&self, outcomes: Vec<GeneratorOutcome>) -> CheckReport {
        let lattice = self.family.lattice();
        let mut report = self
            .family
            .params()
            .describe(CheckReport::new("invariance"))
            .param("box_radius", lattice.radius())
            .param("gen_radius", self.gens.radius())
            .param(
                "strategy",
                match self.strategy {
                    InvarianceStrategy::Exhaustive => "exhaustive",
                    _ => "reduced",
                },
            );
        for o in outcomes {
            report.samples += o.checked;
            report.passes += o.checked - o.failed;
            for v in o.violations {
                if report.failures.len() < MAX_REPORTED_VIOLATIONS {
                    report.failures.push(v);
                }
            }
        }
        report
    }

    pub fn run(&self) -> CheckReport {
        let outcomes = (0..self.generator_count()).map(|gi| self.check_generator(gi)).collect();
        self.report(outcomes)
    }
}

fn int_generator(table: &GenTable, gi: usize, alpha_denom: i64) -> Option<IntGen> {
    let rho = &table.rho[gi];
    let mut denom: i64 = 1;
    for (_, _, x) in rho.entries() {
        let (_, d) = x.as_small()?;
        denom = num_integer::lcm(denom, d);
        if denom > 1 << 20 {
            return None;
        }
    }
    let rows = (0..rho.rows())
        .map(|i| {
            rho.row(i)
                .iter()
                .map(|(j, x)| {
                    let (p, d) = x.as_small()?;
                    let y = p.checked_mul(denom / d)?;
                    (y.abs() < INT_BOUND).then_some((*j, y))
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let at = &table.alpha_term[gi] * &Scalar::from_int(alpha_denom);
    let alpha_term = at.to_i64()?;
    let row_l1 = rows
        .iter()
        .map(|r: &Vec<(usize, i64)>| r.iter().map(|(_, x)| x.abs()).sum())
        .max()
        .unwrap_or(0);
    Some(IntGen {
        rows,
        row_l1,
        denom,
        alpha_term,
    })
}

/// Whether some basis vector `b` of the source has `y · (scale·b + d·R b) ≠ 0`
/// for an annihilator row `y` of the target. The caller bounds all values.
fn violates<T>(scale: T, d: T, g: &IntGen, gs: &IntGrade, gt: &IntGrade) -> bool
where
    T: Copy + Default + PartialEq + From<i64> + core::ops::Add<Output = T> + core::ops::Mul<Output = T>,
{
    let mut w = [T::default(); 32];
    for b in &gs.basis {
        for (j, row) in g.rows.iter().enumerate() {
            let mut acc = T::default();
            for &(k, x) in row {
                acc = acc + T::from(x) * T::from(b[k]);
            }
            w[j] = scale * T::from(b[j]) + d * acc;
        }
        for y in &gt.annihilator {
            let dot = y.iter().fold(T::default(), |acc, &(j, a)| acc + T::from(a) * w[j]);
            if dot != T::default() {
                return true;
            }
        }
    }
    false
}

fn partner(c: usize, n: usize) -> usize {
    if c < n {
        c + n
    } else {
        c - n
    }
}

/// Coordinates to pin to `±R` for the direct tests of `m`, or `None` when
/// `m` needs no direct test.
fn reduced_plan(m: &[i64], n: usize) -> Option<Vec<usize>> {
    let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] != 0).collect();
    if (0..n).any(|i| m[i] != 0 && m[n + i] != 0) {
        return None;
    }
    if let [c] = support[..] {
        return Some(if m[c].abs() >= 2 { vec![partner(c, n)] } else { Vec::new() });
    }
    Some(
        support
            .iter()
            .filter(|&&c| m[c].abs() >= 2 || c >= n)
            .map(|&c| partner(c, n))
            .collect(),
    )
}

/// Number of grades `s` with `s` and `s + m` in the box, with the listed
/// coordinates pinned to `±R`.
fn valid_grade_count(lattice: &LatticeBox, m: &[i64], pinned: &[usize]) -> u64 {
    let r = lattice.radius();
    (0..m.len())
        .map(|j| {
            if pinned.contains(&j) {
                2
            } else {
                (2 * r + 1 - m[j].abs()).max(0) as u64
            }
        })
        .product()
}

/// Runs [`InvarianceChecker`] sequentially.
pub fn invariance_check(family: &TruncatedModule, gens: &GeneratorSet, strategy: InvarianceStrategy) -> Result<CheckReport> {
    Ok(InvarianceChecker::new(family, gens, strategy)?.run())
}

/// The explicit submodule families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubmoduleKind {
    /// `Q(1 ⊗ t^{−α})` in `F^α(V(δ_0))`, `α ∈ Z^N`.
    TrivialLine,
    /// `span{(r+α) ⊗ t^r}` in `F^α(V(δ_1))`.
    Delta1,
    /// `(W_r^k ∩ Ker θ_k) ⊗ t^r` in `F^α(V(δ_k))`, `k ≥ 2`, with all of
    /// `Ker θ_k` at grade `−α` when `α ∈ Z^N`.
    DeltaK,
}

impl core::str::FromStr for SubmoduleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial_line" => Ok(Self::TrivialLine),
            "delta1" => Ok(Self::Delta1),
            "deltak" => Ok(Self::DeltaK),
            other => Err(Error::Parse(format!(
                "unknown submodule kind `{other}` (expected trivial_line, delta1 or deltak)"
            ))),
        }
    }
}

impl core::fmt::Display for SubmoduleKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Self::TrivialLine => "trivial_line",
            Self::Delta1 => "delta1",
            Self::DeltaK => "deltak",
        })
    }
}

/// Which `V(δ_k)` a representation is, compared against the standard
/// construction. `None` if it is none of them.
pub fn fundamental_index(rep: &Representation) -> Option<usize> {
    let alg = rep.algebra();
    (0..=alg.rank()).find(|&k| {
        crate::reps::fundamental_rep(alg, k).is_ok_and(|f| &f == rep)
    })
}

pub fn build_submodule(kind: SubmoduleKind, params: &ModuleParams, lattice: &LatticeBox) -> Result<TruncatedModule> {
    if lattice.dim() != params.lattice_dim() {
        return Err(Error::DimensionMismatch {
            expected: params.lattice_dim(),
            found: lattice.dim(),
        });
    }
    let rep = params.rep();
    let found = fundamental_index(rep);
    let mismatch = |need: &str| {
        Error::KindMismatch(format!(
            "{kind} needs {need}, got a representation of dimension {}",
            rep.dim()
        ))
    };
    let mut family = TruncatedModule::zero(params.clone(), *lattice);
    match kind {
        SubmoduleKind::TrivialLine => {
            if found != Some(0) {
                return Err(mismatch("the trivial representation"));
            }
            let a = params
                .integral_alpha()
                .ok_or_else(|| Error::KindMismatch(String::from("trivial_line needs an integral alpha")))?;
            let g: Vec<i64> = a.iter().map(|x| -x).collect();
            if lattice.contains(&g) {
                family.set_space(&g, Subspace::full(1))?;
            }
        }
        SubmoduleKind::Delta1 => {
            if found != Some(1) {
                return Err(mismatch("the natural representation"));
            }
            for (i, g) in lattice.grades().enumerate() {
                let u = params.shifted_grade(&g);
                family.spaces[i] = Subspace::from_vectors(u.len(), vec![u])?;
            }
        }
        SubmoduleKind::DeltaK => {
            let k = found
                .filter(|&k| k >= 2)
                .ok_or_else(|| mismatch("V(δ_k) with k ≥ 2"))?;
            let builder = DeltaKBuilder::new(rep.algebra(), k)?;
            for (i, g) in lattice.grades().enumerate() {
                family.spaces[i] = builder.space(&params.shifted_grade(&g))?;
            }
        }
    }
    Ok(family)
}

/// Computes `W_u ∩ Ker θ_k` with `W_u = u ∧ Λ^{k−1}`, in the coordinates
/// of `V(δ_k)` (the RREF basis of `Ker θ_k`).
struct DeltaKBuilder {
    /// `e_a ∧ e_J` for every `a` and `(k−1)`-subset `J`: position and sign
    /// in `Λ^k`, or `None` when `a ∈ J`
    wedge: Vec<Vec<Option<(usize, i64)>>>,
    theta: SparseMatrix,
    kernel: Subspace,
    dim: usize,
}

impl DeltaKBuilder {
    fn new(alg: &Arc<SpAlgebra>, k: usize) -> Result<Self> {
        let big = alg.natural_dim();
        let real = fundamental_realization(alg, k)?;
        let theta = contraction_theta(alg, k)?.matrix;
        let index: BTreeMap<Vec<usize>, usize> = combinations(big, k)
            .into_iter()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let lower = combinations(big, k - 1);
        let wedge = (0..big)
            .map(|a| {
                lower
                    .iter()
                    .map(|j| {
                        if j.contains(&a) {
                            return None;
                        }
                        let before = j.iter().filter(|&&x| x < a).count();
                        let mut t = j.clone();
                        t.insert(before, a);
                        let sign = if before % 2 == 0 { 1 } else { -1 };
                        Some((index[&t], sign))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            wedge,
            theta,
            dim: real.module.dim(),
            kernel: real.kernel,
        })
    }

    fn wedge_with(&self, u: &[Scalar], j: usize) -> Vector {
        let mut x = vec![Scalar::ZERO; self.theta.cols()];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            if let Some((pos, sign)) = self.wedge[a][j] {
                if sign > 0 {
                    x[pos] += ua;
                } else {
                    x[pos] -= ua;
                }
            }
        }
        x
    }

    fn space(&self, u: &[Scalar]) -> Result<Subspace> {
        let Some(lead) = u.iter().position(|x| !x.is_zero()) else {
            return Ok(Subspace::full(self.dim));
        };
        // W_u only depends on the line through u
        let u: Vector = match to_primitive(u) {
            Some(p) => p.into_iter().map(Scalar::from_int).collect(),
            None => u.to_vec(),
        };
        // u ∧ e_J over the J avoiding `lead` form a basis of W_u
        let spanning: Vec<Vector> = (0..self.wedge[0].len())
            .filter(|&j| self.wedge[lead][j].is_some())
            .map(|j| self.wedge_with(&u, j))
            .collect();
        let images: Vec<Vector> = spanning.iter().map(|x| self.theta.mul_vec(x)).collect();
        let coeffs = nullspace(&SparseMatrix::from_columns(&images, self.theta.rows()));
        let pivots = self.kernel.pivots();
        let vectors = coeffs
            .basis()
            .iter()
            .map(|c| {
                let mut x = vec![Scalar::ZERO; self.theta.cols()];
                for (cj, s) in c.iter().zip(&spanning) {
                    crate::linalg::axpy(&mut x, cj, s);
                }
                // coordinates in the RREF basis of the kernel
                pivots.iter().map(|&p| x[p].clone()).collect()
            })
            .collect();
        Subspace::from_vectors(self.dim, vectors)
    }
}

/// A nonzero element of `W_r^k ∩ Ker θ_k`, as `u ∧ v_1 ∧ … ∧ v_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Claim2Witness {
    pub k: usize,
    /// `u = r + α` followed by the `v_i`.
    pub factors: Vec<Vector>,
    /// The wedge in `Λ^k` coordinates (lexicographic increasing tuples).
    pub wedge: Vector,
}

/// Builds `u ∧ v_1 ∧ … ∧ v_{k−1}` with each `v_i` the first RREF basis
/// vector of `L(u, v_1, …, v_{i−1})`, where `L(x) = x^⊥ ∩ x̄^⊥` for the
/// standard dot product. The chosen vectors are pairwise orthogonal and
/// nonzero, hence independent, and `(x, ȳ) = 0` for any two of them, so
/// the contraction vanishes. Both facts are re-verified before returning.
pub fn claim2_witness(alg: &Arc<SpAlgebra>, u: &[Scalar], k: usize) -> Result<Claim2Witness> {
    let n = alg.rank();
    let big = alg.natural_dim();
    if u.len() != big {
        return Err(Error::DimensionMismatch {
            expected: big,
            found: u.len(),
        });
    }
    if k < 1 || k > n {
        return Err(Error::DegreeOutOfRange {
            what: "wedge witness",
            degree: k,
            min: 1,
            max: n,
        });
    }
    if is_zero_vector(u) {
        return Err(Error::DegenerateShift);
    }
    let mut factors = vec![u.to_vec()];
    while factors.len() < k {
        let rows: Vec<Vector> = factors
            .iter()
            .flat_map(|v| [v.clone(), bar(v)])
            .collect();
        let l = nullspace(&SparseMatrix::from_dense(&rows, big));
        let v = l
            .basis()
            .first()
            .cloned()
            .ok_or_else(|| Error::NotInSpan(String::from("L(...) is zero")))?;
        factors.push(v);
    }
    let wedge = wedge_vectors(&factors, big);
    if is_zero_vector(&wedge) {
        return Err(Error::NotInSpan(String::from("wedge of the chosen vectors is zero")));
    }
    if k >= 2 {
        let theta = contraction_theta(alg, k)?;
        if !is_zero_vector(&theta.matrix.mul_vec(&wedge)) {
            return Err(Error::NotInvariant(String::from("the contraction kernel")));
        }
    }
    // membership in u ∧ Λ^{k−1}: u ∧ w = 0
    if k < big {
        let mut with_u = factors.clone();
        with_u.push(u.to_vec());
        if !is_zero_vector(&wedge_vectors(&with_u, big)) {
            return Err(Error::NotInSpan(String::from("witness is not divisible by u")));
        }
    }
    Ok(Claim2Witness { k, factors, wedge })
}

/// Random witnesses: `n ∈ {2, …, n_max}`, `2 ≤ k ≤ n`, integer `r`,
/// rational `α`, resampled until `r + α ≠ 0`.
pub fn claim2_sweep(rng: &mut SampleRng, samples: usize, n_max: usize) -> Result<CheckReport> {
    if n_max < 2 {
        return Err(Error::DegreeOutOfRange {
            what: "claim-2 sweep rank",
            degree: n_max,
            min: 2,
            max: usize::MAX,
        });
    }
    let algebras: Vec<Arc<SpAlgebra>> = (2..=n_max)
        .map(|n| SpAlgebra::new(n).map(Arc::new))
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("claim2-witness")
        .param("samples", samples)
        .param("n_max", n_max);
    use rand::Rng;
    for _ in 0..samples {
        let n = rng.gen_range(2..=n_max);
        let k = rng.gen_range(2..=n);
        let alg = &algebras[n - 2];
        let (r, alpha, u) = loop {
            let r = sampling::int_vector(rng, 2 * n, 3);
            let alpha = sampling::rational_vector(rng, 2 * n, 3);
            let u: Vector = r
                .iter()
                .zip(&alpha)
                .map(|(&x, a)| a + &Scalar::from_int(x))
                .collect();
            if !is_zero_vector(&u) {
                break (r, alpha, u);
            }
        };
        match claim2_witness(alg, &u, k) {
            Ok(_) => report.record_pass(),
            Err(e) => report.record_failure(Counterexample {
                r: Some(r),
                alpha: Some(alpha),
                detail: format!("n={n}, k={k}: {e}"),
                ..Counterexample::default()
            }),
        }
    }
    Ok(report)
}

/// `C(2n,k) − C(2n,k−2) > C(2n−1,k−1)` for `2 ≤ k ≤ n ≤ n_max`.
pub fn claim1_inequality(n_max: usize) -> Result<CheckReport> {
    if n_max < 2 {
        return Err(Error::DegreeOutOfRange {
            what: "claim-1 sweep rank",
            degree: n_max,
            min: 2,
            max: usize::MAX,
        });
    }
    let overflow = || Error::Parse(String::from("binomial coefficient overflows u128"));
    let mut report = CheckReport::new("claim1-ineq").param("n_max", n_max);
    for n in 2..=n_max as u64 {
        for k in 2..=n {
            let dim = binomial(2 * n, k)
                .ok_or_else(overflow)?
                .checked_sub(binomial(2 * n, k - 2).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
            let w = binomial(2 * n - 1, k - 1).ok_or_else(overflow)?;
            let holds = dim > w;
            let rel = if holds { ">" } else { "≤" };
            report.record_entry(format!("n={n}, k={k}: {dim} {rel} {w}"), holds);
        }
    }
    Ok(report)
}

/// Probe verdicts. `Full` is evidence only; `Proper` comes with a family
/// that is closed under every modeled generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "UPPERCASE"))]
pub enum Verdict {
    Full,
    Proper,
    Inconclusive,
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Self::Full => "FULL",
            Self::Proper => "PROPER",
            Self::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SeedStatus {
    /// every inner grade holds all of `V`
    Full,
    /// nonzero and short of `V` somewhere on the inner box, unchanged when
    /// the box grows by one
    Proper,
    /// short of `V` somewhere, but the inner profile moved when the box grew
    Unstable,
    /// zero on the whole inner box
    ZeroInner,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeedReport {
    pub label: String,
    pub seed: GradedVector,
    /// dimensions over the inner box, lexicographic grade order
    pub profile: Vec<usize>,
    /// how many inner grades have each dimension
    pub histogram: BTreeMap<usize, usize>,
    pub status: SeedStatus,
    /// whether the closure ran to its fixed point (it may stop early once
    /// the inner box is full)
    pub saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProbeReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub box_radius: i64,
    pub gen_radius: i64,
    pub inner_radius: i64,
    pub dim: usize,
    pub seeds: Vec<SeedReport>,
    pub verdict: Verdict,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct ProbeOptions {
    pub extra_seeds: usize,
    pub rng_seed: u64,
    /// Rerun deficient seeds on a box one larger and require the same inner
    /// profile before calling them proper.
    pub confirm: bool,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        Self {
            extra_seeds: 4,
            rng_seed: sampling::DEFAULT_SEED,
            confirm: true,
        }
    }
}

/// Probe output with the closure family of every seed.
#[derive(Clone, Debug)]
pub struct ProbeOutcome {
    pub report: ProbeReport,
    pub families: Vec<TruncatedModule>,
}

/// Grade-0 seeds: every basis vector of `V`, then `extra` random rational
/// combinations.
pub fn probe_seeds(params: &ModuleParams, extra: usize, rng_seed: u64) -> Vec<(String, GradedVector)> {
    let rep = params.rep();
    let dim = rep.dim();
    let zero = vec![0i64; params.lattice_dim()];
    let mut seeds: Vec<(String, GradedVector)> = (0..dim)
        .map(|i| {
            (
                rep.labels()[i].clone(),
                GradedVector::new(zero.clone(), crate::linalg::unit_vector(dim, i)),
            )
        })
        .collect();
    let mut rng = sampling::rng(rng_seed);
    for i in 0..extra {
        seeds.push((
            format!("random{}", i + 1),
            GradedVector::new(zero.clone(), sampling::nonzero_rational_vector(&mut rng, dim, 3)),
        ));
    }
    seeds
}

/// Closure of one seed and its classification on the inner box.
pub fn probe_one(
    module: &ShenLarssonModule,
    label: &str,
    seed: &GradedVector,
    lattice: &LatticeBox,
    gens: &GeneratorSet,
    confirm: bool,
) -> Result<(SeedReport, TruncatedModule)> {
    let inner = lattice
        .shrink(gens.radius())
        .ok_or(Error::InvalidRadius)?;
    let dim = module.rep().dim();
    let (family, saturated) = closure_until(module, core::slice::from_ref(seed), lattice, gens, Some(&inner))?;
    let profile = family.profile(&inner);
    let mut histogram = BTreeMap::new();
    for &d in &profile {
        *histogram.entry(d).or_insert(0) += 1;
    }
    let status = if profile.iter().all(|&d| d == dim) {
        SeedStatus::Full
    } else if profile.iter().all(|&d| d == 0) {
        SeedStatus::ZeroInner
    } else if !confirm {
        SeedStatus::Proper
    } else {
        let bigger = closure(module, core::slice::from_ref(seed), &lattice.enlarge(1), gens)?;
        if bigger.profile(&inner) == profile {
            SeedStatus::Proper
        } else {
            SeedStatus::Unstable
        }
    };
    Ok((
        SeedReport {
            label: label.to_string(),
            seed: seed.clone(),
            profile,
            histogram,
            status,
            saturated,
        },
        family,
    ))
}

pub fn probe_verdict(seeds: &[SeedReport]) -> Verdict {
    if seeds.iter().all(|s| s.status == SeedStatus::Full) {
        Verdict::Full
    } else if seeds.iter().any(|s| s.status == SeedStatus::Proper) {
        Verdict::Proper
    } else {
        Verdict::Inconclusive
    }
}

pub fn assemble_probe_report(
    params: &ModuleParams,
    lattice: &LatticeBox,
    gens: &GeneratorSet,
    options: &ProbeOptions,
    seeds: Vec<SeedReport>,
) -> ProbeReport {
    let verdict = probe_verdict(&seeds);
    let note = match verdict {
        Verdict::Full => "every seed fills the inner box; consistent with irreducibility, not a proof (finite truncation)",
        Verdict::Proper => "a seed generates a nonzero family closed under all modeled generators and short of V on the inner box",
        Verdict::Inconclusive => "deficient seeds exist but none is stable under enlarging the box",
    };
    let base = params
        .describe(CheckReport::new("probe"))
        .param("extra_seeds", options.extra_seeds)
        .param("rng_seed", options.rng_seed)
        .param("confirm", options.confirm);
    ProbeReport {
        check: String::from("probe"),
        params: base.params,
        box_radius: lattice.radius(),
        gen_radius: gens.radius(),
        inner_radius: lattice.radius() - gens.radius(),
        dim: params.rep().dim(),
        seeds,
        verdict,
        note: String::from(note),
    }
}

/// Runs every seed in order and collects the report and families.
pub fn irreducibility_probe(
    params: &ModuleParams,
    lattice: &LatticeBox,
    gens: &GeneratorSet,
    options: &ProbeOptions,
) -> Result<ProbeOutcome> {
    if gens.radius() > lattice.radius() {
        return Err(Error::InvalidRadius);
    }
    let module = ShenLarssonModule::with_cache(params.clone(), gens.gens())?;
    let mut seeds = Vec::new();
    let mut families = Vec::new();
    for (label, seed) in probe_seeds(params, options.extra_seeds, options.rng_seed) {
        let (r, f) = probe_one(&module, &label, &seed, lattice, gens, options.confirm)?;
        seeds.push(r);
        families.push(f);
    }
    Ok(ProbeOutcome {
        report: assemble_probe_report(params, lattice, gens, options, seeds),
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::fundamental_rep;
    use crate::scalar::q;
    use crate::symplectic::int_vector;

    fn alg(n: usize) -> Arc<SpAlgebra> {
        Arc::new(SpAlgebra::new(n).unwrap())
    }

    fn params(rep: Representation, alpha: Vector) -> ModuleParams {
        let big = alpha.len();
        ModuleParams::new(Arc::new(rep), alpha, vec![Scalar::ZERO; big]).unwrap()
    }

    #[test]
    fn box_indexing() {
        let b = LatticeBox::new(3, 2).unwrap();
        assert_eq!(b.len(), 125);
        for (i, g) in b.grades().enumerate() {
            assert_eq!(b.index_of(&g), Some(i));
        }
        assert_eq!(b.grade_at(0), vec![-2, -2, -2]);
        assert!(b.index_of(&[3, 0, 0]).is_none());
        assert_eq!(b.shrink(2).unwrap().len(), 1);
        assert!(b.shrink(3).is_none());
        assert!(LatticeBox::new(2, 0).is_err());
        let g = GeneratorSet::new(2, 1).unwrap();
        assert_eq!(g.len(), 8);
        assert!(g.gens().iter().all(|r| r.iter().any(|&x| x != 0)));
    }

    #[test]
    fn closure_examples() {
        let a1 = alg(1);
        let lattice = LatticeBox::new(2, 3).unwrap();
        let gens = GeneratorSet::new(2, 2).unwrap();
        // no seeds
        let p = params(Representation::trivial(a1.clone()), vec![q(1, 2), Scalar::ZERO]);
        let m = ShenLarssonModule::new(p.clone());
        assert!(closure(&m, &[], &lattice, &gens).unwrap().is_zero());
        // generic alpha: the line fills the inner box
        let seed = GradedVector::new(vec![0, 0], vec![Scalar::ONE]);
        let f = closure(&m, &[seed], &lattice, &gens).unwrap();
        let inner = lattice.shrink(2).unwrap();
        assert!(f.profile(&inner).iter().all(|&d| d == 1));
        // integral alpha: the line at −α is closed
        let p = params(Representation::trivial(a1), int_vector(&[1, -1]));
        let m = ShenLarssonModule::new(p.clone());
        let seed = GradedVector::new(vec![-1, 1], vec![Scalar::ONE]);
        let f = closure(&m, &[seed], &lattice, &gens).unwrap();
        let line = build_submodule(SubmoduleKind::TrivialLine, &p, &lattice).unwrap();
        assert_eq!(f, line);
        let outside = GradedVector::new(vec![4, 0], vec![Scalar::ONE]);
        assert!(matches!(closure(&m, &[outside], &lattice, &gens), Err(Error::SeedOutsideBox(_))));
    }

    #[test]
    fn delta1_family() {
        let a1 = alg(1);
        let p = params(Representation::natural(a1), vec![q(1, 2), q(1, 2)]);
        let lattice = LatticeBox::new(2, 3).unwrap();
        let f = build_submodule(SubmoduleKind::Delta1, &p, &lattice).unwrap();
        let s0 = f.space(&[0, 0]).unwrap();
        assert_eq!(s0.dim(), 1);
        assert!(s0.contains(&[q(1, 2), q(1, 2)]).unwrap());
        let m = ShenLarssonModule::new(p.clone());
        let x = GradedVector::new(vec![0, 0], vec![q(1, 2), q(1, 2)]);
        let y = m.act_h(&[1, 0], &x).unwrap();
        assert_eq!(y.payload, vec![q(-3, 4), q(-1, 4)]);
        assert!(f.space(&[1, 0]).unwrap().contains(&y.payload).unwrap());
        let gens = GeneratorSet::new(2, 2).unwrap();
        assert!(invariance_check(&f, &gens, InvarianceStrategy::Exhaustive).unwrap().passed());
        // kind mismatch
        assert!(build_submodule(SubmoduleKind::DeltaK, &p, &lattice).is_err());
        assert!(build_submodule(SubmoduleKind::TrivialLine, &p, &lattice).is_err());
    }

    #[test]
    fn deltak_bounds() {
        let a2 = alg(2);
        let v = fundamental_rep(&a2, 2).unwrap();
        let p = params(v, vec![q(1, 3), Scalar::ZERO, Scalar::ZERO, Scalar::ZERO]);
        let lattice = LatticeBox::new(4, 1).unwrap();
        let f = build_submodule(SubmoduleKind::DeltaK, &p, &lattice).unwrap();
        for s in f.spaces() {
            assert!(s.dim() >= 1 && s.dim() <= 4, "{}", s.dim());
        }
        let gens = GeneratorSet::new(4, 1).unwrap();
        let ex = invariance_check(&f, &gens, InvarianceStrategy::Exhaustive).unwrap();
        let red = invariance_check(&f, &gens, InvarianceStrategy::Reduced).unwrap();
        assert!(ex.passed() && red.passed());
        assert!(red.samples < ex.samples);
    }

    #[test]
    fn invariance_trivial_families() {
        let a1 = alg(1);
        let p = params(Representation::natural(a1), vec![q(1, 2), Scalar::ZERO]);
        let lattice = LatticeBox::new(2, 2).unwrap();
        let gens = GeneratorSet::new(2, 1).unwrap();
        for f in [TruncatedModule::zero(p.clone(), lattice), TruncatedModule::full(p.clone(), lattice)] {
            for s in [InvarianceStrategy::Exhaustive, InvarianceStrategy::Reduced] {
                assert!(invariance_check(&f, &gens, s).unwrap().passed());
            }
        }
    }

    #[test]
    fn reduced_detects_violations() {
        // perturb a valid family at single grades; both strategies must fail
        let a2 = alg(2);
        let v = fundamental_rep(&a2, 2).unwrap();
        let p = params(v, vec![q(1, 2), Scalar::ZERO, q(-1, 3), Scalar::ZERO]);
        let lattice = LatticeBox::new(4, 2).unwrap();
        let gens = GeneratorSet::new(4, 2).unwrap();
        let good = build_submodule(SubmoduleKind::DeltaK, &p, &lattice).unwrap();
        for g in [[0, 0, 0, 0], [2, -2, 1, 0], [-2, -2, -2, -2], [1, 2, 0, -1]] {
            let mut bad = good.clone();
            bad.set_space(&g, Subspace::zero(5)).unwrap();
            let ex = invariance_check(&bad, &gens, InvarianceStrategy::Exhaustive).unwrap();
            let red = invariance_check(&bad, &gens, InvarianceStrategy::Reduced).unwrap();
            assert!(!ex.passed(), "{g:?}");
            assert!(!red.passed(), "{g:?}");
        }
    }

    #[test]
    fn reduced_agrees_with_exhaustive() {
        use rand::Rng;
        let a2 = alg(2);
        let lattice = LatticeBox::new(4, 2).unwrap();
        let gens = GeneratorSet::new(4, 2).unwrap();
        let alpha = vec![q(1, 2), Scalar::ZERO, q(-1, 3), Scalar::ONE];
        let p2 = params(fundamental_rep(&a2, 2).unwrap(), alpha.clone());
        let p1 = params(Representation::natural(a2), alpha);
        let bases = [
            build_submodule(SubmoduleKind::DeltaK, &p2, &lattice).unwrap(),
            build_submodule(SubmoduleKind::Delta1, &p1, &lattice).unwrap(),
            TruncatedModule::full(p1.clone(), lattice),
            TruncatedModule::zero(p2.clone(), lattice),
        ];
        let mut rng = sampling::rng(11);
        let mut failures = 0;
        for trial in 0..48 {
            let mut f = bases[trial % bases.len()].clone();
            let dim = f.params().rep().dim();
            // bias toward the boundary, where the reduced plan tests least
            let g: Vec<i64> = (0..4)
                .map(|_| if rng.gen_bool(0.5) { [-2, 2][rng.gen_range(0..2)] } else { rng.gen_range(-2..=2) })
                .collect();
            let old = f.space(&g).unwrap().clone();
            let new = match trial % 3 {
                0 => Subspace::zero(dim),
                1 => {
                    let mut s = old.clone();
                    s.insert(&sampling::nonzero_rational_vector(&mut rng, dim, 2)).unwrap();
                    s
                }
                _ => Subspace::from_vectors(dim, old.basis().iter().skip(1).cloned().collect()).unwrap(),
            };
            f.set_space(&g, new).unwrap();
            let ex = invariance_check(&f, &gens, InvarianceStrategy::Exhaustive).unwrap();
            let red = invariance_check(&f, &gens, InvarianceStrategy::Reduced).unwrap();
            assert_eq!(ex.passed(), red.passed(), "trial {trial} at {g:?}");
            failures += usize::from(!ex.passed());
        }
        assert!(failures > 20);
    }

    #[test]
    fn claim2_examples() {
        let a2 = alg(2);
        let u = int_vector(&[1, 0, 0, 0]);
        let w = claim2_witness(&a2, &u, 2).unwrap();
        assert_eq!(w.factors[1], int_vector(&[0, 1, 0, 0]));
        let w1 = claim2_witness(&a2, &u, 1).unwrap();
        assert_eq!(w1.wedge, u);
        assert_eq!(claim2_witness(&a2, &int_vector(&[0; 4]), 2), Err(Error::DegenerateShift));
        let r = claim2_sweep(&mut sampling::rng(4), 30, 3).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn claim1_examples() {
        let r = claim1_inequality(3).unwrap();
        assert!(r.passed());
        assert!(r.entries.iter().any(|e| e.label == "n=2, k=2: 5 > 3"));
        assert!(r.entries.iter().any(|e| e.label == "n=3, k=3: 14 > 10"));
        assert!(claim1_inequality(1).is_err());

        // Pascal's triangle as the oracle: the bound holds for k < n but
        // breaks on the diagonal k = n from n = 6 on
        let mut pascal = vec![vec![1u128]];
        for m in 1..=20usize {
            let prev = &pascal[m - 1];
            let row = (0..=m)
                .map(|j| if j == 0 || j == m { 1 } else { prev[j - 1] + prev[j] })
                .collect();
            pascal.push(row);
        }
        let r = claim1_inequality(10).unwrap();
        let mut entries = r.entries.iter();
        for n in 2..=10usize {
            for k in 2..=n {
                let e = entries.next().unwrap();
                let holds = pascal[2 * n][k] - pascal[2 * n][k - 2] > pascal[2 * n - 1][k - 1];
                assert_eq!(e.passed, holds, "{}", e.label);
                assert_eq!(holds, k < n || n < 6, "n={n}, k={k}");
            }
        }
        assert!(r.entries.iter().any(|e| e.label == "n=6, k=6: 429 ≤ 462"));
    }

    #[test]
    fn probe_small_cases() {
        let a1 = alg(1);
        let lattice = LatticeBox::new(2, 3).unwrap();
        let gens = GeneratorSet::new(2, 2).unwrap();
        let opts = ProbeOptions::default();
        let p = params(Representation::trivial(a1.clone()), vec![q(1, 2), Scalar::ZERO]);
        let out = irreducibility_probe(&p, &lattice, &gens, &opts).unwrap();
        assert_eq!(out.report.verdict, Verdict::Full);
        let p = params(Representation::trivial(a1.clone()), int_vector(&[1, 1]));
        let out = irreducibility_probe(&p, &lattice, &gens, &opts).unwrap();
        assert_eq!(out.report.verdict, Verdict::Proper);
        let p = params(Representation::natural(a1), vec![q(1, 2), Scalar::ZERO]);
        let out = irreducibility_probe(&p, &lattice, &gens, &opts).unwrap();
        assert_eq!(out.report.verdict, Verdict::Proper);
        let d1 = build_submodule(SubmoduleKind::Delta1, &p, &lattice).unwrap();
        let inner = lattice.shrink(2).unwrap();
        assert!(out.families.iter().any(|f| f.equals_on(&d1, &inner).unwrap()));
    }
}
