//! Runnable identity checks grouped into suites, in exact mode or at seeded
//! rational sample points.

mod checks;
mod report;
mod residual;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;

pub use checks::{casimir_highest_weight_value, Bracket};
pub use report::{CheckParams, CheckResult, ConfigEcho, SuiteReport};
pub use residual::Residual;

use crate::algebra::AlgebraError;
use crate::arith::{resample, sample_points, ArithError, Exact, SamplePoint, Specialization};
use crate::repr::{four_leg_casimirs, intermediate_casimirs, Braiding, Mat, ReprError, TensorContext};
use checks::{Outcome, Recorder, SymbolicOutcome};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}' (expected one of structure, rmatrix, theorem, tau, aw3, aw3-symbolic, aw4, all)")]
    UnknownSuite(String),
    #[error("suite {suite} needs {expected} spins, got {found}")]
    Arity { suite: Suite, expected: &'static str, found: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl VerifyError {
    /// Failures caused by an unlucky sample point rather than the identity.
    fn is_degenerate_point(&self) -> bool {
        matches!(
            self,
            VerifyError::Arith(ArithError::Pole(_) | ArithError::DivisionByZero)
                | VerifyError::Repr(ReprError::Singular | ReprError::Arith(_))
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Structure,
    RMatrix,
    Theorem,
    Tau,
    Aw3,
    Aw3Symbolic,
    Aw4,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Structure,
        Suite::RMatrix,
        Suite::Theorem,
        Suite::Tau,
        Suite::Aw3,
        Suite::Aw3Symbolic,
        Suite::Aw4,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::RMatrix => "rmatrix",
            Suite::Theorem => "theorem",
            Suite::Tau => "tau",
            Suite::Aw3 => "aw3",
            Suite::Aw3Symbolic => "aw3-symbolic",
            Suite::Aw4 => "aw4",
            Suite::All => "all",
        }
    }

    /// Human-readable spin count requirement.
    pub fn arity_requirement(self) -> &'static str {
        match self {
            Suite::Structure => "at least 1",
            Suite::RMatrix => "2 or 3",
            Suite::Theorem | Suite::Aw3 | Suite::All => "exactly 3",
            Suite::Tau => "exactly 2",
            Suite::Aw4 => "exactly 4",
            Suite::Aw3Symbolic => "any number of",
        }
    }

    pub fn accepts_arity(self, n: usize) -> bool {
        match self {
            Suite::Structure => n >= 1,
            Suite::RMatrix => n == 2 || n == 3,
            Suite::Theorem | Suite::Aw3 | Suite::All => n == 3,
            Suite::Tau => n == 2,
            Suite::Aw4 => n == 4,
            Suite::Aw3Symbolic => true,
        }
    }

    pub fn check_arity(self, n: usize) -> Result<(), VerifyError> {
        if self.accepts_arity(n) {
            Ok(())
        } else {
            Err(VerifyError::Arity { suite: self, expected: self.arity_requirement(), found: n })
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Exact rational arithmetic at `points` seeded sample values of `s`.
    Eval {
        points: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub spins: Vec<u32>,
    pub mode: Mode,
    /// Test fixture: perturb one `E` entry in every representation context.
    pub negative_control: bool,
}

impl VerifyConfig {
    pub fn exact(suite: Suite, spins: &[u32]) -> Self {
        Self { suite, spins: spins.to_vec(), mode: Mode::Exact, negative_control: false }
    }

    pub fn eval(suite: Suite, spins: &[u32], points: usize, seed: u64) -> Self {
        Self { suite, spins: spins.to_vec(), mode: Mode::Eval { points, seed }, negative_control: false }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        self.suite.check_arity(self.spins.len())?;
        if let Mode::Eval { points: 0, .. } = self.mode {
            return Err(VerifyError::InvalidConfig("eval mode needs at least one sample point".into()));
        }
        if self.negative_control && self.suite != Suite::Aw3Symbolic && self.spins.iter().all(|&t| t == 0) {
            return Err(VerifyError::InvalidConfig("negative control needs a leg with nonzero spin".into()));
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        let (mode, points, seed) = match self.mode {
            Mode::Exact => ("exact", 0, 0),
            Mode::Eval { points, seed } => ("eval", points, seed),
        };
        ConfigEcho {
            suite: self.suite.name().to_string(),
            spins: self.spins.clone(),
            mode: mode.to_string(),
            points,
            seed,
            negative_control: self.negative_control,
        }
    }
}

/// Which representation families run, and on which spins.
#[derive(Clone, Debug, Default)]
struct Plan {
    structure: Option<Vec<u32>>,
    rmatrix: Option<Vec<u32>>,
    /// Theorem and AW(3) share the intermediate Casimirs of one context.
    theorem: Option<Vec<u32>>,
    aw3: Option<Vec<u32>>,
    tau: Option<(Vec<u32>, Vec<u32>)>,
    aw4: Option<Vec<u32>>,
    symbolic_structure: bool,
    symbolic_aw3: bool,
}

impl Plan {
    fn new(suite: Suite, spins: &[u32]) -> Self {
        let s = spins.to_vec();
        let mut p = Plan::default();
        match suite {
            Suite::Structure => {
                p.structure = Some(s);
                p.symbolic_structure = true;
            }
            Suite::RMatrix => p.rmatrix = Some(s),
            Suite::Theorem => p.theorem = Some(s),
            Suite::Tau => {
                let mut three = s.clone();
                three.push(*s.last().expect("two spins"));
                p.tau = Some((s, three));
            }
            Suite::Aw3 => p.aw3 = Some(s),
            Suite::Aw3Symbolic => p.symbolic_aw3 = true,
            Suite::Aw4 => p.aw4 = Some(s),
            Suite::All => {
                p.structure = Some(s.clone());
                p.rmatrix = Some(s.clone());
                p.theorem = Some(s.clone());
                p.aw3 = Some(s.clone());
                p.tau = Some((s[..2].to_vec(), s));
                p.symbolic_structure = true;
                p.symbolic_aw3 = true;
            }
        }
        p
    }
}

type Task<'a> = Box<dyn FnOnce() -> Result<Vec<Outcome>, VerifyError> + Send + 'a>;

fn context<S: Specialization>(spins: &[u32], spec: &S, negative: bool) -> Result<TensorContext<S>, VerifyError> {
    let ctx = TensorContext::new(spins, spec.clone())?;
    Ok(if negative { ctx.with_perturbed_e()? } else { ctx })
}

/// Runs every representation family of the plan under one specialization.
fn run_repr<S: Specialization>(plan: &Plan, spec: &S, negative: bool) -> Result<Vec<Outcome>, VerifyError> {
    // The three-leg context is shared by rmatrix, theorem, aw3 and tau
    // whenever their spins coincide.
    let shared_spins = plan.theorem.as_ref().or(plan.aw3.as_ref());
    let shared = match shared_spins {
        Some(spins) => {
            let ctx = context(spins, spec, negative)?;
            let br = Braiding::new(&ctx)?;
            let cas = intermediate_casimirs(&ctx, &br)?;
            Some((ctx, br, cas))
        }
        None => None,
    };

    let mut tasks: Vec<Task> = Vec::new();
    if let Some(spins) = &plan.structure {
        tasks.push(Box::new(move || {
            let ctx = context(spins, spec, negative)?;
            let mut rec = Recorder::new("structure", spins);
            checks::structure_repr(&ctx, &mut rec)?;
            Ok(rec.out)
        }));
    }
    if let Some(spins) = &plan.rmatrix {
        let shared = shared.as_ref().filter(|(c, _, _)| c.spins() == spins.as_slice());
        tasks.push(Box::new(move || {
            let mut rec = Recorder::new("rmatrix", spins);
            match shared {
                Some((ctx, br, _)) => checks::rmatrix_repr(ctx, br, &mut rec)?,
                None => {
                    let ctx = context(spins, spec, negative)?;
                    checks::rmatrix_repr(&ctx, &Braiding::new(&ctx)?, &mut rec)?;
                }
            }
            Ok(rec.out)
        }));
    }
    if let (Some(spins), Some((ctx, br, cas))) = (&plan.theorem, &shared) {
        tasks.push(Box::new(move || {
            let mut rec = Recorder::new("theorem", spins);
            checks::theorem_repr(ctx, br, cas, &mut rec)?;
            Ok(rec.out)
        }));
    }
    if let (Some(spins), Some((ctx, _, cas))) = (&plan.aw3, &shared) {
        tasks.push(Box::new(move || {
            let mut rec = Recorder::new("aw3", spins);
            checks::aw3_repr(ctx, cas, &mut rec)?;
            Ok(rec.out)
        }));
    }
    if let Some((spins2, spins3)) = &plan.tau {
        let shared = shared.as_ref().filter(|(c, _, _)| c.spins() == spins3.as_slice());
        tasks.push(Box::new(move || {
            let ctx2 = context(spins2, spec, negative)?;
            let br2 = Braiding::new(&ctx2)?;
            let mut rec2 = Recorder::new("tau", spins2);
            let mut rec3 = Recorder::new("tau", spins3);
            match shared {
                Some((ctx3, br3, _)) => checks::tau_repr(&ctx2, &br2, &mut rec2, ctx3, br3, &mut rec3)?,
                None => {
                    let ctx3 = context(spins3, spec, negative)?;
                    let br3 = Braiding::new(&ctx3)?;
                    checks::tau_repr(&ctx2, &br2, &mut rec2, &ctx3, &br3, &mut rec3)?;
                }
            }
            rec2.out.extend(rec3.out);
            Ok(rec2.out)
        }));
    }
    if let Some(spins) = &plan.aw4 {
        tasks.push(Box::new(move || {
            let ctx = context(spins, spec, negative)?;
            let br = Braiding::new(&ctx)?;
            let cas = four_leg_casimirs(&ctx, &br)?;
            let mut rec = Recorder::new("aw4", spins);
            checks::aw4_repr(&cas, &mut rec)?;
            Ok(rec.out)
        }));
    }

    let results: Vec<Result<Vec<Outcome>, VerifyError>> = tasks.into_par_iter().map(|t| t()).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn run_symbolic(plan: &Plan) -> Result<Vec<SymbolicOutcome>, VerifyError> {
    let mut out = Vec::new();
    if plan.symbolic_structure {
        out.extend(checks::structure_symbolic("structure")?);
    }
    if plan.symbolic_aw3 {
        out.extend(checks::aw3_symbolic("aw3-symbolic")?);
    }
    Ok(out)
}

fn millis(d: Duration) -> u64 {
    d.as_millis().try_into().unwrap_or(u64::MAX)
}

fn exact_result(o: Outcome) -> CheckResult {
    CheckResult {
        name: o.name,
        params: CheckParams { spins: o.spins, mode: "exact".into(), sample_points: 0, failing_points: 0 },
        passed: o.residual.is_zero(),
        residual_terms: o.residual.terms,
        witness: o.residual.witness,
        runtime_ms: millis(o.elapsed),
    }
}

/// Merges per-point outcomes of one check.
/// One check's residual and runtime at one sample point.
type PointResult<'a> = (&'a SamplePoint, Residual, Duration);

fn merge_points(name: String, spins: Vec<u32>, per_point: Vec<PointResult<'_>>) -> CheckResult {
    let sample_points = per_point.len();
    let mut terms = 0;
    let mut failing = 0;
    let mut witness = None;
    let mut elapsed = Duration::ZERO;
    for (pt, r, d) in per_point {
        elapsed += d;
        terms = terms.max(r.terms);
        if !r.is_zero() {
            failing += 1;
            if witness.is_none() {
                witness = r.witness.map(|w| format!("s = {pt}: {w}"));
            }
        }
    }
    CheckResult {
        name,
        params: CheckParams { spins, mode: "eval".into(), sample_points, failing_points: failing },
        passed: terms == 0,
        residual_terms: terms,
        witness,
        runtime_ms: millis(elapsed),
    }
}

/// Attempts per sample slot before giving up on degenerate points.
const MAX_RESAMPLE: u64 = 8;

fn run_at_point(
    plan: &Plan,
    negative: bool,
    seed: u64,
    slot: usize,
    first: SamplePoint,
) -> Result<(SamplePoint, Vec<Outcome>), VerifyError> {
    let mut pt = first;
    let mut attempt = 0;
    loop {
        match run_repr(plan, &pt, negative) {
            Ok(o) => return Ok((pt, o)),
            Err(e) if e.is_degenerate_point() && attempt < MAX_RESAMPLE => {
                pt = resample(seed, slot as u64 * MAX_RESAMPLE + attempt);
                attempt += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Runs a suite. Checks are independent and may execute concurrently; the
/// report is sorted by check name.
pub fn run_suite(config: &VerifyConfig) -> Result<SuiteReport, VerifyError> {
    config.validate()?;
    let plan = Plan::new(config.suite, &config.spins);
    let symbolic = run_symbolic(&plan)?;
    let mut results: Vec<CheckResult> = match config.mode {
        Mode::Exact => {
            let mut out: Vec<CheckResult> =
                run_repr(&plan, &Exact, config.negative_control)?.into_iter().map(exact_result).collect();
            out.extend(symbolic.into_iter().map(|s| CheckResult {
                params: CheckParams { spins: Vec::new(), mode: "exact".into(), sample_points: 0, failing_points: 0 },
                passed: s.residual.is_zero(),
                residual_terms: s.residual.len(),
                witness: Residual::of_tensor(&s.name, &s.residual).witness,
                runtime_ms: millis(s.elapsed),
                name: s.name,
            }));
            out
        }
        Mode::Eval { points, seed } => {
            let pts = sample_points(seed, points);
            let runs = pts
                .into_par_iter()
                .enumerate()
                .map(|(slot, pt)| run_at_point(&plan, config.negative_control, seed, slot, pt))
                .collect::<Result<Vec<_>, _>>()?;
            let mut by_name: BTreeMap<String, (Vec<u32>, Vec<PointResult>)> = BTreeMap::new();
            for (pt, outcomes) in &runs {
                for o in outcomes {
                    by_name.entry(o.name.clone()).or_insert_with(|| (o.spins.clone(), Vec::new())).1.push((
                        pt,
                        o.residual.clone(),
                        o.elapsed,
                    ));
                }
            }
            for s in &symbolic {
                let share = s.elapsed / runs.len() as u32;
                let per_point = runs
                    .iter()
                    .map(|(pt, _)| (pt, Residual::of_tensor_at(&s.name, &s.residual, pt.value()), share))
                    .collect();
                by_name.insert(s.name.clone(), (Vec::new(), per_point));
            }
            by_name.into_iter().map(|(name, (spins, pp))| merge_points(name, spins, pp)).collect()
        }
    };
    if config.suite == Suite::All {
        results.push(coverage(&results, &config.spins));
    }
    Ok(SuiteReport::new(config.suite.name(), config.echo(), results))
}

/// The representation-mode first AW(3) relation is implied by the symbolic
/// identity and the morphism property of `represent`; a disagreement between
/// the two verdicts is an internal error.
fn coverage(results: &[CheckResult], spins: &[u32]) -> CheckResult {
    let find = |n: &str| results.iter().find(|c| c.name == n).map(|c| c.passed);
    let symbolic = find("aw3-symbolic.bracket_c12_c23");
    let repr = find("aw3.bracket_c12_c23");
    let morphism = find("structure.represent_morphism");
    let residual = match (symbolic, repr, morphism) {
        (Some(true), Some(false), Some(true)) => {
            Residual::failure("internal error: symbolic identity holds but its representation fails")
        }
        (Some(false), Some(true), _) => {
            Residual::failure("internal error: representation passes but the symbolic identity fails")
        }
        (Some(_), Some(_), Some(_)) => Residual::zero(),
        _ => Residual::failure("internal error: coverage inputs missing"),
    };
    CheckResult {
        name: "all.coverage".into(),
        params: CheckParams {
            spins: spins.to_vec(),
            mode: results.first().map(|c| c.params.mode.clone()).unwrap_or_default(),
            sample_points: results.first().map(|c| c.params.sample_points).unwrap_or(0),
            failing_points: 0,
        },
        passed: residual.is_zero(),
        residual_terms: residual.terms,
        witness: residual.witness,
        runtime_ms: 0,
    }
}

/// Residuals of the first AW(3) relation under the chosen and the
/// alternative bracket conventions on an exact three-leg context.
pub fn bracket_calibration_exact(spins: &[u32]) -> Result<(Residual, Residual), VerifyError> {
    Suite::Aw3.check_arity(spins.len())?;
    let ctx = TensorContext::new(spins, Exact)?;
    let br = Braiding::new(&ctx)?;
    let cas = intermediate_casimirs(&ctx, &br)?;
    let (chosen, alternative): (Mat<Exact>, Mat<Exact>) = checks::bracket_calibration(&ctx, &cas)?;
    Ok((Residual::of_matrix("chosen", &chosen), Residual::of_matrix("alternative", &alternative)))
}
