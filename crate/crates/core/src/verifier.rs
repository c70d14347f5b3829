//! Verification of catalog identities at fixed structural parameters.
//!
//! Symbolic mode expands both sides and compares canonical forms. Numeric
//! mode evaluates both sides exactly at seeded random rational points, using
//! the numeric summand instances (no expansion), so it is an independent
//! check of the same formulas.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, Bindings, IdentityDescriptor, Mutation, SideKind, StatusFlag, StructuralParams};
use crate::error::{Error, Result};
use crate::poly::{Assignment, Polynomial, Q};
use crate::rational::Rational;
use crate::ring::{Point, Symbolic};

/// Default cap on the number of monomials in any summand or partial sum.
pub const DEFAULT_TERM_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "numeric" => Ok(Mode::Numeric),
            other => Err(format!("unknown mode `{other}` (expected symbolic or numeric)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A flagged identity whose sides differ by exactly the frozen amount.
    KnownDiscrepantConfirmed,
    /// A mutated identity that still verified.
    MutationInconclusive,
    /// The term budget ran out; no verdict.
    Aborted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::KnownDiscrepantConfirmed => "known_discrepant_confirmed",
            Status::MutationInconclusive => "mutation_inconclusive",
            Status::Aborted => "aborted",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationResult {
    pub identity: String,
    pub params: StructuralParams,
    pub mode: Mode,
    pub status: Status,
    /// Monomial counts of the expanded sides; symbolic mode only.
    pub lhs_monomials: Option<usize>,
    pub rhs_monomials: Option<usize>,
    /// A point where the sides disagree (numeric failures only).
    pub witness: Option<Assignment>,
    pub elapsed_ms: u64,
    /// Seed of this cell's generator.
    pub seed: u64,
    /// `LHS - RHS` when nonzero (symbolic mode only).
    pub difference: Option<Polynomial>,
    pub mutation: Option<Mutation>,
}

impl VerificationResult {
    pub fn is_failure(&self) -> bool {
        matches!(self.status, Status::Fail | Status::Aborted)
    }
}

/// Per-cell knobs shared by every entry point.
#[derive(Clone, Copy, Debug)]
pub struct CellOptions {
    pub trials: usize,
    pub seed: u64,
    pub budget: usize,
}

impl Default for CellOptions {
    fn default() -> Self {
        CellOptions { trials: 20, seed: 0, budget: DEFAULT_TERM_BUDGET }
    }
}

// FNV-1a, so each cell gets its own stream independent of scheduling.
fn cell_seed(seed: u64, identity: &str, params: &StructuralParams) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in identity.bytes().chain(*b"|").chain(params.to_string().bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        if nonzero && n == 0 {
            continue;
        }
        return Rational::new(n, d).expect("positive denominator");
    }
}

/// Draws a value for every variable, `q` nonzero.
pub fn random_point(vars: &[String], rng: &mut ChaCha8Rng) -> Assignment {
    vars.iter().map(|v| (v.clone(), random_rational(rng, v == Q))).collect()
}

struct Outcome {
    status: Status,
    lhs_monomials: Option<usize>,
    rhs_monomials: Option<usize>,
    witness: Option<Assignment>,
    difference: Option<Polynomial>,
}

impl Outcome {
    fn aborted() -> Self {
        Outcome { status: Status::Aborted, lhs_monomials: None, rhs_monomials: None, witness: None, difference: None }
    }
}

fn symbolic_outcome(
    id: &IdentityDescriptor,
    params: &StructuralParams,
    mutation: Option<Mutation>,
    budget: usize,
) -> Result<Outcome> {
    let sides = id
        .sum_side(params, SideKind::Lhs, &Symbolic, mutation, budget)
        .and_then(|l| Ok((l, id.sum_side(params, SideKind::Rhs, &Symbolic, None, budget)?)));
    let (lhs, rhs) = match sides {
        Err(Error::BudgetExceeded { .. }) => return Ok(Outcome::aborted()),
        other => other?,
    };
    let diff = lhs.sub(&rhs);
    let expected = id.expected_difference(params)?;
    let status = match (id.status, &expected) {
        (StatusFlag::KnownDiscrepant, Some(e)) if &diff == e => Status::KnownDiscrepantConfirmed,
        (StatusFlag::KnownDiscrepant, _) => Status::Fail,
        (StatusFlag::Normal, _) if diff.is_zero() => Status::Pass,
        (StatusFlag::Normal, _) => Status::Fail,
    };
    Ok(Outcome {
        status,
        lhs_monomials: Some(lhs.len()),
        rhs_monomials: Some(rhs.len()),
        witness: None,
        difference: (!diff.is_zero()).then_some(diff),
    })
}

fn numeric_outcome(
    id: &IdentityDescriptor,
    params: &StructuralParams,
    mutation: Option<Mutation>,
    opts: &CellOptions,
    seed: u64,
) -> Result<Outcome> {
    if opts.trials == 0 {
        return Err(Error::InvalidGrid("numeric mode needs at least one trial".into()));
    }
    let vars = id.symbolic_vars(params)?;
    let expected = id.expected_difference(params)?;
    let flagged = id.status == StatusFlag::KnownDiscrepant;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..opts.trials {
        let point = random_point(&vars, &mut rng);
        let env = Point(point.clone());
        let lhs = id.sum_side(params, SideKind::Lhs, &env, mutation, opts.budget)?;
        let rhs = id.sum_side(params, SideKind::Rhs, &env, None, opts.budget)?;
        let target = match (flagged, &expected) {
            (false, _) => Rational::zero(),
            (true, Some(e)) => e.eval(&point)?,
            // nothing frozen to compare against
            (true, None) => return Ok(numeric_fail(point)),
        };
        if &lhs - &rhs != target {
            return Ok(numeric_fail(point));
        }
    }
    let status = if flagged { Status::KnownDiscrepantConfirmed } else { Status::Pass };
    Ok(Outcome { status, lhs_monomials: None, rhs_monomials: None, witness: None, difference: None })
}

fn numeric_fail(point: Assignment) -> Outcome {
    Outcome { status: Status::Fail, lhs_monomials: None, rhs_monomials: None, witness: Some(point), difference: None }
}

fn run_cell(
    id: &IdentityDescriptor,
    params: &StructuralParams,
    mode: Mode,
    mutation: Option<Mutation>,
    opts: &CellOptions,
) -> Result<VerificationResult> {
    let params = id.validate(params)?;
    let seed = cell_seed(opts.seed, id.name, &params);
    let start = Instant::now();
    let outcome = match mode {
        Mode::Symbolic => symbolic_outcome(id, &params, mutation, opts.budget)?,
        Mode::Numeric => numeric_outcome(id, &params, mutation, opts, seed)?,
    };
    let status = match (mutation, outcome.status) {
        (Some(_), Status::Pass | Status::KnownDiscrepantConfirmed) => Status::MutationInconclusive,
        (_, s) => s,
    };
    Ok(VerificationResult {
        identity: id.name.to_string(),
        params,
        mode,
        status,
        lhs_monomials: outcome.lhs_monomials,
        rhs_monomials: outcome.rhs_monomials,
        witness: outcome.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed,
        difference: outcome.difference,
        mutation,
    })
}

/// Expands both sides and compares them as polynomials.
pub fn verify_symbolic(id: &IdentityDescriptor, params: &StructuralParams) -> Result<VerificationResult> {
    run_cell(id, params, Mode::Symbolic, None, &CellOptions::default())
}

/// Compares both sides at `trials` seeded random rational points.
pub fn verify_numeric(
    id: &IdentityDescriptor,
    params: &StructuralParams,
    seed: u64,
    trials: usize,
) -> Result<VerificationResult> {
    let opts = CellOptions { trials, seed, ..CellOptions::default() };
    run_cell(id, params, Mode::Numeric, None, &opts)
}

/// True when omitting the last left-hand summand would leave nothing to test.
pub fn is_degenerate(id: &IdentityDescriptor, params: &StructuralParams, mutation: Mutation) -> Result<bool> {
    Ok(mutation == Mutation::DropLastTerm && id.domain_len(params, SideKind::Lhs)? <= 1)
}

/// Verifies a deliberately broken left side; a sound verifier reports `fail`.
pub fn negative_control(
    id: &IdentityDescriptor,
    params: &StructuralParams,
    mutation: Mutation,
    mode: Mode,
    opts: &CellOptions,
) -> Result<VerificationResult> {
    if is_degenerate(id, params, mutation)? {
        return Err(Error::DegenerateMutation(format!("{mutation} on {} at {params}: single-term sum", id.name)));
    }
    run_cell(id, params, mode, Some(mutation), opts)
}

#[derive(Clone, Debug, Default)]
pub enum Selector {
    #[default]
    All,
    Names(Vec<String>),
}

#[derive(Clone, Debug)]
pub struct GridSpec {
    pub selector: Selector,
    /// Candidate values per parameter; a parameter unbound here takes the
    /// identity's default range.
    pub bindings: Bindings,
    /// Caps the default range of size parameters.
    pub max_n: Option<i64>,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    /// Worker threads; results do not depend on it.
    pub jobs: usize,
    pub budget: usize,
    /// Stop at the first failing cell (in report order).
    pub fail_fast: bool,
    /// Negative-control mode: mutate every left side. Cells where the
    /// mutation is degenerate are skipped.
    pub mutation: Option<Mutation>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            selector: Selector::All,
            bindings: Bindings::new(),
            max_n: None,
            mode: Mode::Symbolic,
            trials: 20,
            seed: 0,
            jobs: 1,
            budget: DEFAULT_TERM_BUDGET,
            fail_fast: false,
            mutation: None,
        }
    }
}

impl GridSpec {
    fn identities(&self) -> Result<Vec<&'static IdentityDescriptor>> {
        let mut ids = match &self.selector {
            Selector::All => catalog::list_identities().iter().collect(),
            Selector::Names(names) => names.iter().map(|n| catalog::find(n)).collect::<Result<Vec<_>>>()?,
        };
        ids.sort_by_key(|d| d.name);
        ids.dedup_by_key(|d| d.name);
        Ok(ids)
    }

    /// All (identity, params) cells in report order.
    pub fn cells(&self) -> Result<Vec<(&'static IdentityDescriptor, StructuralParams)>> {
        let ids = self.identities()?;
        for name in self.bindings.keys() {
            if !ids.iter().any(|d| d.schema.iter().any(|p| p.name == name)) {
                return Err(Error::InvalidGrid(format!("no selected identity has a parameter `{name}`")));
            }
        }
        let mut out = Vec::new();
        let mut skipped = 0usize;
        for id in ids {
            let own: Bindings = self
                .bindings
                .iter()
                .filter(|(k, _)| id.schema.iter().any(|p| p.name == k.as_str()))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let mut cells = id.grid(&own, self.max_n)?;
            cells.sort();
            cells.dedup();
            for c in cells {
                if let Some(m) = self.mutation {
                    if is_degenerate(id, &c, m)? {
                        skipped += 1;
                        continue;
                    }
                }
                out.push((id, c));
            }
        }
        // a control that exercises nothing must not look like a clean run
        if out.is_empty() && skipped > 0 {
            let m = self.mutation.expect("only mutations skip cells");
            return Err(Error::DegenerateMutation(format!("{m}: every selected cell is a single-term sum")));
        }
        Ok(out)
    }
}

/// Runs every cell of the grid; output order never depends on `jobs`.
pub fn run_suite(grid: &GridSpec) -> Result<Vec<VerificationResult>> {
    let cells = grid.cells()?;
    let opts = CellOptions { trials: grid.trials, seed: grid.seed, budget: grid.budget };
    let run = |(id, p): &(&IdentityDescriptor, StructuralParams)| run_cell(id, p, grid.mode, grid.mutation, &opts);

    let mut results = if grid.jobs <= 1 {
        let mut out = Vec::with_capacity(cells.len());
        for c in &cells {
            let r = run(c)?;
            let stop = grid.fail_fast && r.is_failure();
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(grid.jobs)
            .build()
            .map_err(|e| Error::InvalidGrid(format!("thread pool: {e}")))?;
        pool.install(|| cells.par_iter().map(run).collect::<Result<Vec<_>>>())?
    };
    if grid.fail_fast {
        if let Some(i) = results.iter().position(VerificationResult::is_failure) {
            results.truncate(i + 1);
        }
    }
    Ok(results)
}

/// Aggregate verdict: no cell failed or aborted.
pub fn aggregate_pass(results: &[VerificationResult]) -> bool {
    !results.iter().any(VerificationResult::is_failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::VecIndex;
    use crate::catalog::find;

    fn n(v: i64) -> StructuralParams {
        StructuralParams::new().with("n", v)
    }

    #[test]
    fn symbolic_examples() {
        let r = verify_symbolic(find("jensen").unwrap(), &n(3)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.is_none() && r.difference.is_none());
        let cv = StructuralParams::new().with("nvec", VecIndex::from([1, 1]));
        assert_eq!(verify_symbolic(find("cv_multi").unwrap(), &cv).unwrap().status, Status::Pass);
    }

    #[test]
    fn gould_variation_confirmed() {
        let g = find("gould_variation").unwrap();
        let r = verify_symbolic(g, &n(1)).unwrap();
        assert_eq!(r.status, Status::KnownDiscrepantConfirmed);
        assert_eq!(r.difference.unwrap().to_string(), "x + y");
        assert_eq!(verify_numeric(g, &n(1), 3, 20).unwrap().status, Status::KnownDiscrepantConfirmed);
        // nothing frozen beyond the desk-checked cells
        let r3 = verify_symbolic(g, &n(3)).unwrap();
        assert_eq!(r3.status, Status::Fail);
        assert!(r3.difference.is_some());
        let n3 = verify_numeric(g, &n(3), 0, 5).unwrap();
        assert_eq!(n3.status, Status::Fail);
        assert!(n3.witness.is_some());
    }

    #[test]
    fn numeric_examples() {
        assert_eq!(verify_numeric(find("simons").unwrap(), &n(4), 0, 20).unwrap().status, Status::Pass);
        for seed in [0, 1, 99] {
            assert_eq!(verify_numeric(find("jensen").unwrap(), &n(0), seed, 5).unwrap().status, Status::Pass);
        }
    }

    #[test]
    fn negative_controls() {
        let opts = CellOptions::default();
        let jensen = find("jensen").unwrap();
        let r = negative_control(jensen, &n(2), Mutation::DropLastTerm, Mode::Symbolic, &opts).unwrap();
        assert_eq!(r.status, Status::Fail);
        let r = negative_control(jensen, &n(2), Mutation::DropLastTerm, Mode::Numeric, &opts).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.expect("witness");
        assert_eq!(w.len(), 3);

        let simons = find("simons").unwrap();
        let r = negative_control(simons, &n(1), Mutation::ShiftUpper, Mode::Symbolic, &opts).unwrap();
        assert_eq!(r.status, Status::Fail);

        assert!(matches!(
            negative_control(jensen, &n(0), Mutation::DropLastTerm, Mode::Symbolic, &opts),
            Err(Error::DegenerateMutation(_))
        ));
    }

    #[test]
    fn budget_aborts() {
        let grid = GridSpec {
            selector: Selector::Names(vec!["jensen".into()]),
            bindings: [("n".to_string(), vec![5.into()])].into_iter().collect(),
            budget: 4,
            ..GridSpec::default()
        };
        let r = run_suite(&grid).unwrap();
        assert_eq!(r[0].status, Status::Aborted);
        assert!(!aggregate_pass(&r));
    }

    #[test]
    fn suite_examples() {
        let grid = GridSpec {
            selector: Selector::Names(vec!["jensen".into()]),
            bindings: [("n".to_string(), (0..=3).map(Into::into).collect())].into_iter().collect(),
            ..GridSpec::default()
        };
        let r = run_suite(&grid).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|c| c.status == Status::Pass));

        let stirling = GridSpec {
            selector: Selector::Names(vec!["stirling_sum".into()]),
            bindings: [("n".to_string(), vec![4.into()])].into_iter().collect(),
            ..GridSpec::default()
        };
        let r = run_suite(&stirling).unwrap();
        assert_eq!(r.len(), 5);
        assert!(aggregate_pass(&r));

        let empty = GridSpec { selector: Selector::Names(vec![]), ..GridSpec::default() };
        let r = run_suite(&empty).unwrap();
        assert!(r.is_empty() && aggregate_pass(&r));
    }

    #[test]
    fn unknown_binding_rejected() {
        let grid = GridSpec {
            selector: Selector::Names(vec!["jensen".into()]),
            bindings: [("zz".to_string(), vec![1.into()])].into_iter().collect(),
            ..GridSpec::default()
        };
        assert!(matches!(run_suite(&grid), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn all_degenerate_control_rejected() {
        let grid = GridSpec {
            selector: Selector::Names(vec!["jensen".into()]),
            bindings: [("n".to_string(), vec![0.into()])].into_iter().collect(),
            mutation: Some(Mutation::DropLastTerm),
            ..GridSpec::default()
        };
        assert!(matches!(run_suite(&grid), Err(Error::DegenerateMutation(_))));
        let grid = GridSpec { bindings: [("n".to_string(), vec![0.into(), 2.into()])].into_iter().collect(), ..grid };
        assert_eq!(run_suite(&grid).unwrap().len(), 1);
    }

    #[test]
    fn order_independent_of_jobs() {
        let base = GridSpec {
            selector: Selector::Names(vec!["sun".into(), "abel".into()]),
            max_n: Some(2),
            mode: Mode::Numeric,
            trials: 3,
            seed: 7,
            ..GridSpec::default()
        };
        let a = run_suite(&base).unwrap();
        let b = run_suite(&GridSpec { jobs: 4, ..base.clone() }).unwrap();
        let strip = |v: Vec<VerificationResult>| {
            v.into_iter().map(|r| (r.identity, r.params, r.status, r.seed)).collect::<Vec<_>>()
        };
        assert_eq!(strip(a.clone()), strip(b));
        assert_eq!(a[0].identity, "abel");
    }

    #[test]
    fn fail_fast_truncates() {
        let grid = GridSpec {
            selector: Selector::Names(vec!["jensen".into()]),
            max_n: Some(3),
            mutation: Some(Mutation::DropLastTerm),
            fail_fast: true,
            ..GridSpec::default()
        };
        let r = run_suite(&grid).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Fail);
        let par = run_suite(&GridSpec { jobs: 3, ..grid }).unwrap();
        assert_eq!(par.len(), 1);
    }
}
