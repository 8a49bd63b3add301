//! Theorem-versus-oracle verification.
//!
//! Each case builds the graph a closed form describes, computes `ε` from the
//! definition, and compares the closed-form spectrum (and any scalar
//! predictions) with the numeric eigenvalues of `ε`.

mod params;
pub mod random;
mod registry;

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::closed::{ClosedFormOutput, ClosedFormResult};
use crate::ecc::ecc_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{sym_eigenvalues_int, Inertia, Spectrum};

pub use params::{parse_int_list, Params};
pub use registry::{theorem, theorems, Case, Instance, Theorem};

/// Default absolute tolerance per eigenvalue.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Bound on the scaled residual of a characteristic polynomial at the oracle eigenvalues.
pub const CHARPOLY_TOL: f64 = 1e-6;
/// Environment variable capping sweep parallelism.
pub const THREADS_ENV: &str = "ECC_SPECTRA_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    PreconditionUnsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Match => "match",
            Self::Mismatch => "mismatch",
            Self::PreconditionUnsupported => "precondition-unsupported",
        })
    }
}

/// Why a stated formula disagrees with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Diagnosis {
    /// The stated spectrum has nonzero trace, unlike any `ε`.
    FormulaDefectTrace,
    /// `Σλ²` differs from `‖ε‖_F²`.
    FormulaDefectSecondMoment,
    /// The stated spectrum has the wrong number of eigenvalues.
    FormulaDefectOrder,
    /// The stated spectrum passes the invariant tests, so the disagreement
    /// points at the implementation.
    ImplementationSuspect,
}

impl Diagnosis {
    pub fn is_formula_defect(self) -> bool {
        self != Self::ImplementationSuspect
    }
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::FormulaDefectTrace => "formula-defect-trace",
            Self::FormulaDefectSecondMoment => "formula-defect-second-moment",
            Self::FormulaDefectOrder => "formula-defect-order",
            Self::ImplementationSuspect => "implementation-suspect",
        })
    }
}

/// Sweep parameters as an ordered list of `(name, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamTuple(pub Vec<(String, String)>);

impl Serialize for ParamTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// A scalar prediction compared with the oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub predicted: serde_json::Value,
    pub observed: serde_json::Value,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrectedReport {
    pub verdict: Verdict,
    pub max_deviation: Option<f64>,
    pub closed: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub case: usize,
    pub params: ParamTuple,
    pub seed: u64,
    pub verdict: Verdict,
    /// `None` when the closed form and the oracle differ in order.
    pub max_deviation: Option<f64>,
    pub closed: Vec<f64>,
    pub oracle: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly_residual: Option<f64>,
    pub checks: Vec<Check>,
    pub diagnosis: Option<Diagnosis>,
    pub corrected: Option<CorrectedReport>,
    pub failed_preconditions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

pub const CSV_HEADER: [&str; 10] = [
    "theorem",
    "case",
    "params",
    "seed",
    "verdict",
    "max_deviation",
    "diagnosis",
    "corrected_verdict",
    "corrected_deviation",
    "failed",
];

fn opt_num(v: Option<f64>) -> String {
    v.map_or_else(String::new, |d| format!("{d:e}"))
}

impl VerificationReport {
    /// A mismatch, unless the stated form is diagnosed defective and the
    /// corrected form matches.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch
            && !(self.diagnosis.is_some_and(Diagnosis::is_formula_defect)
                && self.corrected.as_ref().is_some_and(|c| c.verdict == Verdict::Match))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn csv_record(&self) -> [String; 10] {
        [
            self.theorem.to_string(),
            self.case.to_string(),
            self.params.to_string(),
            self.seed.to_string(),
            self.verdict.to_string(),
            opt_num(self.max_deviation),
            self.diagnosis.map(|d| d.to_string()).unwrap_or_default(),
            self.corrected.as_ref().map(|c| c.verdict.to_string()).unwrap_or_default(),
            opt_num(self.corrected.as_ref().and_then(|c| c.max_deviation)),
            self.is_failure().to_string(),
        ]
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} #{} [{}] {}", self.theorem, self.case, self.params, self.verdict)?;
        match self.max_deviation {
            Some(d) => write!(f, " dev={d:.3e}")?,
            None => write!(f, " dev=order-mismatch")?,
        }
        if let Some(d) = self.diagnosis {
            write!(f, " diagnosis={d}")?;
        }
        if let Some(c) = &self.corrected {
            write!(f, " corrected={}", c.verdict)?;
        }
        for c in self.checks.iter().filter(|c| !c.ok) {
            write!(f, " {}:{}!={}", c.name, c.predicted, c.observed)?;
        }
        if !self.failed_preconditions.is_empty() {
            write!(f, " unsupported: {}", self.failed_preconditions.join("; "))?;
        }
        if let Some(t) = self.wall_time_ms {
            write!(f, " {t:.2}ms")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub tol: f64,
    pub seed: u64,
    pub timing: bool,
    /// `None` reads [`THREADS_ENV`], falling back to rayon's default.
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            seed: 0,
            timing: false,
            threads: None,
        }
    }
}

/// Numeric eigenvalues of `ε(G)`, descending, and `‖ε‖_F²`.
pub struct Oracle {
    pub values: Vec<f64>,
    pub frobenius_sq: f64,
}

impl Oracle {
    pub fn of(g: &Graph) -> Result<Self> {
        let eps = ecc_matrix(g)?;
        let mut values = sym_eigenvalues_int(eps.as_int_matrix())?;
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Self {
            values,
            frobenius_sq: eps.as_int_matrix().frobenius_sq(),
        })
    }

    fn scale(&self) -> f64 {
        self.values.iter().fold(1.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_values(&self.values)
    }
}

fn deviation(closed: &[f64], oracle: &[f64]) -> Option<f64> {
    (closed.len() == oracle.len()).then(|| {
        closed
            .iter()
            .zip(oracle)
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    })
}

struct OutputCheck {
    verdict: Verdict,
    deviation: Option<f64>,
    closed: Vec<f64>,
    residual: Option<f64>,
}

fn check_output(out: &ClosedFormOutput, oracle: &Oracle, tol: f64) -> Result<OutputCheck> {
    let closed = out.spectrum()?.values();
    let dev = deviation(&closed, &oracle.values);
    let residual = out.charpoly().map(|p| {
        oracle
            .values
            .iter()
            .fold(0.0_f64, |acc, &x| acc.max(p.scaled_residual(x)))
    });
    let ok = dev.is_some_and(|d| d <= tol) && residual.is_none_or(|r| r <= CHARPOLY_TOL);
    Ok(OutputCheck {
        verdict: if ok { Verdict::Match } else { Verdict::Mismatch },
        deviation: dev,
        closed,
        residual,
    })
}

fn scalar_check(name: &'static str, predicted: f64, observed: f64, tol: f64) -> Check {
    Check {
        name,
        predicted: serde_json::json!(predicted),
        observed: serde_json::json!(observed),
        ok: (predicted - observed).abs() <= tol * predicted.abs().max(1.0),
    }
}

fn prediction_checks(res: &ClosedFormResult, oracle: &Oracle, tol: f64) -> Vec<Check> {
    let p = &res.predicted;
    let n = oracle.values.len().max(1) as f64;
    let rho = oracle.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let energy: f64 = oracle.values.iter().map(|v| v.abs()).sum();
    let xi = oracle.values.last().copied().unwrap_or(0.0);
    let mut out = Vec::new();
    if let Some(v) = p.rho {
        out.push(scalar_check("rho", v, rho, tol));
    }
    if let Some(v) = p.energy {
        out.push(scalar_check("energy", v, energy, tol * n));
    }
    if let Some(v) = p.xi {
        out.push(scalar_check("xi", v, xi, tol));
    }
    if let Some(want) = p.inertia {
        let zero = 1e-8 * oracle.scale();
        let got = Inertia::new(
            oracle.values.iter().filter(|&&v| v > zero).count(),
            oracle.values.iter().filter(|&&v| v.abs() <= zero).count(),
            oracle.values.iter().filter(|&&v| v < -zero).count(),
        );
        out.push(Check {
            name: "inertia",
            predicted: serde_json::json!(want.as_array()),
            observed: serde_json::json!(got.as_array()),
            ok: want == got,
        });
    }
    out
}

/// Invariant tests every eigenvalue list of an `ε` must pass.
pub fn diagnose(closed: &[f64], oracle: &Oracle) -> Diagnosis {
    let n = oracle.values.len();
    let scale = oracle.scale();
    let trace: f64 = closed.iter().sum();
    let moment: f64 = closed.iter().map(|v| v * v).sum();
    if closed.len() != n {
        Diagnosis::FormulaDefectOrder
    } else if trace.abs() > 1e-6 * scale * n as f64 {
        Diagnosis::FormulaDefectTrace
    } else if (moment - oracle.frobenius_sq).abs() > 1e-6 * oracle.frobenius_sq.max(1.0) {
        Diagnosis::FormulaDefectSecondMoment
    } else {
        Diagnosis::ImplementationSuspect
    }
}

/// Compares a closed-form result with the oracle of `graph`.
pub fn verify_instance(res: &ClosedFormResult, graph: &Graph, tol: f64) -> Result<VerifiedOutcome> {
    let oracle = Oracle::of(graph)?;
    let stated = check_output(&res.output, &oracle, tol)?;
    let checks = prediction_checks(res, &oracle, tol);
    let failed_preconditions: Vec<String> = res
        .preconditions
        .iter()
        .filter(|p| !p.holds)
        .map(|p| p.name.clone())
        .collect();
    let verdict = if !failed_preconditions.is_empty() {
        Verdict::PreconditionUnsupported
    } else if stated.verdict == Verdict::Match && checks.iter().all(|c| c.ok) {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    let diagnosis = (verdict == Verdict::Mismatch).then(|| diagnose(&stated.closed, &oracle));
    let corrected = res
        .corrected
        .as_ref()
        .map(|c| check_output(c, &oracle, tol))
        .transpose()?
        .map(|c| CorrectedReport {
            verdict: c.verdict,
            max_deviation: c.deviation,
            closed: c.closed,
            charpoly_residual: c.residual,
        });
    Ok(VerifiedOutcome {
        verdict,
        max_deviation: stated.deviation,
        closed: stated.closed,
        oracle: oracle.values,
        charpoly_residual: stated.residual,
        checks,
        diagnosis,
        corrected,
        failed_preconditions,
    })
}

/// The comparison part of a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedOutcome {
    pub verdict: Verdict,
    pub max_deviation: Option<f64>,
    pub closed: Vec<f64>,
    pub oracle: Vec<f64>,
    pub charpoly_residual: Option<f64>,
    pub checks: Vec<Check>,
    pub diagnosis: Option<Diagnosis>,
    pub corrected: Option<CorrectedReport>,
    pub failed_preconditions: Vec<String>,
}

/// RNG for case `index` of a sweep seeded with `seed`: one ChaCha stream per case.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn run_case(th: &Theorem, index: usize, case: &Case, cfg: &SweepConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let inst = th.instantiate(case, &mut case_rng(cfg.seed, index))?;
    let o = verify_instance(&inst.result, &inst.graph, cfg.tol)?;
    let mut params = case.label.clone();
    params.extend(inst.drawn);
    Ok(VerificationReport {
        theorem: th.id,
        case: index,
        params: ParamTuple(params),
        seed: cfg.seed,
        verdict: o.verdict,
        max_deviation: o.max_deviation,
        closed: o.closed,
        oracle: o.oracle,
        charpoly_residual: o.charpoly_residual,
        checks: o.checks,
        diagnosis: o.diagnosis,
        corrected: o.corrected,
        failed_preconditions: o.failed_preconditions,
        wall_time_ms: cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

fn thread_count(cfg: &SweepConfig) -> Result<Option<usize>> {
    if let Some(t) = cfg.threads {
        return Ok(Some(t.max(1)));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|t| Some(t.max(1)))
            .map_err(|_| Error::Param {
                name: THREADS_ENV.into(),
                reason: format!("`{v}` is not a thread count"),
            }),
        Err(_) => Ok(None),
    }
}

/// Runs every case of a theorem's sweep; reports come back in case order.
pub fn run_sweep(theorem_id: &str, params: &Params, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    let th = theorem(theorem_id)?;
    let cases = th.cases(params)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_count(cfg)? {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::ThreadPool(e.to_string()))?;
    log::debug!("{}: {} cases", th.id, cases.len());
    pool.install(|| {
        cases
            .par_iter()
            .enumerate()
            .map(|(i, c)| run_case(th, i, c, cfg))
            .collect()
    })
}

/// Evaluates a theorem's closed form for every case without the oracle.
pub fn closed_forms(theorem_id: &str, params: &Params, seed: u64) -> Result<Vec<(ParamTuple, ClosedFormResult)>> {
    let th = theorem(theorem_id)?;
    th.cases(params)?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let inst = th.instantiate(c, &mut case_rng(seed, i))?;
            let mut params = c.label.clone();
            params.extend(inst.drawn);
            Ok((ParamTuple(params), inst.result))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::ids;

    fn sweep(id: &str, params: Params) -> Vec<VerificationReport> {
        run_sweep(id, &params, &SweepConfig::default()).unwrap()
    }

    #[test]
    fn p4_join_sweep_matches() {
        let reports = sweep(ids::P4_JOIN, Params::new());
        assert_eq!(reports.len(), 25);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Match), "{}", reports[0]);
    }

    #[test]
    fn corona_mismatch_is_diagnosed() {
        let reports = sweep(ids::CORONA, Params::new().with("k", "2").with("n", "1"));
        let r = &reports[0];
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(r.diagnosis, Some(Diagnosis::FormulaDefectTrace));
        assert_eq!(r.corrected.as_ref().unwrap().verdict, Verdict::Match);
        assert!(!r.is_failure());
        let want = [4.0, 1.0, -1.0, -4.0];
        assert!(r.oracle.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-10));
    }

    #[test]
    fn implementation_suspect_when_invariants_hold() {
        let g = Graph::path(4).unwrap();
        let oracle = Oracle::of(&g).unwrap();
        assert_eq!(diagnose(&[4.0, 1.0, -1.0, -4.0], &oracle), Diagnosis::ImplementationSuspect);
        assert_eq!(diagnose(&[1.0, 1.0, -4.0, -4.0], &oracle), Diagnosis::FormulaDefectTrace);
        assert_eq!(diagnose(&[1.0, -1.0], &oracle), Diagnosis::FormulaDefectOrder);
        assert_eq!(diagnose(&[3.0, 2.0, -2.0, -3.0], &oracle), Diagnosis::FormulaDefectSecondMoment);
    }

    #[test]
    fn unsupported_when_preconditions_fail() {
        let reports = sweep(ids::RAD3_QUOTIENT, Params::new().with("host", "C5").with("trials", "1"));
        assert_eq!(reports[0].verdict, Verdict::PreconditionUnsupported);
        assert!(!reports[0].is_failure());
    }

    #[test]
    fn reports_are_deterministic_across_thread_counts() {
        let run = |threads| {
            let cfg = SweepConfig {
                threads: Some(threads),
                seed: 42,
                ..SweepConfig::default()
            };
            run_sweep(ids::RAD3_QUOTIENT, &Params::new(), &cfg)
                .unwrap()
                .iter()
                .map(VerificationReport::to_json_line)
                .collect::<Vec<_>>()
        };
        assert_eq!(run(1), run(4));
    }
}
