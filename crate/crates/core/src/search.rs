//! Numerical search for bent class functions.
//!
//! Candidates are parameterized as `a_i = √p_i · e^{iθ_i}` with `p` on the
//! probability simplex, which pins `Σ|a_i|² = 1` (the mean of `|f|²` for a
//! unimodular `f`). The reported objective is
//!
//! `max_{σ≠e} |D(σ)|/n + max_x ||f(x)| − 1|`,
//!
//! zero exactly on bent functions. Local refinement descends the smooth
//! surrogate `Σ_{σ≠e} |D(σ)/n|² + Σ_x (|f(x)|² − 1)²`, which has the same
//! zero set, by damped Gauss–Newton steps in the free coefficients.
//!
//! A search that certifies nothing is evidence, not proof.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bent::{is_bent, left_sum, BentReport};
use crate::chars::CharacterTable;
use crate::class_fn::{evaluate, ClassFunction};
use crate::cplx::C64;
use crate::error::{Error, Result};

/// Evaluations spent on one local refinement before restarting.
const LOCAL_BUDGET: usize = 4000;
/// Damping beyond which a refinement is abandoned.
const LAMBDA_MAX: f64 = 1e12;
/// Surrogate value below which refinement stops.
const SURROGATE_FLOOR: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strategy {
    Random,
    RandomPlusLocal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub group: String,
    pub budget: usize,
    pub seed: u64,
    pub tol: f64,
    pub strategy: Strategy,
}

impl SearchConfig {
    pub fn new(group: &str, budget: usize, seed: u64) -> Self {
        SearchConfig {
            group: group.to_string(),
            budget,
            seed,
            tol: crate::class_fn::DEFAULT_TOL,
            strategy: Strategy::RandomPlusLocal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub config: SearchConfig,
    pub best_objective: f64,
    pub best_coeffs: Vec<C64>,
    pub certified_bent: bool,
    pub evaluations: usize,
    /// Objective quantiles at 0%, 10%, …, 100% over all evaluated candidates.
    pub histogram: Vec<f64>,
    /// Present iff `certified_bent`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BentReport>,
    /// Set for groups outside the original catalog (D4).
    pub exploratory: bool,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("search result serializes")
    }
}

/// `max_{σ≠e} |D(σ)|/n + max_x ||f(x)| − 1|` for coefficients `a`.
pub fn objective(table: &CharacterTable, a: &[C64]) -> Result<f64> {
    if a.len() != table.len() {
        return Err(Error::LengthMismatch {
            expected: table.len(),
            got: a.len(),
        });
    }
    Ok(score(table, a).0)
}

/// (objective, surrogate)
fn score(table: &CharacterTable, a: &[C64]) -> (f64, f64) {
    let group = table.group();
    let n = group.order();
    let values = evaluate(table, a);
    let mut max_d: f64 = 0.0;
    let mut surrogate = 0.0;
    for sigma in (0..n).filter(|&s| s != group.identity()) {
        let d = left_sum(group, &values, sigma) / n as f64;
        max_d = max_d.max(d.norm());
        surrogate += d.norm_sqr();
    }
    let mut max_u: f64 = 0.0;
    for v in &values {
        let m2 = v.norm_sqr();
        max_u = max_u.max((m2.sqrt() - 1.0).abs());
        surrogate += (m2 - 1.0) * (m2 - 1.0);
    }
    (max_d + max_u, surrogate)
}

#[derive(Debug, Clone)]
struct Params {
    p: Vec<f64>,
    theta: Vec<f64>,
}

impl Params {
    fn random(r: usize, rng: &mut ChaCha8Rng) -> Self {
        // uniform on the simplex via normalized exponentials
        let e: Vec<f64> = (0..r).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        let total: f64 = e.iter().sum();
        Params {
            p: e.iter().map(|v| v / total).collect(),
            theta: (0..r)
                .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                .collect(),
        }
    }

    fn coeffs(&self) -> Vec<C64> {
        self.p
            .iter()
            .zip(&self.theta)
            .map(|(&p, &t)| C64::from_polar(p.max(0.0).sqrt(), t))
            .collect()
    }
}

/// Residual vector of the surrogate: `Re, Im` of `D(σ)/n` for `σ ≠ e`, then
/// `|f(x)|² − 1`.
fn residuals(table: &CharacterTable, values: &[C64]) -> Vec<f64> {
    let group = table.group();
    let n = group.order();
    let mut out = Vec::with_capacity(3 * n);
    for sigma in (0..n).filter(|&s| s != group.identity()) {
        let d = left_sum(group, values, sigma) / n as f64;
        out.push(d.re);
        out.push(d.im);
    }
    out.extend(values.iter().map(|v| v.norm_sqr() - 1.0));
    out
}

/// Jacobian of [`residuals`] with respect to `(Re a, Im a)`.
fn jacobian(table: &CharacterTable, values: &[C64]) -> DMatrix<f64> {
    let group = table.group();
    let n = group.order();
    let r = table.len();
    let phi = table.phi();
    let rows = 2 * (n - 1) + n;
    let mut jac = DMatrix::zeros(rows, 2 * r);
    let i = C64::new(0.0, 1.0);
    for j in 0..r {
        for (col, unit) in [(j, C64::new(1.0, 0.0)), (r + j, i)] {
            let df: Vec<C64> = (0..n).map(|x| phi[x][j] * unit).collect();
            let mut row = 0;
            for sigma in (0..n).filter(|&s| s != group.identity()) {
                let dd: C64 = (0..n)
                    .map(|x| {
                        let sx = group.op(sigma, x);
                        df[x].conj() * values[sx] + values[x].conj() * df[sx]
                    })
                    .sum::<C64>()
                    / n as f64;
                jac[(row, col)] = dd.re;
                jac[(row + 1, col)] = dd.im;
                row += 2;
            }
            for x in 0..n {
                jac[(row + x, col)] = 2.0 * (values[x].conj() * df[x]).re;
            }
        }
    }
    jac
}

struct Run<'a> {
    table: &'a CharacterTable,
    budget: usize,
    evaluations: usize,
    objectives: Vec<f64>,
    best_objective: f64,
    best: Vec<C64>,
}

impl Run<'_> {
    fn exhausted(&self) -> bool {
        self.evaluations >= self.budget
    }

    fn charge(&mut self, cost: usize) {
        self.evaluations = (self.evaluations + cost).min(self.budget);
    }

    /// Scores a candidate, tracking the best objective. Returns the values
    /// `f = Φ·a` and the surrogate.
    fn eval(&mut self, a: &[C64]) -> (Vec<C64>, f64) {
        let values = evaluate(self.table, a);
        let (obj, sur) = score(self.table, a);
        self.charge(1);
        self.objectives.push(obj);
        if obj < self.best_objective {
            self.best_objective = obj;
            self.best = a.to_vec();
        }
        (values, sur)
    }

    /// Levenberg–Marquardt on the surrogate. A Jacobian costs one
    /// evaluation per real parameter.
    fn refine(&mut self, start: Vec<C64>) {
        let r = start.len();
        let stop_at = (self.evaluations + LOCAL_BUDGET).min(self.budget);
        let mut a = start;
        let (mut values, mut value) = self.eval(&a);
        let mut lambda = 1e-3;
        while self.evaluations + 2 * r < stop_at && value > SURROGATE_FLOOR {
            let res = DVector::from_vec(residuals(self.table, &values));
            let jac = jacobian(self.table, &values);
            self.charge(2 * r);
            let jtj = jac.transpose() * &jac;
            let grad = jac.transpose() * res;
            let mut improved = false;
            while self.evaluations < stop_at && lambda < LAMBDA_MAX {
                let mut damped = jtj.clone();
                for k in 0..2 * r {
                    damped[(k, k)] += lambda * (1.0 + jtj[(k, k)]);
                }
                let Some(chol) = damped.cholesky() else {
                    lambda *= 4.0;
                    continue;
                };
                let step = chol.solve(&(-&grad));
                let trial: Vec<C64> = (0..r)
                    .map(|k| a[k] + C64::new(step[k], step[r + k]))
                    .collect();
                let (trial_values, trial_value) = self.eval(&trial);
                if trial_value < value {
                    a = trial;
                    values = trial_values;
                    value = trial_value;
                    lambda = (lambda / 3.0).max(1e-15);
                    improved = true;
                    break;
                }
                lambda *= 4.0;
            }
            if !improved {
                break;
            }
        }
    }
}

pub fn run_search(config: &SearchConfig) -> Result<SearchResult> {
    let table = CharacterTable::for_label(&config.group)?;
    run_search_on(&table, config)
}

pub fn run_search_on(table: &Arc<CharacterTable>, config: &SearchConfig) -> Result<SearchResult> {
    if config.budget == 0 {
        return Err(Error::InvalidInput("search budget must be at least 1".into()));
    }
    let r = table.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut run = Run {
        table,
        budget: config.budget,
        evaluations: 0,
        objectives: Vec::with_capacity(config.budget),
        best_objective: f64::INFINITY,
        best: vec![C64::new(0.0, 0.0); r],
    };
    let mut report = None;
    while !run.exhausted() {
        let start = Params::random(r, &mut rng).coeffs();
        if config.strategy == Strategy::RandomPlusLocal {
            run.refine(start);
        } else {
            run.eval(&start);
        }
        if run.best_objective <= 10.0 * config.tol {
            let f = ClassFunction::from_coefficients(table, run.best.clone())?;
            let rep = is_bent(&f, config.tol);
            if rep.is_bent() {
                report = Some(rep);
                break;
            }
        }
    }
    let exploratory = table
        .group()
        .named_kind()
        .is_some_and(|k| k.is_exploratory());
    Ok(SearchResult {
        config: config.clone(),
        best_objective: run.best_objective,
        best_coeffs: run.best,
        certified_bent: report.is_some(),
        evaluations: run.evaluations,
        histogram: deciles(&mut run.objectives),
        report,
        exploratory,
    })
}

fn deciles(values: &mut [f64]) -> Vec<f64> {
    if values.is_empty() {
        return Vec::new();
    }
    values.sort_by(f64::total_cmp);
    let last = values.len() - 1;
    (0..=10)
        .map(|k| values[(k * last + 5) / 10])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_bent_cyclic, SequenceSpec};

    #[test]
    fn objective_examples() {
        let z5 = CharacterTable::for_label("Z5").unwrap();
        let bent = make_bent_cyclic(&SequenceSpec::zadoff_chu(5, 2)).unwrap();
        assert!(objective(&z5, bent.function.coeffs()).unwrap() < 1e-9);

        for n in 2..8 {
            let ct = CharacterTable::for_label(&format!("Z{n}")).unwrap();
            let mut a = vec![C64::new(0., 0.); n];
            a[0] = C64::new(1., 0.);
            assert!((objective(&ct, &a).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(objective(&z5, &[C64::new(1., 0.)]).is_err());
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let ct = CharacterTable::for_label("S3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = Params::random(3, &mut rng).coeffs();
        let values = evaluate(&ct, &a);
        let jac = jacobian(&ct, &values);
        let base = residuals(&ct, &values);
        let h = 1e-7;
        for col in 0..6 {
            let mut b = a.clone();
            if col < 3 {
                b[col].re += h;
            } else {
                b[col - 3].im += h;
            }
            let moved = residuals(&ct, &evaluate(&ct, &b));
            for row in 0..base.len() {
                let fd = (moved[row] - base[row]) / h;
                assert!((fd - jac[(row, col)]).abs() < 1e-5, "row {row} col {col}");
            }
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let cfg = SearchConfig::new("S3", 3000, 11);
        let a = run_search(&cfg).unwrap();
        let b = run_search(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.histogram.len(), 11);
        assert_eq!(a.evaluations, 3000);
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(run_search(&SearchConfig::new("Z4", 0, 1)).is_err());
        assert!(matches!(
            run_search(&SearchConfig::new("A5", 10, 1)),
            Err(Error::UnknownGroup(_))
        ));
    }
}
