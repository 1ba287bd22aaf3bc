//! Coefficient-space conditions for bentness of class functions.
//!
//! Each condition is evaluated exactly as stated, term by term, and is meant
//! to be checked against the brute-force derivative sums in [`crate::bent`]
//! rather than trusted. Coefficients are indexed `a_1..a_r` in character
//! table row order.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::bent::left_sum;
use crate::chars::CharacterTable;
use crate::class_fn::evaluate;
use crate::cplx::C64;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub equation: String,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub name: String,
    pub satisfied: bool,
    pub violations: Vec<Violation>,
    pub tol: f64,
}

impl CriterionOutcome {
    fn from_checks(name: &str, tol: f64, checks: Vec<(String, f64)>) -> Self {
        let violations: Vec<Violation> = checks
            .into_iter()
            .filter(|(_, r)| !(*r <= tol))
            .map(|(equation, residual)| Violation { equation, residual })
            .collect();
        CriterionOutcome {
            name: name.to_string(),
            satisfied: violations.is_empty(),
            violations,
            tol,
        }
    }
}

/// Solution of a linear system in the squared magnitudes `|a_i|²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MagnitudeSolution {
    pub magnitudes: Vec<f64>,
    /// `max |M·w − y|` at the solution.
    pub residual: f64,
    /// Each equation's left-hand side minus right-hand side at the solution.
    pub equations: Vec<(String, f64)>,
}

/// Necessary condition on an abelian group: every `|a_i|² = 1/n`.
pub fn abelian_magnitude_necessary(
    table: &CharacterTable,
    a: &[C64],
    tol: f64,
) -> Result<CriterionOutcome> {
    let n = table.order();
    if table.len() != n {
        return Err(Error::Unsupported(format!(
            "abelian magnitude condition on nonabelian group {}",
            table.group().name()
        )));
    }
    if a.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: a.len(),
        });
    }
    let checks = a
        .iter()
        .enumerate()
        .map(|(i, z)| {
            (
                format!("|a_{}|^2 = 1/{n}", i + 1),
                (z.norm_sqr() - 1.0 / n as f64).abs(),
            )
        })
        .collect();
    Ok(CriterionOutcome::from_checks("abelian_magnitude_necessary", tol, checks))
}

/// Solves `Φ w = (1, 0, …, 0)ᵀ` through the explicit inverse
/// `(1/n)·conj(Φ)ᵀ`, where row `x` of `Φ` holds every character at element
/// `x` and the right-hand side is 1 at the identity.
pub fn solve_autocorrelation_system(table: &CharacterTable) -> Result<MagnitudeSolution> {
    let n = table.order();
    if table.len() != n {
        return Err(Error::Unsupported(format!(
            "Φ is not square for {}",
            table.group().name()
        )));
    }
    let e = table.group().identity();
    let phi = table.phi();
    let w: Vec<C64> = (0..n).map(|i| phi[e][i].conj() / n as f64).collect();
    let mut equations = Vec::with_capacity(n);
    let mut residual: f64 = 0.0;
    for (x, row) in phi.iter().enumerate() {
        let lhs: C64 = row.iter().zip(&w).map(|(p, wi)| p * wi).sum();
        let rhs = if x == e { 1.0 } else { 0.0 };
        let r = (lhs - rhs).norm();
        residual = residual.max(r);
        equations.push((format!("row {}", table.group().element_label(x)), r));
    }
    Ok(MagnitudeSolution {
        magnitudes: w.iter().map(|z| z.re).collect(),
        residual,
        equations,
    })
}

/// Z_n iff condition: `|a_i| = 1/√n` for all `i`, and for every shift
/// `k = 1..⌊n/2⌋` the cyclic sum `Σ_i conj(a_i)·a_{i+k}` (indices mod n)
/// vanishes.
pub fn cyclic_criterion(a: &[C64], tol: f64) -> Result<CriterionOutcome> {
    let n = a.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "cyclic criterion needs at least 2 coefficients, got {n}"
        )));
    }
    let target = 1.0 / (n as f64).sqrt();
    let mut checks: Vec<(String, f64)> = a
        .iter()
        .enumerate()
        .map(|(i, z)| (format!("|a_{}| = 1/sqrt({n})", i + 1), (z.norm() - target).abs()))
        .collect();
    for k in 1..=n / 2 {
        checks.push((format!("shift {k} sum"), cyclic_shift_sum(a, k).norm()));
    }
    Ok(CriterionOutcome::from_checks("cyclic_criterion", tol, checks))
}

/// `Σ_i conj(a_i)·a_{(i+k) mod n}`.
pub fn cyclic_shift_sum(a: &[C64], k: usize) -> C64 {
    let n = a.len();
    (0..n).map(|i| a[i].conj() * a[(i + k) % n]).sum()
}

/// Klein four-group condition, with the three bilinear sums taken exactly as
/// stated:
///
/// * R1: `conj(a₁)a₂ + conj(a₃)a₄ + conj(a₂)a₁ + conj(a₄)a₃`
/// * R2: `conj(a₁)a₃ + conj(a₂)a₄ + conj(a₃)a₁ + conj(a₄)a₂`
/// * R3: `conj(a₁)a₃ + conj(a₃)a₁ + conj(a₂)a₄ + conj(a₄)a₂`
///
/// R2 and R3 are the same sum. No condition pairs `a₁` with `a₄`; see
/// [`klein_missing_pairing`].
pub fn klein_criterion(a: &[C64], tol: f64) -> Result<CriterionOutcome> {
    if a.len() != 4 {
        return Err(Error::LengthMismatch {
            expected: 4,
            got: a.len(),
        });
    }
    let b = |i: usize, j: usize| a[i - 1].conj() * a[j - 1];
    let r1 = b(1, 2) + b(3, 4) + b(2, 1) + b(4, 3);
    let r2 = b(1, 3) + b(2, 4) + b(3, 1) + b(4, 2);
    let r3 = b(1, 3) + b(3, 1) + b(2, 4) + b(4, 2);
    let mut checks: Vec<(String, f64)> = a
        .iter()
        .enumerate()
        .map(|(i, z)| (format!("|a_{}| = 1/2", i + 1), (z.norm() - 0.5).abs()))
        .collect();
    checks.push(("R1".into(), r1.norm()));
    checks.push(("R2".into(), r2.norm()));
    checks.push(("R3".into(), r3.norm()));
    Ok(CriterionOutcome::from_checks("klein_criterion", tol, checks))
}

/// `conj(a₁)a₄ + conj(a₄)a₁ + conj(a₂)a₃ + conj(a₃)a₂`: the autocorrelation
/// of the coefficients at the character `(1,1)`, which unimodularity on V4
/// also forces to zero.
pub fn klein_missing_pairing(a: &[C64]) -> Result<C64> {
    if a.len() != 4 {
        return Err(Error::LengthMismatch {
            expected: 4,
            got: a.len(),
        });
    }
    let b = |i: usize, j: usize| a[i - 1].conj() * a[j - 1];
    Ok(b(1, 4) + b(4, 1) + b(2, 3) + b(3, 2))
}

/// Q8 magnitude condition `|a_i|² = 2/9` (i ≤ 4), `|a_5|² = 1/9`.
pub fn q8_necessary(a: &[C64], tol: f64) -> Result<CriterionOutcome> {
    if a.len() != 5 {
        return Err(Error::LengthMismatch {
            expected: 5,
            got: a.len(),
        });
    }
    let targets = [2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 1.0 / 9.0];
    let labels = ["2/9", "2/9", "2/9", "2/9", "1/9"];
    let checks = a
        .iter()
        .zip(targets)
        .zip(labels)
        .enumerate()
        .map(|(i, ((z, t), l))| (format!("|a_{}|^2 = {l}", i + 1), (z.norm_sqr() - t).abs()))
        .collect();
    Ok(CriterionOutcome::from_checks("q8_necessary", tol, checks))
}

/// Rows of the Q8 magnitude system in `(|a_1|², …, |a_5|²)`, with their
/// right-hand sides. The `σ = −1` row weights `|a_5|²` by −8; the
/// brute-force derivative sum at `σ = −1` gives a different row (see
/// [`oracle_magnitude_system`]).
pub const Q8_SYSTEM: [(&str, [f64; 5], f64); 5] = [
    ("sigma=-1", [1., 1., 1., 1., -8.], 0.),
    ("sigma=i", [1., 1., -1., -1., 0.], 0.),
    ("sigma=j", [1., -1., -1., 1., 0.], 0.),
    ("sigma=k", [1., -1., 1., -1., 0.], 0.),
    ("normalization", [1., 1., 1., 1., 1.], 1.),
];

pub fn solve_q8_system() -> Result<MagnitudeSolution> {
    let rows: Vec<(String, Vec<f64>, f64)> = Q8_SYSTEM
        .iter()
        .map(|(l, r, b)| (l.to_string(), r.to_vec(), *b))
        .collect();
    solve_square(&rows)
}

fn solve_square(rows: &[(String, Vec<f64>, f64)]) -> Result<MagnitudeSolution> {
    let m = rows.len();
    let mat = DMatrix::from_fn(m, m, |i, j| rows[i].1[j]);
    let rhs = DVector::from_iterator(m, rows.iter().map(|r| r.2));
    let sol = mat
        .clone()
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::NumericDegeneracy("singular magnitude system".into()))?;
    let lhs = &mat * &sol;
    let equations: Vec<(String, f64)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r.0.clone(), lhs[i] - r.2))
        .collect();
    let residual = equations.iter().map(|e| e.1.abs()).fold(0.0, f64::max);
    Ok(MagnitudeSolution {
        magnitudes: sol.iter().copied().collect(),
        residual,
        equations,
    })
}

/// Recovers the Hermitian matrix `H` of a form `q(a) = a^H H a` by
/// polarization on basis vectors.
pub fn hermitian_matrix(r: usize, q: impl Fn(&[C64]) -> C64) -> Vec<Vec<C64>> {
    let zero = C64::new(0.0, 0.0);
    let basis = |terms: &[(usize, C64)]| {
        let mut v = vec![zero; r];
        for &(i, z) in terms {
            v[i] += z;
        }
        v
    };
    let one = C64::new(1.0, 0.0);
    let imag = C64::new(0.0, 1.0);
    let diag: Vec<C64> = (0..r).map(|i| q(&basis(&[(i, one)]))).collect();
    let mut h = vec![vec![zero; r]; r];
    for i in 0..r {
        h[i][i] = diag[i];
        for j in 0..r {
            if i == j {
                continue;
            }
            let p = q(&basis(&[(i, one), (j, one)])) - diag[i] - diag[j];
            let s = q(&basis(&[(i, one), (j, imag)])) - diag[i] - diag[j];
            h[i][j] = (p - imag * s) / 2.0;
        }
    }
    h
}

fn max_off_diagonal(h: &[Vec<C64>]) -> f64 {
    let mut m: f64 = 0.0;
    for (i, row) in h.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                m = m.max(z.norm());
            }
        }
    }
    m
}

/// Magnitude system read off the brute-force derivative sums.
///
/// For each `σ ≠ e`, `D(σ)/n` is a Hermitian form in the coefficients; its
/// cross terms vanish for class functions, so its diagonal gives a linear
/// equation in the `|a_i|²` (two when the diagonal is complex). Together with `Σ|a_i|² = 1` the system is
/// solved in the least-squares sense.
pub fn oracle_magnitude_system(table: &CharacterTable) -> Result<OracleSystem> {
    let group = table.group();
    let n = group.order();
    let r = table.len();
    let mut rows: Vec<(String, Vec<f64>, f64)> = Vec::new();
    let mut off_diagonal: f64 = 0.0;
    let mut imaginary: f64 = 0.0;
    for sigma in (0..n).filter(|&s| s != group.identity()) {
        let h = hermitian_matrix(r, |a| left_sum(group, &evaluate(table, a), sigma) / n as f64);
        off_diagonal = off_diagonal.max(max_off_diagonal(&h));
        imaginary = imaginary.max((0..r).map(|i| h[i][i].im.abs()).fold(0.0, f64::max));
        let label = group.element_label(sigma);
        rows.push((format!("sigma={label}"), (0..r).map(|i| h[i][i].re).collect(), 0.0));
        if (0..r).any(|i| h[i][i].im.abs() > 1e-12) {
            rows.push((format!("sigma={label} (im)"), (0..r).map(|i| h[i][i].im).collect(), 0.0));
        }
    }
    let norm = hermitian_matrix(r, |a| {
        evaluate(table, a).iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64 * C64::new(1.0, 0.0)
    });
    off_diagonal = off_diagonal.max(max_off_diagonal(&norm));
    rows.push((
        "normalization".into(),
        (0..r).map(|i| norm[i][i].re).collect(),
        1.0,
    ));

    let m = rows.len();
    let mat = DMatrix::from_fn(m, r, |i, j| rows[i].1[j]);
    let rhs = DVector::from_iterator(m, rows.iter().map(|x| x.2));
    let svd = mat.clone().svd(true, true);
    let rank = svd.rank(1e-9 * svd.singular_values.max());
    let sol = svd
        .solve(&rhs, 1e-12)
        .map_err(|e| Error::NumericDegeneracy(e.to_string()))?;
    let lhs = &mat * &sol;
    let equations: Vec<(String, f64)> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| (row.0.clone(), lhs[i] - row.2))
        .collect();
    let residual = equations.iter().map(|e| e.1.abs()).fold(0.0, f64::max);
    Ok(OracleSystem {
        solution: MagnitudeSolution {
            magnitudes: sol.iter().copied().collect(),
            residual,
            equations,
        },
        max_cross_term: off_diagonal,
        max_imaginary: imaginary,
        rank,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSystem {
    pub solution: MagnitudeSolution,
    /// Largest off-diagonal entry over all extracted forms; zero for class
    /// functions.
    pub max_cross_term: f64,
    /// Largest imaginary part on a diagonal; those parts enter the system as
    /// extra rows.
    pub max_imaginary: f64,
    /// Rank of the coefficient matrix. Below the number of characters, the
    /// reported magnitudes are only the minimum-norm solution.
    pub rank: usize,
}

/// Derivative sum at a transposition, expanded over the three class values
/// `A = f(I)`, `B = f((12))`, `C = f((123))`:
/// `conj(A)B + conj(B)A + 2conj(B)C + 2conj(C)B`.
pub fn s3_transposition_equation(a: &[C64]) -> C64 {
    let (big_a, big_b, big_c) = s3_class_values(a);
    big_a.conj() * big_b + big_b.conj() * big_a + 2.0 * big_b.conj() * big_c + 2.0 * big_c.conj() * big_b
}

/// Derivative sum at a 3-cycle: `conj(A)C + conj(C)A + 3conj(B)B + conj(C)C`.
pub fn s3_three_cycle_equation(a: &[C64]) -> C64 {
    let (big_a, big_b, big_c) = s3_class_values(a);
    big_a.conj() * big_c + big_c.conj() * big_a + 3.0 * big_b.conj() * big_b + big_c.conj() * big_c
}

/// `(1/6)(|A|² + 3|B|² + 2|C|²)`, i.e. the mean of `|f|²`.
pub fn s3_normalization(a: &[C64]) -> C64 {
    let (big_a, big_b, big_c) = s3_class_values(a);
    C64::new(
        (big_a.norm_sqr() + 3.0 * big_b.norm_sqr() + 2.0 * big_c.norm_sqr()) / 6.0,
        0.0,
    )
}

fn s3_class_values(a: &[C64]) -> (C64, C64, C64) {
    (a[0] + a[1] + 2.0 * a[2], a[0] - a[1], a[0] + a[1] - a[2])
}

/// Certificate that no class function on S3 is bent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct S3Certificate {
    /// Forced `(|a₁|², |a₂|², |a₃|²)`.
    pub magnitudes: [f64; 3],
    /// Forced `conj(a₁)a₂ + conj(a₂)a₁`, from `|f((12))|² = 1`.
    pub cross_term: f64,
    /// `|conj(a₁)a₂ + conj(a₂)a₁|`, the inner product `⟨(a₁,a₂),(a₂,a₁)⟩` in modulus.
    pub cs_lhs: f64,
    /// `‖(a₁,a₂)‖·‖(a₂,a₁)‖ = |a₁|² + |a₂|²`.
    pub cs_rhs: f64,
    pub contradiction: bool,
    /// Residual of the 3×3 magnitude system.
    pub system_residual: f64,
    /// Largest cross-term coefficient in the expanded equations.
    pub max_cross_term: f64,
    /// `2(|a₁|² + |a₂|²) − |a₃|²` at the solution.
    pub three_cycle_balance: f64,
    pub tol: f64,
}

pub fn s3_certificate(tol: f64) -> Result<S3Certificate> {
    let forms: [(&str, fn(&[C64]) -> C64, f64); 3] = [
        ("transposition", s3_transposition_equation, 0.0),
        ("three-cycle", s3_three_cycle_equation, 0.0),
        ("normalization", s3_normalization, 1.0),
    ];
    let mut rows = Vec::new();
    let mut cross: f64 = 0.0;
    for (label, form, rhs) in forms {
        let h = hermitian_matrix(3, form);
        cross = cross.max(max_off_diagonal(&h));
        rows.push((label.to_string(), (0..3).map(|i| h[i][i].re).collect(), rhs));
    }
    let sol = solve_square(&rows)?;
    let m = [sol.magnitudes[0], sol.magnitudes[1], sol.magnitudes[2]];
    let pair = m[0] + m[1];
    let cross_term = pair - 1.0;
    let cs_lhs = cross_term.abs();
    let cs_rhs = pair.sqrt() * pair.sqrt();
    Ok(S3Certificate {
        magnitudes: m,
        cross_term,
        cs_lhs,
        cs_rhs,
        contradiction: cs_lhs > cs_rhs + tol,
        system_residual: sol.residual,
        max_cross_term: cross,
        three_cycle_balance: 2.0 * pair - m[2],
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::unit_root;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn z3_bent() -> Vec<C64> {
        let w = unit_root(1, 3);
        let s = 3f64.sqrt();
        vec![c(1. / s, 0.), w / s, w / s]
    }

    #[test]
    fn abelian_magnitudes() {
        let z3 = CharacterTable::for_label("Z3").unwrap();
        assert!(abelian_magnitude_necessary(&z3, &z3_bent(), 1e-8).unwrap().satisfied);
        let out = abelian_magnitude_necessary(&z3, &[c(1., 0.), c(0., 0.), c(0., 0.)], 1e-8).unwrap();
        assert!(!out.satisfied);
        assert_eq!(out.violations.len(), 3);
        assert!(abelian_magnitude_necessary(&z3, &[c(1., 0.)], 1e-8).is_err());
    }

    #[test]
    fn autocorrelation_system_z3() {
        let z3 = CharacterTable::for_label("Z3").unwrap();
        let sol = solve_autocorrelation_system(&z3).unwrap();
        for w in &sol.magnitudes {
            assert!((w - 1.0 / 3.0).abs() < 1e-15);
        }
        assert!(sol.residual < 1e-14);
    }

    #[test]
    fn cyclic_examples() {
        assert!(cyclic_criterion(&z3_bent(), 1e-8).unwrap().satisfied);
        let s = 3f64.sqrt();
        let flat = vec![c(1. / s, 0.); 3];
        let out = cyclic_criterion(&flat, 1e-8).unwrap();
        assert!(!out.satisfied);
        assert_eq!(out.violations[0].equation, "shift 1 sum");
        assert!((out.violations[0].residual - 1.0).abs() < 1e-12);
        assert!(cyclic_criterion(&[c(1., 0.)], 1e-8).is_err());
    }

    #[test]
    fn z4_shift_sums_match_stated_forms() {
        let a = [c(0.3, 0.1), c(-0.2, 0.4), c(0.5, -0.3), c(0.1, 0.9)];
        let b = |i: usize, j: usize| a[i - 1].conj() * a[j - 1];
        let lag1 = b(1, 2) + b(2, 3) + b(3, 4) + b(4, 1);
        let lag2 = b(1, 3) + b(3, 1) + b(2, 4) + b(4, 2);
        assert!((cyclic_shift_sum(&a, 1) - lag1).norm() < 1e-15);
        assert!((cyclic_shift_sum(&a, 2) - lag2).norm() < 1e-15);
    }

    #[test]
    fn klein_examples() {
        let bent = [c(0.5, 0.), c(0.5, 0.), c(0.5, 0.), c(-0.5, 0.)];
        assert!(klein_criterion(&bent, 1e-8).unwrap().satisfied);
        assert!(klein_missing_pairing(&bent).unwrap().norm() < 1e-15);

        let flat = [c(0.5, 0.); 4];
        assert!(!klein_criterion(&flat, 1e-8).unwrap().satisfied);

        let spike = [c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)];
        let out = klein_criterion(&spike, 1e-8).unwrap();
        assert!(out.violations.iter().any(|v| v.equation == "|a_1| = 1/2"));
        assert!(klein_criterion(&spike[..3], 1e-8).is_err());
    }

    #[test]
    fn q8_stated_system() {
        let sol = solve_q8_system().unwrap();
        let expected = [2. / 9., 2. / 9., 2. / 9., 2. / 9., 1. / 9.];
        for (m, e) in sol.magnitudes.iter().zip(expected) {
            assert!((m - e).abs() < 1e-12);
        }
        assert!(sol.residual < 1e-12);
        let flat: Vec<C64> = vec![c(0.2f64.sqrt(), 0.); 5];
        assert!(!q8_necessary(&flat, 1e-8).unwrap().satisfied);
        assert!(q8_necessary(&flat[..4], 1e-8).is_err());
    }

    #[test]
    fn polarization_recovers_matrix() {
        let h = [[c(2., 0.), c(1., -1.)], [c(1., 1.), c(-3., 0.)]];
        let q = |a: &[C64]| -> C64 {
            let mut s = c(0., 0.);
            for i in 0..2 {
                for j in 0..2 {
                    s += a[i].conj() * h[i][j] * a[j];
                }
            }
            s
        };
        let got = hermitian_matrix(2, q);
        for i in 0..2 {
            for j in 0..2 {
                assert!((got[i][j] - h[i][j]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn s3_certificate_values() {
        let cert = s3_certificate(1e-8).unwrap();
        let expected = [1. / 6., 1. / 6., 2. / 3.];
        for (m, e) in cert.magnitudes.iter().zip(expected) {
            assert!((m - e).abs() < 1e-12);
        }
        assert!((cert.cross_term + 2. / 3.).abs() < 1e-12);
        assert!((cert.cs_lhs - 2. / 3.).abs() < 1e-12);
        assert!((cert.cs_rhs - 1. / 3.).abs() < 1e-12);
        assert!(cert.contradiction);
        assert!(cert.max_cross_term < 1e-12);
        assert!(cert.three_cycle_balance.abs() < 1e-12);
    }

    #[test]
    fn oracle_systems() {
        let s3 = CharacterTable::for_label("S3").unwrap();
        let sys = oracle_magnitude_system(&s3).unwrap();
        for (m, e) in sys.solution.magnitudes.iter().zip([1. / 6., 1. / 6., 2. / 3.]) {
            assert!((m - e).abs() < 1e-12);
        }
        assert!(sys.max_cross_term < 1e-12);

        // |a_i|² = d_i²/n
        let q8 = CharacterTable::for_label("Q8").unwrap();
        let sys = oracle_magnitude_system(&q8).unwrap();
        for (m, e) in sys.solution.magnitudes.iter().zip([0.125, 0.125, 0.125, 0.125, 0.5]) {
            assert!((m - e).abs() < 1e-12, "{:?}", sys.solution.magnitudes);
        }
        assert!(sys.solution.residual < 1e-12);
    }
}
