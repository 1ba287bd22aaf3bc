//! Bentness by derivative sums, with a Fourier-flatness cross-check on
//! abelian groups.
//!
//! For `f: G → S¹` the derivative sum in direction σ is
//! `D(σ) = Σ_x conj(f(x))·f(σx)`. `f` is bent iff `D(σ) = 0` for every
//! `σ ≠ e`. Sums run over `x` in ascending element index so results do not
//! depend on evaluation order.

use serde::Serialize;

use crate::class_fn::{unimodular_deviation, ClassFunction};
use crate::cplx::C64;
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "BENT")]
    Bent,
    #[serde(rename = "NOT_BENT")]
    NotBent,
    #[serde(rename = "NOT_UNIMODULAR")]
    NotUnimodular,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Bent => "BENT",
            Verdict::NotBent => "NOT_BENT",
            Verdict::NotUnimodular => "NOT_UNIMODULAR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BentReport {
    pub verdict: Verdict,
    pub max_residual: f64,
    pub unimodular_deviation: f64,
    /// `D(σ)` for every `σ ≠ e`, ascending element index.
    pub residuals: Vec<C64>,
    pub tol: f64,
    pub group: String,
    /// `D(e) = Σ_x |f(x)|²`; not part of the verdict.
    pub identity_sum: C64,
    /// Right-translate sums `Σ_x conj(f(x))·f(xσ)`, reported for nonabelian
    /// groups only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_residuals: Option<Vec<C64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_max_residual: Option<f64>,
}

impl BentReport {
    pub fn is_bent(&self) -> bool {
        self.verdict == Verdict::Bent
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `Σ_x conj(f(x))·f(σx)`.
pub fn derivative_sum(f: &ClassFunction, sigma: usize) -> Result<C64> {
    f.group().check_index(sigma)?;
    Ok(left_sum(f.group(), f.values(), sigma))
}

pub(crate) fn left_sum(group: &Group, values: &[C64], sigma: usize) -> C64 {
    (0..group.order())
        .map(|x| values[x].conj() * values[group.op(sigma, x)])
        .sum()
}

fn right_sum(group: &Group, values: &[C64], sigma: usize) -> C64 {
    (0..group.order())
        .map(|x| values[x].conj() * values[group.op(x, sigma)])
        .sum()
}

fn directions(group: &Group) -> impl Iterator<Item = usize> + '_ {
    (0..group.order()).filter(move |&s| s != group.identity())
}

/// Full diagnostic report. The verdict is BENT iff the function is
/// unimodular within `tol` and every `|D(σ)|` is at most `n·tol`.
pub fn is_bent(f: &ClassFunction, tol: f64) -> BentReport {
    let group = f.group();
    let values = f.values();
    let n = group.order();
    let residuals: Vec<C64> = directions(group).map(|s| left_sum(group, values, s)).collect();
    let max_residual = residuals.iter().map(|d| d.norm()).fold(0.0, f64::max);
    let deviation = unimodular_deviation(values);
    let (right_residuals, right_max_residual) = if group.is_abelian() {
        (None, None)
    } else {
        let right: Vec<C64> = directions(group).map(|s| right_sum(group, values, s)).collect();
        let max = right.iter().map(|d| d.norm()).fold(0.0, f64::max);
        (Some(right), Some(max))
    };
    let verdict = if deviation > tol {
        Verdict::NotUnimodular
    } else if max_residual > n as f64 * tol {
        Verdict::NotBent
    } else {
        Verdict::Bent
    };
    BentReport {
        verdict,
        max_residual,
        unimodular_deviation: deviation,
        residuals,
        tol,
        group: group.name().to_string(),
        identity_sum: left_sum(group, values, group.identity()),
        right_residuals,
        right_max_residual,
    }
}

/// `|f̂(χ_i)|²` with `f̂(χ_i) = Σ_x f(x)·conj(χ_i(x))`.
pub fn spectrum(f: &ClassFunction) -> Result<Vec<f64>> {
    let table = f.table();
    if !f.group().is_abelian() {
        return Err(Error::Unsupported(format!(
            "Fourier spectrum on nonabelian group {}",
            f.group().name()
        )));
    }
    Ok((0..table.len())
        .map(|i| {
            let hat: C64 = f
                .values()
                .iter()
                .enumerate()
                .map(|(x, v)| v * table.value(i, x).conj())
                .sum();
            hat.norm_sqr()
        })
        .collect())
}

/// Flat spectrum test: unimodular within `tol` and every `|f̂(χ_i)|²` within
/// `n·tol` of `n`.
pub fn is_bent_spectral(f: &ClassFunction, tol: f64) -> Result<bool> {
    let spec = spectrum(f)?;
    let n = f.group().order() as f64;
    if unimodular_deviation(f.values()) > tol {
        return Ok(false);
    }
    Ok(spec.iter().all(|s| (s - n).abs() <= n * tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::CharacterTable;
    use crate::cplx::unit_root;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn constant_function_sums_to_order() {
        for n in 1..8 {
            let ct = CharacterTable::for_label(&format!("Z{n}")).unwrap();
            let f = ClassFunction::from_values(&ct, vec![c(1., 0.); n]).unwrap();
            for s in 0..n {
                assert!((derivative_sum(&f, s).unwrap() - c(n as f64, 0.)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn character_derivative() {
        let z3 = CharacterTable::for_label("Z3").unwrap();
        let f = ClassFunction::from_values(&z3, z3.character(1)).unwrap();
        let d = derivative_sum(&f, 1).unwrap();
        assert!((d - unit_root(1, 3) * 3.0).norm() < 1e-12);
        assert!(derivative_sum(&f, 3).is_err());

        let report = is_bent(&f, 1e-8);
        assert_eq!(report.verdict, Verdict::NotBent);
        assert!((report.max_residual - 3.0).abs() < 1e-12);
        assert_eq!(report.residuals.len(), 2);
    }

    #[test]
    fn z2_counterexample_is_not_unimodular() {
        let z2 = CharacterTable::for_label("Z2").unwrap();
        let f = ClassFunction::from_coefficients(&z2, vec![c(FRAC_1_SQRT_2, 0.); 2]).unwrap();
        assert_eq!(is_bent(&f, 1e-8).verdict, Verdict::NotUnimodular);
    }

    #[test]
    fn z3_bent_example() {
        let z3 = CharacterTable::for_label("Z3").unwrap();
        let w = unit_root(1, 3);
        let s = 3f64.sqrt();
        let f = ClassFunction::from_coefficients(&z3, vec![c(1. / s, 0.), w / s, w / s]).unwrap();
        let report = is_bent(&f, 1e-8);
        assert_eq!(report.verdict, Verdict::Bent, "{report:?}");
        assert!((report.identity_sum - c(3., 0.)).norm() < 3e-10);
        let spec = spectrum(&f).unwrap();
        for v in spec {
            assert!((v - 3.0).abs() < 1e-12);
        }
        assert!(is_bent_spectral(&f, 1e-8).unwrap());
    }

    #[test]
    fn spectra_of_simple_functions() {
        let z4 = CharacterTable::for_label("Z4").unwrap();
        let one = ClassFunction::from_values(&z4, vec![c(1., 0.); 4]).unwrap();
        let s = spectrum(&one).unwrap();
        assert!((s[0] - 16.0).abs() < 1e-12 && s[1..].iter().all(|v| v.abs() < 1e-12));

        let chi2 = ClassFunction::from_values(&z4, z4.character(1)).unwrap();
        let s = spectrum(&chi2).unwrap();
        assert!((s[1] - 16.0).abs() < 1e-12);
        assert!(!is_bent_spectral(&chi2, 1e-8).unwrap());

        let z1 = CharacterTable::for_label("Z1").unwrap();
        let trivial = ClassFunction::from_values(&z1, vec![c(1., 0.)]).unwrap();
        assert!(is_bent_spectral(&trivial, 1e-8).unwrap());
        assert_eq!(is_bent(&trivial, 1e-8).verdict, Verdict::Bent);
    }

    #[test]
    fn nonabelian_reports_both_sides() {
        let s3 = CharacterTable::for_label("S3").unwrap();
        let f = ClassFunction::from_coefficients(&s3, vec![c(0.2, 0.1), c(-0.5, 0.3), c(0.4, 0.)]).unwrap();
        let report = is_bent(&f, 1e-8);
        let right = report.right_residuals.as_ref().unwrap();
        assert_eq!(right.len(), 5);
        // σx and xσ are conjugate, so class functions give equal sums
        for (l, r) in report.residuals.iter().zip(right) {
            assert!((l - r).norm() < 1e-12);
        }
        assert!(matches!(spectrum(&f), Err(Error::Unsupported(_))));
        assert!(is_bent_spectral(&f, 1e-8).is_err());
    }

    #[test]
    fn report_json_shape() {
        let z2 = CharacterTable::for_label("Z2").unwrap();
        let f = ClassFunction::from_coefficients(&z2, vec![c(FRAC_1_SQRT_2, 0.), c(0., FRAC_1_SQRT_2)]).unwrap();
        let report = is_bent(&f, 1e-8);
        assert!(report.is_bent());
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["verdict"], "BENT");
        assert!(v["residuals"][0].is_array());
        assert!(v.get("right_residuals").is_none());
    }
}
