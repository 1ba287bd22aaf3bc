//! Bent class functions on Z_n from CAZAC sequences.
//!
//! A unimodular sequence `g` with zero periodic autocorrelation at every
//! nonzero lag gives the bent class function with coefficients `g/√n`.
//! Every construction re-checks itself with [`crate::bent::is_bent`] before
//! it is returned.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bent::{is_bent, BentReport};
use crate::chars::CharacterTable;
use crate::class_fn::{ClassFunction, DEFAULT_TOL};
use crate::cplx::{gcd, unit_root, C64};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SequenceKind {
    ZadoffChu,
    QuadraticChirp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    pub n: usize,
    /// Zadoff–Chu root; ignored for chirps.
    pub root: Option<i64>,
}

impl SequenceSpec {
    pub fn zadoff_chu(n: usize, root: i64) -> Self {
        SequenceSpec {
            kind: SequenceKind::ZadoffChu,
            n,
            root: Some(root),
        }
    }

    pub fn chirp(n: usize) -> Self {
        SequenceSpec {
            kind: SequenceKind::QuadraticChirp,
            n,
            root: None,
        }
    }

    pub fn sequence(&self) -> Result<Vec<C64>> {
        match self.kind {
            SequenceKind::ZadoffChu => {
                let root = self.root.ok_or_else(|| {
                    Error::InvalidInput("Zadoff–Chu sequence needs a root".into())
                })?;
                zadoff_chu(self.n, root)
            }
            SequenceKind::QuadraticChirp => quadratic_chirp(self.n),
        }
    }
}

/// `g_k = exp(−iπ·u·k(k+1)/n)` for odd `n`, `exp(−iπ·u·k²/n)` for even `n`.
pub fn zadoff_chu(n: usize, u: i64) -> Result<Vec<C64>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if gcd(u.unsigned_abs(), n as u64) != 1 {
        return Err(Error::InvalidRoot { n, root: u });
    }
    let two_n = 2 * n as i64;
    let u = u.rem_euclid(two_n);
    Ok((0..n as i64)
        .map(|k| {
            let q = if n % 2 == 1 { k * (k + 1) } else { k * k };
            // exp(−iπ·u·q/n) = exp(2πi·(−u·q)/(2n))
            unit_root(-(u * q % two_n), two_n as u64)
        })
        .collect())
}

/// `g_k = ω^{k²}` with `ω = e^{2πi/n}`, odd `n` only.
pub fn quadratic_chirp(n: usize) -> Result<Vec<C64>> {
    if n.is_multiple_of(2) {
        return Err(Error::Parity(n));
    }
    let m = n as i64;
    Ok((0..m).map(|k| unit_root(k * k % m, n as u64)).collect())
}

/// A constructed function together with the report that certified it.
#[derive(Debug, Clone)]
pub struct Certified {
    pub function: ClassFunction,
    pub report: BentReport,
}

/// Bent class function on Z_n with coefficients `g/√n`.
pub fn make_bent_cyclic(spec: &SequenceSpec) -> Result<Certified> {
    make_bent_cyclic_with_tol(spec, DEFAULT_TOL)
}

pub fn make_bent_cyclic_with_tol(spec: &SequenceSpec, tol: f64) -> Result<Certified> {
    let g = spec.sequence()?;
    let table = CharacterTable::for_label(&format!("Z{}", spec.n))?;
    let scale = 1.0 / (spec.n as f64).sqrt();
    let function =
        ClassFunction::from_coefficients(&table, g.iter().map(|z| z * scale).collect())?;
    let report = is_bent(&function, tol);
    if !report.is_bent() {
        return Err(Error::ConstructionIntegrity(format!(
            "{spec:?}: verdict {} with max residual {:.3e}",
            report.verdict.as_str(),
            report.max_residual
        )));
    }
    Ok(Certified { function, report })
}

/// Maps generating bentness-preserving transformations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Transform {
    /// `c·f` with `|c| = 1`.
    GlobalPhase(C64),
    /// `x ↦ f(τx)`.
    Translate(usize),
    /// `f·χ_i` for a one-dimensional character, 1-based index.
    CharacterTwist(usize),
}

pub fn transform(f: &ClassFunction, op: Transform) -> Result<ClassFunction> {
    let table: &Arc<CharacterTable> = f.table();
    let group = f.group();
    let values: Vec<C64> = match op {
        Transform::GlobalPhase(c) => {
            if (c.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidInput(format!("phase {c} is not unimodular")));
            }
            f.values().iter().map(|v| v * c).collect()
        }
        Transform::Translate(tau) => {
            group.check_index(tau)?;
            (0..group.order()).map(|x| f.value(group.op(tau, x))).collect()
        }
        Transform::CharacterTwist(i) => {
            if i == 0 || i > table.len() {
                return Err(Error::InvalidInput(format!(
                    "character index {i} outside 1..={}",
                    table.len()
                )));
            }
            if table.degrees()[i - 1] != 1 {
                return Err(Error::Unsupported(format!(
                    "twist by character {i} of degree {}",
                    table.degrees()[i - 1]
                )));
            }
            (0..group.order())
                .map(|x| f.value(x) * table.value(i - 1, x))
                .collect()
        }
    };
    ClassFunction::from_values(table, values)
}
