//! Irreducible character tables.
//!
//! Abelian groups get their characters analytically as products of
//! cyclic-factor characters `x ↦ ω^{kx}`. Catalog nonabelian groups go
//! through the class-sum method in [`burnside`] and are then checked entrywise
//! against [`reference`] tables, whose row order they adopt.

pub mod burnside;
pub mod reference;

use std::sync::Arc;

use serde::Serialize;

use crate::cplx::{self, C64};
use crate::error::{Error, Result};
use crate::group::{Group, Structure};

/// Entrywise agreement required between class-sum and reference tables.
pub const REFERENCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableSource {
    Analytic,
    ClassSums,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<Group>,
    class_values: Vec<Vec<C64>>,
    phi: Vec<Vec<C64>>,
    degrees: Vec<usize>,
    root_order: usize,
    source: TableSource,
}

impl CharacterTable {
    /// Computes the table for an abelian group or a catalog group.
    pub fn compute(group: Arc<Group>) -> Result<CharacterTable> {
        let class_values = match group.structure() {
            Structure::Abelian(factors) => abelian_characters(&group, factors),
            Structure::Named(which) => {
                let computed = burnside::class_sum_characters(&group)?;
                match_reference(&group, computed, &reference::reference_table(*which))?
            }
            Structure::Loaded if group.is_abelian() => {
                sort_rows(burnside::class_sum_characters(&group)?)
            }
            Structure::Loaded => {
                return Err(Error::Unsupported(format!(
                    "character table of nonabelian group {} outside the catalog",
                    group.name()
                )))
            }
        };
        let source = match group.structure() {
            Structure::Abelian(_) => TableSource::Analytic,
            _ => TableSource::ClassSums,
        };
        Ok(CharacterTable::assemble(group, class_values, source))
    }

    pub fn for_label(label: &str) -> Result<Arc<CharacterTable>> {
        let group = Arc::new(Group::from_label(label)?);
        Ok(Arc::new(CharacterTable::compute(group)?))
    }

    /// Builds a table from given class values without any checks. Used for
    /// reference tables and perturbation tests.
    pub fn from_class_values(group: Arc<Group>, class_values: Vec<Vec<C64>>) -> CharacterTable {
        CharacterTable::assemble(group, class_values, TableSource::ClassSums)
    }

    fn assemble(group: Arc<Group>, class_values: Vec<Vec<C64>>, source: TableSource) -> Self {
        let n = group.order();
        let phi = (0..n)
            .map(|x| {
                let c = group.class_of(x);
                class_values.iter().map(|row| row[c]).collect()
            })
            .collect();
        let degrees = class_values
            .iter()
            .map(|row| row[0].re.round().max(0.0) as usize)
            .collect();
        let root_order = group.exponent();
        CharacterTable {
            group,
            class_values,
            phi,
            degrees,
            root_order,
            source,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Number of irreducible characters.
    pub fn len(&self) -> usize {
        self.class_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_values.is_empty()
    }

    /// `r × r`: character `i` on class representative `c`.
    pub fn class_values(&self) -> &[Vec<C64>] {
        &self.class_values
    }

    /// `n × r`: `phi[x][i]` is character `i` at element `x`.
    pub fn phi(&self) -> &[Vec<C64>] {
        &self.phi
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn root_order(&self) -> usize {
        self.root_order
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    #[inline]
    pub fn value(&self, character: usize, x: usize) -> C64 {
        self.phi[x][character]
    }

    /// Character `i` evaluated at every element.
    pub fn character(&self, i: usize) -> Vec<C64> {
        self.phi.iter().map(|row| row[i]).collect()
    }

    /// `⟨u, v⟩ = (1/n) Σ_x u(x)·conj(v(x))`.
    pub fn inner_product(&self, u: &[C64], v: &[C64]) -> Result<C64> {
        let n = self.order();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        let sum: C64 = u.iter().zip(v).map(|(a, b)| a * b.conj()).sum();
        Ok(sum / n as f64)
    }

    pub fn verify_orthogonality(&self, tol: f64) -> OrthogonalityReport {
        let n = self.order() as f64;
        let sizes = self.group.class_sizes();
        let r = self.len();
        let mut row_deviation: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                let s: C64 = (0..r)
                    .map(|c| self.class_values[i][c] * self.class_values[j][c].conj() * sizes[c] as f64)
                    .sum::<C64>()
                    / n;
                let target = if i == j { 1.0 } else { 0.0 };
                row_deviation = row_deviation.max((s - target).norm());
            }
        }
        let cols = sizes.len();
        let mut column_deviation: f64 = 0.0;
        for a in 0..cols {
            for b in 0..cols {
                let s: C64 = (0..r)
                    .map(|i| self.class_values[i][a] * self.class_values[i][b].conj())
                    .sum();
                let target = if a == b { n / sizes[a] as f64 } else { 0.0 };
                column_deviation = column_deviation.max((s - target).norm());
            }
        }
        OrthogonalityReport {
            row_deviation,
            column_deviation,
            tol,
            pass: row_deviation < tol && column_deviation < tol && r == cols,
        }
    }

    /// `max |(Φ · (1/n) conj(Φ)ᵀ − I)_{xy}|`; only square for abelian groups.
    pub fn phi_inverse_deviation(&self) -> Result<f64> {
        let n = self.order();
        if self.len() != n {
            return Err(Error::Unsupported(format!(
                "Φ is {n}×{} for {}; the inverse identity needs an abelian group",
                self.len(),
                self.group.name()
            )));
        }
        let mut dev: f64 = 0.0;
        for x in 0..n {
            for y in 0..n {
                let s: C64 = (0..n)
                    .map(|i| self.phi[x][i] * self.phi[y][i].conj())
                    .sum::<C64>()
                    / n as f64;
                let target = if x == y { 1.0 } else { 0.0 };
                dev = dev.max((s - target).norm());
            }
        }
        Ok(dev)
    }

    /// Labels of class representatives, in column order.
    pub fn class_labels(&self) -> Vec<String> {
        self.group
            .class_reps()
            .iter()
            .map(|&x| self.group.element_label(x).to_string())
            .collect()
    }

    /// Table rendered for pretty-printing: header row then one row per
    /// character, each cell symbolic followed by numeric real/imag columns.
    pub fn csv_rows(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let labels = self.class_labels();
        let mut header = vec!["character".to_string()];
        for l in &labels {
            header.push(l.clone());
            header.push(format!("{l}.re"));
            header.push(format!("{l}.im"));
        }
        let rows = self
            .class_values
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out = vec![format!("chi_{}", i + 1)];
                for z in row {
                    out.push(cplx::render(*z, self.root_order as u64));
                    out.push(format!("{:.15}", clean(z.re)));
                    out.push(format!("{:.15}", clean(z.im)));
                }
                out
            })
            .collect();
        (header, rows)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let characters: Vec<_> = self
            .class_values
            .iter()
            .zip(&self.degrees)
            .enumerate()
            .map(|(i, (row, d))| {
                serde_json::json!({
                    "name": format!("chi_{}", i + 1),
                    "degree": d,
                    "values": row.iter().map(|z| [clean(z.re), clean(z.im)]).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "group": self.group.name(),
            "order": self.order(),
            "classes": self.class_labels(),
            "class_sizes": self.group.class_sizes(),
            "root_order": self.root_order,
            "characters": characters,
        })
    }
}

/// Snaps values within 1e-12 of an integer and maps `-0.0` to `0.0`, so
/// rendered output is stable.
fn clean(v: f64) -> f64 {
    let r = v.round();
    if (v - r).abs() < 1e-12 {
        r + 0.0
    } else {
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthogonalityReport {
    pub row_deviation: f64,
    pub column_deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

fn abelian_characters(group: &Group, factors: &[usize]) -> Vec<Vec<C64>> {
    let n = group.order();
    let modulus = factors.iter().fold(1u64, |acc, &m| cplx::lcm(acc, m as u64));
    let digits = |mut x: usize| {
        let mut d = vec![0usize; factors.len()];
        for (slot, &m) in d.iter_mut().zip(factors).rev() {
            *slot = x % m;
            x /= m;
        }
        d
    };
    // classes of an abelian group are the singletons in element order
    let element_digits: Vec<Vec<usize>> = group
        .class_reps()
        .iter()
        .map(|&x| digits(x))
        .collect();
    (0..n)
        .map(|k| {
            let kd = digits(k);
            element_digits
                .iter()
                .map(|xd| {
                    let exponent: u64 = kd
                        .iter()
                        .zip(xd)
                        .zip(factors)
                        .map(|((&ki, &xi), &m)| (ki * xi % m) as u64 * (modulus / m as u64))
                        .sum();
                    cplx::unit_root((exponent % modulus) as i64, modulus)
                })
                .collect()
        })
        .collect()
}

/// Permutes computed rows into reference order, failing if any reference row
/// has no computed counterpart within [`REFERENCE_TOL`].
fn match_reference(
    group: &Group,
    computed: Vec<Vec<C64>>,
    reference: &[Vec<f64>],
) -> Result<Vec<Vec<C64>>> {
    if computed.len() != reference.len() {
        return Err(Error::ReferenceMismatch {
            group: group.name().into(),
            detail: format!("{} characters computed, {} expected", computed.len(), reference.len()),
        });
    }
    let mut used = vec![false; computed.len()];
    let mut ordered = Vec::with_capacity(reference.len());
    for (i, target) in reference.iter().enumerate() {
        let best = computed
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, row)| {
                let dev = row
                    .iter()
                    .zip(target)
                    .map(|(z, &t)| (z - C64::new(t, 0.0)).norm())
                    .fold(0.0, f64::max);
                (k, dev)
            })
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((k, dev)) if dev <= REFERENCE_TOL => {
                used[k] = true;
                ordered.push(computed[k].clone());
            }
            Some((_, dev)) => {
                return Err(Error::ReferenceMismatch {
                    group: group.name().into(),
                    detail: format!("reference row {i} closest computed row deviates by {dev:.3e}"),
                })
            }
            None => unreachable!("row counts checked above"),
        }
    }
    Ok(ordered)
}

/// Degree first, trivial character first among linear ones, then
/// lexicographic on (re, im) of class values.
fn sort_rows(mut rows: Vec<Vec<C64>>) -> Vec<Vec<C64>> {
    let key = |row: &Vec<C64>| {
        let trivial = row.iter().all(|z| (z - C64::new(1.0, 0.0)).norm() < 1e-9);
        let snapped: Vec<(i64, i64)> = row
            .iter()
            .map(|z| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64))
            .collect();
        (row[0].re.round() as i64, !trivial, snapped)
    };
    rows.sort_by_key(key);
    rows
}
