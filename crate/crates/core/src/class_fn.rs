//! Class functions held in both the character basis and pointwise.
//!
//! Both representations are materialized at construction, so a
//! `ClassFunction` is immutable and can be shared freely.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chars::CharacterTable;
use crate::cplx::{self, C64};
use crate::error::{Error, Result};
use crate::group::Group;

/// Tolerance for the class-constancy requirement on pointwise input.
pub const CLASS_CONSTANCY_TOL: f64 = 1e-9;

/// Default tolerance for unimodularity and bentness checks.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct ClassFunction {
    table: Arc<CharacterTable>,
    coeffs: Vec<C64>,
    values: Vec<C64>,
    sync_residual: f64,
}

impl ClassFunction {
    /// `f = Σ_i a_i χ_i`, values computed as `Φ·a`.
    pub fn from_coefficients(table: &Arc<CharacterTable>, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != table.len() {
            return Err(Error::LengthMismatch {
                expected: table.len(),
                got: coeffs.len(),
            });
        }
        let values = evaluate(table, &coeffs);
        Ok(ClassFunction {
            table: table.clone(),
            coeffs,
            values,
            sync_residual: 0.0,
        })
    }

    /// Pointwise input; must be constant on classes within
    /// [`CLASS_CONSTANCY_TOL`].
    pub fn from_values(table: &Arc<CharacterTable>, values: Vec<C64>) -> Result<Self> {
        let coeffs = to_coefficients(table, &values)?;
        let sync_residual = cplx::max_abs_diff(&evaluate(table, &coeffs), &values);
        Ok(ClassFunction {
            table: table.clone(),
            coeffs,
            values,
            sync_residual,
        })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value(&self, x: usize) -> C64 {
        self.values[x]
    }

    /// `max_x |values[x] − (Φ·a)[x]|` at construction time.
    pub fn sync_residual(&self) -> f64 {
        self.sync_residual
    }

    pub fn is_unimodular(&self, tol: f64) -> Unimodularity {
        let deviation = unimodular_deviation(&self.values);
        Unimodularity {
            unimodular: deviation <= tol,
            deviation,
        }
    }

    pub fn to_file(&self) -> ClassFunctionFile {
        ClassFunctionFile {
            group: self.group().name().to_string(),
            basis: Basis::Coefficients,
            data: self.coeffs.clone(),
            coefficients: Some(self.coeffs.clone()),
            values: Some(self.values.clone()),
            sync_residual: Some(self.sync_residual),
        }
    }

    pub fn from_file(file: &ClassFunctionFile) -> Result<Self> {
        let table = CharacterTable::for_label(&file.group)?;
        match file.basis {
            Basis::Coefficients => ClassFunction::from_coefficients(&table, file.data.clone()),
            Basis::Pointwise => ClassFunction::from_values(&table, file.data.clone()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        ClassFunction::from_file(&serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Unimodularity {
    pub unimodular: bool,
    pub deviation: f64,
}

pub(crate) fn unimodular_deviation(values: &[C64]) -> f64 {
    values
        .iter()
        .map(|z| (z.norm() - 1.0).abs())
        .fold(0.0, f64::max)
}

pub(crate) fn evaluate(table: &CharacterTable, coeffs: &[C64]) -> Vec<C64> {
    table
        .phi()
        .iter()
        .map(|row| row.iter().zip(coeffs).map(|(chi, a)| chi * a).sum())
        .collect()
}

/// `a_i = ⟨f, χ_i⟩`. Rejects input that is not constant on a class.
pub fn to_coefficients(table: &CharacterTable, values: &[C64]) -> Result<Vec<C64>> {
    let group = table.group();
    let n = group.order();
    if values.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: values.len(),
        });
    }
    for (c, members) in group.classes().iter().enumerate() {
        let first = values[members[0]];
        let deviation = members
            .iter()
            .map(|&x| (values[x] - first).norm())
            .fold(0.0, f64::max);
        if deviation > CLASS_CONSTANCY_TOL {
            return Err(Error::NotClassFunction {
                class: c,
                deviation,
            });
        }
    }
    (0..table.len())
        .map(|i| table.inner_product(values, &table.character(i)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Coefficients,
    Pointwise,
}

/// File form of a class function. Readers use `basis` and `data`; writers
/// also emit both representations and the residual between them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassFunctionFile {
    pub group: String,
    pub basis: Basis,
    pub data: Vec<C64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<C64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<C64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sync_residual: Option<f64>,
}
