//! Class-sum (Burnside) method.
//!
//! With class sums `K_j` and structure constants `K_j K_k = Σ_l c_jkl K_l`,
//! every irreducible character χ gives a central character
//! `w_l = |C_l| χ(g_l) / χ(1)` that is a common right eigenvector of the
//! matrices `A_j[k][l] = c_jkl`. A random real combination of the `A_j`
//! separates those eigenvectors, after which degrees follow from
//! `Σ_l |w_l|² / |C_l| = n / χ(1)²`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cplx::C64;
use crate::error::{Error, Result};
use crate::group::Group;

const ATTEMPTS: u64 = 8;

/// Characters on class representatives, one row per irreducible, in the
/// order the eigenvalues came out. Row order is normalized by the caller.
pub fn class_sum_characters(group: &Group) -> Result<Vec<Vec<C64>>> {
    let r = group.num_classes();
    let n = group.order();
    let sizes = group.class_sizes();
    let constants = structure_constants(group);

    let mut failures = Vec::new();
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC1A55 + attempt);
        let weights: Vec<f64> = (0..r).map(|_| rng.gen_range(0.5..1.5)).collect();
        let combo = DMatrix::from_fn(r, r, |k, l| {
            (0..r).map(|j| weights[j] * constants[j][k][l] as f64).sum::<f64>()
        });
        let eigenvalues: Vec<C64> = combo.complex_eigenvalues().iter().copied().collect();

        let scale = 1.0 + eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut clashes = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                if (eigenvalues[a] - eigenvalues[b]).norm() < 1e-6 * scale {
                    clashes.push((a, b));
                }
            }
        }
        if !clashes.is_empty() {
            failures.push(format!("attempt {attempt}: coincident eigenvalue pairs {clashes:?}"));
            continue;
        }

        let combo_c = combo.map(|v| C64::new(v, 0.0));
        let mut rows = Vec::with_capacity(r);
        for &lambda in &eigenvalues {
            let shifted = &combo_c - DMatrix::<C64>::identity(r, r) * lambda;
            let w = null_vector(shifted);
            if w[0].norm() < 1e-9 {
                return Err(Error::NumericDegeneracy(format!(
                    "eigenvector for eigenvalue {lambda} vanishes on the identity class"
                )));
            }
            let w: Vec<C64> = w.iter().map(|z| z / w[0]).collect();
            let norm: f64 = w
                .iter()
                .zip(&sizes)
                .map(|(z, &h)| z.norm_sqr() / h as f64)
                .sum();
            let degree = (n as f64 / norm).sqrt();
            let rounded = degree.round();
            if (degree - rounded).abs() > 1e-6 || rounded < 1.0 {
                return Err(Error::NumericDegeneracy(format!(
                    "non-integral degree {degree} for eigenvalue {lambda}"
                )));
            }
            rows.push(
                w.iter()
                    .zip(&sizes)
                    .map(|(z, &h)| z * rounded / h as f64)
                    .collect(),
            );
        }
        return Ok(rows);
    }
    Err(Error::NumericDegeneracy(format!(
        "class sums {:?} of {}: {}",
        (0..r).collect::<Vec<_>>(),
        group.name(),
        failures.join("; ")
    )))
}

/// `c[j][k][l]` = number of pairs `(x, y) ∈ C_j × C_k` with `xy` equal to a
/// fixed element of `C_l`.
pub fn structure_constants(group: &Group) -> Vec<Vec<Vec<usize>>> {
    let classes = group.classes();
    let r = classes.len();
    let sizes = group.class_sizes();
    let mut c = vec![vec![vec![0usize; r]; r]; r];
    for j in 0..r {
        for k in 0..r {
            let mut counts = vec![0usize; r];
            for &x in &classes[j] {
                for &y in &classes[k] {
                    counts[group.class_of(group.op(x, y))] += 1;
                }
            }
            for l in 0..r {
                debug_assert_eq!(counts[l] % sizes[l], 0);
                c[j][k][l] = counts[l] / sizes[l];
            }
        }
    }
    c
}

/// Right singular vector for the smallest singular value.
fn null_vector(m: DMatrix<C64>) -> Vec<C64> {
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (i, &s)| if s < best.1 { (i, s) } else { best });
    v_t.row(idx).iter().map(|z| z.conj()).collect()
}
