//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use classbent::bent::{is_bent, spectrum, Verdict};
use classbent::construct::{make_bent_cyclic, transform, zadoff_chu, SequenceSpec, Transform};
use classbent::cplx::gcd;
use classbent::criteria::{cyclic_criterion, s3_certificate, solve_q8_system, Q8_SYSTEM};
use classbent::ledger::{verify_paper, LedgerConfig};
use classbent::search::{run_search, SearchConfig};
use classbent::{CharacterTable, ClassFunction, Group, C64};

/// Best objective of the seed-7, budget-10⁵ search on S3, frozen from the
/// first pinned run.
const S3_FLOOR: f64 = 0.318_874_355_483_484_5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn omega(k: usize, n: usize) -> C64 {
    C64::from_polar(1.0, TAU * (k % n) as f64 / n as f64)
}

fn table(label: &str) -> std::sync::Arc<CharacterTable> {
    CharacterTable::for_label(label).unwrap()
}

/// Derivative sums straight from the Cayley table.
fn oracle_bent(group: &Group, values: &[C64], tol: f64) -> bool {
    let n = group.order();
    if values.iter().any(|v| (v.norm() - 1.0).abs() > tol) {
        return false;
    }
    (0..n).filter(|&s| s != group.identity()).all(|s| {
        let d: C64 = (0..n)
            .map(|x| values[x].conj() * values[group.multiply(s, x).unwrap()])
            .sum();
        d.norm() <= n as f64 * tol
    })
}

fn max_dev(got: &[Vec<C64>], want: &[Vec<C64>]) -> f64 {
    assert_eq!(got.len(), want.len());
    got.iter()
        .zip(want)
        .flat_map(|(g, w)| g.iter().zip(w).map(|(a, b)| (a - b).norm()))
        .fold(0.0, f64::max)
}

fn real_rows(rows: &[&[f64]]) -> Vec<Vec<C64>> {
    rows.iter().map(|r| r.iter().map(|&v| c(v, 0.)).collect()).collect()
}

fn character_tables() -> Outcome {
    let z3 = vec![
        vec![c(1., 0.); 3],
        vec![c(1., 0.), omega(1, 3), omega(2, 3)],
        vec![c(1., 0.), omega(2, 3), omega(1, 3)],
    ];
    let i = c(0., 1.);
    let one = c(1., 0.);
    let z4 = vec![
        vec![one; 4],
        vec![one, i, -one, -i],
        vec![one, -one, one, -one],
        vec![one, -i, -one, i],
    ];
    let s3 = real_rows(&[&[1., 1., 1.], &[1., -1., 1.], &[2., 0., -1.]]);
    let q8 = real_rows(&[
        &[1., 1., 1., 1., 1.],
        &[1., 1., 1., -1., -1.],
        &[1., 1., -1., -1., 1.],
        &[1., 1., -1., 1., -1.],
        &[2., -2., 0., 0., 0.],
    ]);
    let mut dev = max_dev(table("Z3").class_values(), &z3)
        .max(max_dev(table("Z4").class_values(), &z4))
        .max(max_dev(table("S3").class_values(), &s3))
        .max(max_dev(table("Q8").class_values(), &q8));
    for n in 1..=64 {
        let general: Vec<Vec<C64>> = (0..n).map(|i| (0..n).map(|k| omega(i * k, n)).collect()).collect();
        dev = dev.max(max_dev(table(&format!("Z{n}")).class_values(), &general));
    }
    outcome(dev < 1e-10, format!("max entry deviation {dev:.2e} (< 1e-10)"))
}

fn orthogonality() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut phi_worst: f64 = 0.0;
    let labels = ["S3", "Q8", "V4", "D4"]
        .map(String::from)
        .into_iter()
        .chain((1..=64).map(|n| format!("Z{n}")));
    for label in labels {
        let t = table(&label);
        let r = t.verify_orthogonality(1e-10);
        worst = worst.max(r.row_deviation).max(r.column_deviation);
        if t.group().is_abelian() {
            // Φ·(1/n)·conj(Φ)ᵀ against the identity, computed here
            let n = t.order();
            let phi = t.phi();
            for x in 0..n {
                for y in 0..n {
                    let s: C64 = (0..n).map(|i| phi[x][i] * phi[y][i].conj()).sum::<C64>() / n as f64;
                    let want = if x == y { 1.0 } else { 0.0 };
                    phi_worst = phi_worst.max((s - want).norm());
                }
            }
        }
    }
    outcome(
        worst < 1e-10 && phi_worst < 1e-10,
        format!("orthogonality {worst:.2e}, Phi inverse {phi_worst:.2e} (< 1e-10)"),
    )
}

fn necessary_condition() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=64usize {
        let roots: Vec<i64> = (1..=n as i64).filter(|&u| gcd(u as u64, n as u64) == 1).collect();
        for u in roots {
            let f = make_bent_cyclic(&SequenceSpec::zadoff_chu(n, u)).unwrap().function;
            for a in f.coeffs() {
                worst = worst.max((a.norm_sqr() - 1.0 / n as f64).abs());
            }
        }
    }
    let z2 = ClassFunction::from_coefficients(&table("Z2"), vec![c(FRAC_1_SQRT_2, 0.); 2]).unwrap();
    let verdict = is_bent(&z2, 1e-8).verdict;
    outcome(
        worst < 1e-12 && verdict == Verdict::NotUnimodular,
        format!("max ||a_i|^2 - 1/n| {worst:.2e} (< 1e-12); Z2 counterexample {}", verdict.as_str()),
    )
}

fn cyclic_iff() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let (mut total, mut agree, mut bent) = (0usize, 0usize, 0usize);
    for n in 2..=12usize {
        let t = table(&format!("Z{n}"));
        let roots: Vec<i64> = (1..=n as i64).filter(|&u| gcd(u as u64, n as u64) == 1).collect();
        let scale = (n as f64).sqrt();
        let mut samples: Vec<Vec<C64>> = roots
            .iter()
            .map(|&u| zadoff_chu(n, u).unwrap().iter().map(|z| z / scale).collect())
            .collect();
        for k in 0..1200 {
            let a: Vec<C64> = match k % 3 {
                0 => (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
                1 => (0..n).map(|_| C64::from_polar(1.0 / scale, rng.gen_range(0.0..TAU))).collect(),
                _ => {
                    // rotated constructions, half of them nudged off the bent set
                    let u = roots[rng.gen_range(0..roots.len())];
                    let shift = rng.gen_range(0..n);
                    let phase = C64::from_polar(1.0, rng.gen_range(0.0..TAU));
                    let g = zadoff_chu(n, u).unwrap();
                    let nudge = if rng.gen_bool(0.5) { 1e-3 } else { 0.0 };
                    (0..n)
                        .map(|i| g[(i + shift) % n] * phase * C64::from_polar(1.0, nudge * i as f64) / scale)
                        .collect()
                }
            };
            samples.push(a);
        }
        for a in samples {
            let f = ClassFunction::from_coefficients(&t, a.clone()).unwrap();
            let oracle = oracle_bent(t.group(), f.values(), 1e-8);
            let criterion = cyclic_criterion(&a, 1e-8).unwrap().satisfied;
            total += 1;
            bent += usize::from(oracle);
            agree += usize::from(oracle == criterion);
        }
    }
    outcome(
        agree == total && bent > 0,
        format!("{agree}/{total} agree with the oracle ({bent} bent)"),
    )
}

fn construction_existence() -> Outcome {
    let (mut count, mut residual, mut flat) = (0usize, 0.0f64, 0.0f64);
    let mut all_bent = true;
    for n in 1..=64usize {
        let nf = n as f64;
        for u in (1..=n as i64).filter(|&u| gcd(u as u64, n as u64) == 1) {
            let built = make_bent_cyclic(&SequenceSpec::zadoff_chu(n, u)).unwrap();
            all_bent &= built.report.verdict == Verdict::Bent && oracle_bent(built.function.group(), built.function.values(), 1e-8);
            residual = residual.max(built.report.max_residual / nf);
            for s in spectrum(&built.function).unwrap() {
                flat = flat.max((s - nf).abs() / nf);
            }
            count += 1;
        }
    }
    outcome(
        all_bent && residual < 1e-8 && flat < 1e-8,
        format!("{count} Zadoff-Chu functions BENT; max residual/n {residual:.2e}, max spectral deviation/n {flat:.2e}"),
    )
}

fn s3_impossibility() -> Outcome {
    let cert = s3_certificate(1e-12).unwrap();
    let want = [1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0];
    let mag_dev = cert.magnitudes.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let cross_dev = (cert.cross_term + 2.0 / 3.0).abs();
    let cs_ok = (cert.cs_lhs - 2.0 / 3.0).abs() < 1e-12 && (cert.cs_rhs - 1.0 / 3.0).abs() < 1e-12 && cert.contradiction;
    let part_a = mag_dev < 1e-12 && cross_dev < 1e-12 && cert.system_residual < 1e-12 && cs_ok;

    let result = run_search(&SearchConfig::new("S3", 100_000, 7)).unwrap();
    let pinned = (result.best_objective - S3_FLOOR).abs() <= 1e-9 * S3_FLOOR;
    let part_b = !result.certified_bent && result.best_objective > 1e-3 && result.evaluations == 100_000;
    outcome(
        part_a && part_b && pinned,
        format!(
            "certificate magnitude dev {mag_dev:.1e}, cross-term dev {cross_dev:.1e}, 2/3 > 1/3 {}; search best objective {:.6} (pinned {S3_FLOOR:.6}), certified {}",
            cert.contradiction, result.best_objective, result.certified_bent
        ),
    )
}

fn q8_magnitudes() -> Outcome {
    let sol = solve_q8_system().unwrap();
    let want = [2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 1.0 / 9.0];
    let dev = sol.magnitudes.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    // every printed row evaluated directly at the expected solution
    let eq_dev = Q8_SYSTEM
        .iter()
        .map(|(_, row, rhs)| (row.iter().zip(want).map(|(r, w)| r * w).sum::<f64>() - rhs).abs())
        .fold(0.0, f64::max);
    outcome(
        dev < 1e-12 && sol.residual < 1e-12 && eq_dev < 1e-12,
        format!("solution deviation {dev:.1e}, system residual {:.1e}, printed rows at (2/9,..,1/9) {eq_dev:.1e}", sol.residual),
    )
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1A7);
    let v4 = table("V4");
    let mut preserved = 0;
    for trial in 0..100 {
        let mut f = if trial % 5 == 0 {
            // (1, 1, 1, −1) is the Boolean bent function x·y on Z2×Z2
            ClassFunction::from_values(&v4, vec![c(1., 0.), c(1., 0.), c(1., 0.), c(-1., 0.)]).unwrap()
        } else {
            let n = rng.gen_range(2..=20usize);
            let u = loop {
                let u = rng.gen_range(1..=n as i64);
                if gcd(u as u64, n as u64) == 1 {
                    break u;
                }
            };
            make_bent_cyclic(&SequenceSpec::zadoff_chu(n, u)).unwrap().function
        };
        for _ in 0..rng.gen_range(1..=5) {
            let t = f.table().clone();
            let op = match rng.gen_range(0..3) {
                0 => Transform::GlobalPhase(C64::from_polar(1.0, rng.gen_range(0.0..TAU))),
                1 => Transform::Translate(rng.gen_range(0..t.order())),
                _ => Transform::CharacterTwist(rng.gen_range(1..=t.len())),
            };
            f = transform(&f, op).unwrap();
        }
        if is_bent(&f, 1e-8).is_bent() && oracle_bent(f.group(), f.values(), 1e-8) {
            preserved += 1;
        }
    }
    outcome(preserved == 100, format!("{preserved}/100 transformed functions stay BENT"))
}

fn determinism() -> Outcome {
    let config = LedgerConfig::default();
    let first = verify_paper(&config).to_json();
    let second = verify_paper(&config).to_json();
    outcome(
        first == second,
        format!("{} bytes, identical {}", first.len(), first == second),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("character tables", Some(Duration::from_secs(1)), character_tables),
        ("orthogonality", None, orthogonality),
        ("necessary condition", None, necessary_condition),
        ("cyclic iff", Some(Duration::from_secs(30)), cyclic_iff),
        ("construction existence", Some(Duration::from_secs(10)), construction_existence),
        ("S3 impossibility", None, s3_impossibility),
        ("Q8 necessary magnitudes", None, q8_magnitudes),
        ("invariance", None, invariance),
        ("determinism", None, determinism),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = out.pass && in_time;
        failed += usize::from(!pass);
        let budget = limit.map(|l| format!(" of {:.0}s", l.as_secs_f64())).unwrap_or_default();
        println!(
            "{} {}. {name}: {} [{:.3}s{budget}]",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
