//! Complex helpers shared across modules.

use num_complex::Complex64;
use std::f64::consts::TAU;

pub type C64 = Complex64;

/// `exp(2πi·k/m)`, reduced so that `k` and `m − k` give exact conjugates and
/// quarter turns are exact.
pub fn unit_root(k: i64, m: u64) -> C64 {
    assert!(m > 0, "root order must be positive");
    let m_i = m as i64;
    let k = k.rem_euclid(m_i);
    if k == 0 {
        return C64::new(1.0, 0.0);
    }
    if 2 * k > m_i {
        return unit_root(m_i - k, m).conj();
    }
    if 4 * k == m_i {
        return C64::new(0.0, 1.0);
    }
    if 2 * k == m_i {
        return C64::new(-1.0, 0.0);
    }
    let theta = TAU * (k as f64) / (m as f64);
    C64::new(theta.cos(), theta.sin())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Largest entrywise modulus of `a − b`.
pub fn max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Human-readable rendering used in table pretty-printing: integers stay
/// integers, `±i` stays symbolic, other roots of unity of order dividing `m`
/// become `e^{2πi·k/m}`.
pub fn render(z: C64, m: u64) -> String {
    const EPS: f64 = 1e-9;
    if z.im.abs() < EPS && (z.re - z.re.round()).abs() < EPS {
        return format!("{}", z.re.round() as i64);
    }
    if z.re.abs() < EPS && (z.im.abs() - 1.0).abs() < EPS {
        return if z.im > 0.0 { "i".into() } else { "-i".into() };
    }
    if (z.norm() - 1.0).abs() < EPS && m > 0 {
        let turns = z.arg().rem_euclid(TAU) / TAU * m as f64;
        let k = turns.round();
        if (turns - k).abs() < 1e-6 {
            let k = k as u64 % m;
            let g = gcd(k, m);
            return format!("e^{{2πi·{}/{}}}", k / g, m / g);
        }
    }
    format!("{:.6}{:+.6}i", z.re, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_pairs_are_exact() {
        for m in 1..40u64 {
            for k in 0..m as i64 {
                assert_eq!(unit_root(k, m), unit_root(-k, m).conj());
            }
        }
    }

    #[test]
    fn quarter_turns() {
        assert_eq!(unit_root(1, 4), C64::new(0.0, 1.0));
        assert_eq!(unit_root(3, 4), C64::new(0.0, -1.0));
        assert_eq!(unit_root(5, 10), C64::new(-1.0, 0.0));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(C64::new(-1.0, 0.0), 3), "-1");
        assert_eq!(render(unit_root(1, 3), 3), "e^{2πi·1/3}");
        assert_eq!(render(unit_root(2, 6), 6), "e^{2πi·1/3}");
        assert_eq!(render(unit_root(1, 4), 4), "i");
    }
}
