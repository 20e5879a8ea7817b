//! Oracles shared by the integration test targets. None of them call into
//! the routines they check.

#![allow(dead_code)]

use std::collections::HashMap;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use statevol::algebra::{Hermitian, Scalar};

/// Cofactor (Laplace) expansion along rows, memoized on the set of columns used.
pub fn cofactor_det(n: usize, a: &[Complex64]) -> Complex64 {
    fn go(n: usize, a: &[Complex64], row: usize, mask: u32, memo: &mut HashMap<u32, Complex64>) -> Complex64 {
        if row == n {
            return Complex64::new(1.0, 0.0);
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let mut sign = 1.0;
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let term = a[row * n + c] * go(n, a, row + 1, mask | (1 << c), memo);
            acc += term * sign;
            sign = -sign;
        }
        memo.insert(mask, acc);
        acc
    }
    go(n, a, 0, 0, &mut HashMap::new())
}

/// Determinant of a self-adjoint matrix over any field: the cofactor
/// determinant for real and complex entries, and the square root of the
/// cofactor determinant of the `2n × 2n` complex form for quaternions.
pub fn det_oracle<S: Scalar>(m: &Hermitian<S>) -> f64 {
    let c = S::embed(m);
    let d = cofactor_det(c.n(), c.data()).re;
    if c.n() == m.n() {
        d
    } else {
        d.max(0.0).sqrt()
    }
}

/// `B B* + ε I`, normalized to unit trace.
pub fn random_positive_definite<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Hermitian<S> {
    let d = S::FIELD.dim();
    let b: Vec<S> = (0..n * n)
        .map(|_| {
            let c: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
            S::from_components(&c)
        })
        .collect();
    let mut full = vec![S::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = S::zero();
            for k in 0..n {
                acc = acc + b[i * n + k] * b[j * n + k].conj();
            }
            full[i * n + j] = acc;
        }
    }
    let tr: f64 = (0..n).map(|i| full[i * n + i].re()).sum::<f64>() + 0.05 * n as f64;
    Hermitian::from_fn(n, |i, j| {
        let v = if i == j { full[i * n + i] + S::from_real(0.05) } else { full[i * n + j] };
        v.scale(1.0 / tr)
    })
}

/// Composite Simpson rule on `[a, b]` with `2m` panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, m: usize) -> f64 {
    let h = (b - a) / (2 * m) as f64;
    let mut s = f(a) + f(b);
    for i in 1..2 * m {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// Kolmogorov–Smirnov statistic of `xs` against `cdf`.
pub fn ks_statistic(mut xs: Vec<f64>, cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let c = cdf(x);
            (c - i as f64 / n).max((i + 1) as f64 / n - c)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic 1% critical value of the KS statistic for `n` samples.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.6276 / (n as f64).sqrt()
}

/// Pearson χ² p-value of `xs` over `bins` equal-probability bins of `cdf`.
pub fn chi_squared_p_value(xs: &[f64], cdf: impl Fn(f64) -> f64, bins: usize) -> f64 {
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    let mut counts = vec![0u64; bins];
    for &x in xs {
        let k = ((cdf(x) * bins as f64) as usize).min(bins - 1);
        counts[k] += 1;
    }
    let expected = xs.len() as f64 / bins as f64;
    let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    1.0 - ChiSquared::new((bins - 1) as f64).unwrap().cdf(stat)
}

/// CDF of the semicircle density `(2/π) √(1 - s²)` on `[-1, 1]`.
pub fn semicircle_cdf(s: f64) -> f64 {
    let s = s.clamp(-1.0, 1.0);
    0.5 + (s * (1.0 - s * s).sqrt() + s.asin()) / std::f64::consts::PI
}
