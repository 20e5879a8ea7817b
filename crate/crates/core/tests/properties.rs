mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statevol::algebra::{eigenvalues, is_positive_definite, leading_minor_determinants, sqrt_psd, Hermitian, Quaternion, Scalar};
use statevol::metrics::{m_weight, monotone_catalog_swept, sqrt_det_g_monotone, sqrt_det_g_pullback, AdmissibleFunction, MonotoneFunction};
use statevol::quadrature::integrate_split;
use statevol::special::{ellipsoid_integral, g, gamma, simplex_moment, sphere_surface};
use statevol::volumes::{expected_det_alpha, lebesgue_integral_det_alpha, volume_lebesgue};
use statevol::{ScalarField, SelfAdjointState};

use common::{det_oracle, random_positive_definite};

fn minors_match_oracle<S: Scalar>(seed: u64, n: usize) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m: Hermitian<S> = random_positive_definite(n, &mut rng);
    let minors = leading_minor_determinants(&m).unwrap();
    for k in 1..=n {
        let want = det_oracle(&m.leading(k));
        prop_assert!((minors[k - 1] - want).abs() <= 1e-10 * want.abs().max(1e-300), "{:?} k={k}: {} vs {want}", S::FIELD, minors[k - 1]);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leading_minors_match_cofactor_expansion(seed in any::<u64>(), n in 1usize..=5) {
        minors_match_oracle::<f64>(seed, n)?;
        minors_match_oracle::<Complex64>(seed, n)?;
        minors_match_oracle::<Quaternion>(seed, n)?;
    }

    #[test]
    fn positivity_agrees_with_the_spectrum(seed in any::<u64>(), n in 2usize..=4, shift in -0.3f64..0.3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base: Hermitian<Complex64> = random_positive_definite(n, &mut rng);
        let m = Hermitian::from_fn(n, |i, j| if i == j { base.get(i, j) - Complex64::new(shift, 0.0) } else { base.get(i, j) });
        let ev = eigenvalues(&m).unwrap();
        let min = ev[0];
        prop_assume!(min.abs() > 1e-9);
        prop_assert_eq!(is_positive_definite(&m), min > 0.0);
    }

    #[test]
    fn square_roots_square_back(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: Hermitian<Quaternion> = random_positive_definite(n, &mut rng);
        let r = sqrt_psd(&m).unwrap();
        prop_assert!(m.max_abs_diff(&r.mul_full(&r)) < 1e-12);
    }

    #[test]
    fn weights_are_symmetric(a in 1e-6f64..1.0, b in 1e-6f64..1.0, p in 0.01f64..0.49) {
        for id in ["sld", "rld", "km", "geo", "wy", "lm2", "lm3"] {
            let f: MonotoneFunction = id.parse().unwrap();
            let (x, y) = (m_weight(&f, a, b), m_weight(&f, b, a));
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0), "{id}");
        }
        for id in [format!("alpha:{p}"), format!("beta:{p}"), format!("gam:{p}")] {
            let f: MonotoneFunction = id.parse().unwrap();
            let (x, y) = (m_weight(&f, a, b), m_weight(&f, b, a));
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0), "{id}");
        }
    }

    #[test]
    fn densities_are_spectral(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d: Hermitian<Complex64> = random_positive_definite(n, &mut rng);
        let u = random_unitary(n, &mut rng);
        let state = SelfAdjointState::new(d.clone()).unwrap();
        let rotated = SelfAdjointState::new(d.conjugate_by(&u)).unwrap();
        let f: MonotoneFunction = "km".parse().unwrap();
        let (x, y) = (sqrt_det_g_monotone(&f, &state).unwrap(), sqrt_det_g_monotone(&f, &rotated).unwrap());
        prop_assert!((x - y).abs() <= 1e-10 * x);
        let h: AdmissibleFunction = "log".parse().unwrap();
        let (x, y) = (sqrt_det_g_pullback(&h, &state).unwrap(), sqrt_det_g_pullback(&h, &rotated).unwrap());
        prop_assert!((x - y).abs() <= 1e-10 * x);
    }

    #[test]
    fn gamma_recurrence(z in 0.05f64..40.0) {
        let (a, b) = (gamma(z + 1.0).unwrap(), z * gamma(z).unwrap());
        prop_assert!((a - b).abs() <= 1e-12 * a);
    }

    #[test]
    fn moments_are_volume_ratios(n in 2usize..=5, alpha in 0.0f64..4.0) {
        for field in ScalarField::ALL {
            let v = volume_lebesgue(field, n).unwrap().value();
            let lhs = expected_det_alpha(field, n, alpha).unwrap().value;
            let rhs = lebesgue_integral_det_alpha(field, n, alpha).unwrap() / v;
            prop_assert!((lhs - rhs).abs() <= 1e-11 * rhs);
        }
    }
}

/// Gram–Schmidt on a complex Gaussian matrix.
fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    use rand_distr::{Distribution, StandardNormal};
    let mut cols: Vec<Vec<Complex64>> =
        (0..n).map(|_| (0..n).map(|_| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))).collect()).collect();
    for k in 0..n {
        for j in 0..k {
            let proj: Complex64 = (0..n).map(|i| cols[j][i].conj() * cols[k][i]).sum();
            let cj = cols[j].clone();
            for (x, v) in cols[k].iter_mut().zip(cj) {
                *x -= proj * v;
            }
        }
        let norm = cols[k].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        cols[k].iter_mut().for_each(|c| *c /= norm);
    }
    (0..n * n).map(|idx| cols[idx % n][idx / n]).collect()
}

#[test]
fn special_integrals_match_quadrature() {
    let q = |f: &dyn Fn(f64, f64) -> f64| integrate_split(f, 1e-13, 0.0).unwrap().value;
    for a in 0..6 {
        for tb in 0..7 {
            let b = tb as f64 / 2.0;
            let want = q(&|x, xc| x.powi(a) * (xc * (1.0 + x)).powf(b));
            assert!((g(a as f64, b).unwrap() - want).abs() <= 1e-8 * want, "G({a},{b})");
        }
    }
    for z in [0.5, 1.0, 1.5, 2.5, 3.7, 6.0] {
        // Γ(z) = ∫₀^∞ t^{z-1} e^{-t} dt with t = x/(1-x)
        let want = q(&|x, xc| {
            let t = x / xc;
            if t > 700.0 {
                return 0.0;
            }
            t.powf(z - 1.0) * (-t).exp() / (xc * xc)
        });
        assert!((gamma(z).unwrap() - want).abs() <= 1e-8 * want, "Γ({z})");
    }
    for k in [0.0, 0.5, 1.0, 2.5] {
        let want2 = q(&|x, xc| (x * xc).powf(k));
        assert!((simplex_moment(2, k).unwrap() - want2).abs() <= 1e-8 * want2);
        // (x, y) ∈ Δ₂ with y = (1 - x) s
        let want3 = q(&|x, xc| q(&|s, sc| (x * xc * s * xc * sc).powf(k) * xc));
        assert!((simplex_moment(3, k).unwrap() - want3).abs() <= 1e-8 * want3, "k={k}");
    }
    // F_{m-1} from the polar form of ∫ e^{-|x|²} = π^{m/2}
    for m in 1..=6u32 {
        let radial = q(&|x, xc| {
            let r = x / xc;
            if r > 30.0 {
                return 0.0;
            }
            r.powi(m as i32 - 1) * (-r * r).exp() / (xc * xc)
        });
        let want = PI.powf(m as f64 / 2.0) / radial;
        assert!((sphere_surface(m).unwrap() - want).abs() <= 1e-8 * want, "F_{}", m - 1);
    }
}

#[test]
fn ellipsoid_integrals_match_quadrature() {
    let q = |f: &dyn Fn(f64, f64) -> f64| integrate_split(f, 1e-13, 0.0).unwrap().value;
    for &(t, rho, k) in &[(1.0f64, 1.0f64, 0.0f64), (2.5, 0.7, 1.5), (0.3, 2.0, 3.0)] {
        // m = 1: ∫_{t x² < ρ} (ρ - t x²)^k dx, x = √(ρ/t)(2s - 1)
        let w = (rho / t).sqrt();
        let want = q(&|s, sc| 2.0 * w * (rho * 4.0 * s * sc).powf(k));
        let got = ellipsoid_integral(ScalarField::Real, 1, t, rho, k).unwrap();
        assert!((got - want).abs() <= 1e-8 * want);
        // m = 2 in polar coordinates; T = diag(t, 2t) or the complex scalar t
        let radial = q(&|u, uc| u * (rho * uc * (1.0 + u)).powf(k));
        let want_real = 2.0 * PI * radial * rho / (t * 2.0 * t).sqrt();
        let got = ellipsoid_integral(ScalarField::Real, 2, 2.0 * t * t, rho, k).unwrap();
        assert!((got - want_real).abs() <= 1e-8 * want_real);
        let want_complex = 2.0 * PI * radial * rho / t;
        let got = ellipsoid_integral(ScalarField::Complex, 2, t, rho, k).unwrap();
        assert!((got - want_complex).abs() <= 1e-8 * want_complex);
    }
}

#[test]
fn catalog_symmetry_over_parameter_sweeps() {
    let grid: Vec<f64> = (1..50).map(|i| i as f64 / 100.0).collect();
    let alphas: Vec<f64> = grid.iter().map(|&p| p.min(0.5)).chain([0.5]).collect();
    let betas: Vec<f64> = grid.iter().copied().filter(|&p| p < 0.5).collect();
    let gammas: Vec<f64> = std::iter::once(0.0).chain(grid.iter().copied()).chain([0.5]).collect();
    for f in monotone_catalog_swept(&alphas, &betas, &gammas).unwrap() {
        assert!(f.symmetry_residual() <= 1e-12, "{f}: {}", f.symmetry_residual());
    }
}

#[test]
fn assembled_volumes_agree_with_closed_forms() {
    use statevol::volumes::lebesgue_integral_det_alpha_exact;
    for field in ScalarField::ALL {
        for n in 1..=14 {
            let closed = volume_lebesgue(field, n).unwrap();
            let assembled = lebesgue_integral_det_alpha_exact(field, n, 0).unwrap();
            assert_eq!(closed.as_monomial(), assembled, "{field} n={n}");
        }
    }
}
