use core::f64::consts::PI;

use proptest::prelude::*;
use szeta_core::asymptotics::{a_m, b_n, c_nn, CoefficientSet, DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX};
use szeta_core::sae::{beta_from_gamma, g_from_kappa, params_from_g};
use szeta_core::specfun::{digamma, gamma_ratio, hermite, hurwitz_zeta, ln_gamma, log_gamma, recip_gamma};
use szeta_core::spectrum::{eigenfunction, level, negative_state_threshold, secular_f, secular_f_prime, secular_scaled};
use szeta_core::zeta::{pole_catalog, DEFAULT_MERGE_TOL};
use szeta_core::{Complex64, CouplingParams, ExtensionParam, Provenance, SecularContext};

fn finite(kappa: f64, beta: f64) -> SecularContext {
    SecularContext::new(CouplingParams::from_kappa(kappa).unwrap(), ExtensionParam::Finite(beta))
}

fn off_integers(x: f64) -> bool {
    (x - x.round()).abs() > 1e-3
}

proptest! {
    #[test]
    fn reflection(re in -20.0f64..20.0, im in -20.0f64..20.0) {
        let z = Complex64::new(re, im);
        prop_assume!(im.abs() > 1e-3 || off_integers(re));
        prop_assume!(im.abs() < 15.0);
        let lhs = (log_gamma(z).unwrap() + log_gamma(1.0 - z).unwrap()).exp();
        let rhs = PI / (z * PI).sin();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm(), "{lhs} vs {rhs}");
    }

    #[test]
    fn digamma_recurrence(x in 0.1f64..100.0) {
        let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((d - 1.0 / x).abs() < 1e-12 * (1.0 / x).max(1.0));
    }

    #[test]
    fn reciprocal_gamma(x in 0.1f64..50.0) {
        let (lg, _) = ln_gamma(x).unwrap();
        prop_assert!((recip_gamma(x) * lg.exp() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hurwitz_shift(re in -4.0f64..4.0, im in -30.0f64..30.0, q in 0.1f64..5.0) {
        let s = Complex64::new(re, im);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let a = hurwitz_zeta(s, q).unwrap();
        let d = a - hurwitz_zeta(s, q + 1.0).unwrap();
        let expect = Complex64::new(q, 0.0).powc(-s);
        // the difference cancels; measure against the operands
        let scale = a.norm().max(expect.norm()).max(1.0);
        prop_assert!((d - expect).norm() < 1e-11 * scale, "{d} vs {expect}");
    }

    #[test]
    fn gamma_ratio_alternates(kappa in 0.751f64..0.999, n in 1usize..200, t in 0.05f64..0.95) {
        // F = Γ(κ−λ/4)/Γ(1−κ−λ/4) is continuous between the numerator poles
        // 4(n−1+κ), 4(n+κ) and changes sign once, at 4(n+1−κ)
        let sign = |lo: f64, hi: f64| gamma_ratio(kappa, lo + t * (hi - lo)).unwrap().value().signum();
        let nf = n as f64;
        let below = sign(4.0 * (nf - 1.0 + kappa), 4.0 * (nf + 1.0 - kappa));
        let above = sign(4.0 * (nf + 1.0 - kappa), 4.0 * (nf + kappa));
        let next = sign(4.0 * (nf + kappa), 4.0 * (nf + 2.0 - kappa));
        prop_assert_eq!(below, -above);
        prop_assert_eq!(above, -next);
    }

    #[test]
    fn coupling_round_trip(g in 0.0f64..10.0, dg in 1e-6f64..1.0) {
        let p = params_from_g(g).unwrap();
        prop_assert!((g_from_kappa(p.kappa).unwrap() - g).abs() < 1e-13 * g.max(1.0));
        prop_assert!(params_from_g(g + dg).unwrap().kappa > p.kappa);
    }

    #[test]
    fn levels_lie_in_their_brackets(kappa in 0.76f64..0.99, beta in -50.0f64..50.0, n in 1usize..10_000) {
        prop_assume!(beta != 0.0);
        let c = finite(kappa, beta);
        let l = level(n, &c).unwrap();
        let nf = n as f64;
        prop_assert_eq!(l.provenance, Provenance::RootFound);
        prop_assert!(l.lambda > 4.0 * (nf - 1.0 + kappa) && l.lambda < 4.0 * (nf + kappa));
        // f itself overflows past n ≈ 170; the scaled form is a positive multiple
        let (f, fp) = secular_scaled(l.lambda, &c).unwrap();
        prop_assert!(f.abs() <= 1e-11 * (fp.abs() * l.lambda).max(1.0), "f = {f}, f' = {fp}");
        if n < 150 {
            let f = secular_f(l.lambda, &c).unwrap();
            let fp = secular_f_prime(l.lambda, &c).unwrap();
            prop_assert!(f.abs() <= 1e-11 * (fp.abs() * l.lambda).max(1.0), "f = {f}, f' = {fp}");
        }
    }

    #[test]
    fn ground_state_sign(kappa in 0.75f64..0.99, beta in -20.0f64..20.0) {
        let t = negative_state_threshold(kappa);
        prop_assume!((beta - t).abs() > 1e-6);
        let l0 = level(0, &finite(kappa, beta)).unwrap().lambda;
        prop_assert_eq!(l0.signum(), (t - beta).signum());
    }

    #[test]
    fn hermite_eigenfunctions(n in 0usize..=5, x in 0.1f64..3.0) {
        let p = params_from_g(0.0).unwrap();
        let gauss = (-0.5 * x * x).exp();
        // U(−n; b; z) is monic in z
        // Dirichlet: λ = 4n+3, U(−n; 3/2; x²) = H_{2n+1}(x)/(2^{2n+1} x)
        let odd = eigenfunction(4.0 * n as f64 + 3.0, x, &p).unwrap();
        let expect = hermite(2 * n + 1, x) * gauss / 2f64.powi(2 * n as i32 + 1);
        prop_assert!((odd - expect).abs() <= 1e-9 * expect.abs().max(1e-300) || (odd - expect).abs() < 1e-14);
        // Neumann: λ = 4n+1, x·U(1/2−n; 3/2; x²) = U(−n; 1/2; x²) = H_{2n}(x)/2^{2n}
        let even = eigenfunction(4.0 * n as f64 + 1.0, x, &p).unwrap();
        let expect = hermite(2 * n, x) * gauss / 2f64.powi(2 * n as i32);
        prop_assert!((even - expect).abs() <= 1e-9 * expect.abs().max(1e-300) || (even - expect).abs() < 1e-14);
    }

    #[test]
    fn generating_identity(kappa in 0.5f64..1.0, big_n in 1usize..8) {
        // exp(N Σ_{m<=6} a_m w^m) expanded directly through the power series
        // of exp, term by term up to w^6
        let a: Vec<f64> = (1..=6).map(|m| a_m(m, kappa)).collect();
        let mut series = [0.0; 7];
        series[0] = 1.0;
        let mut power = vec![0.0; 7];
        power[0] = 1.0;
        let mut fact = 1.0;
        for j in 1..=6 {
            let mut next = vec![0.0; 7];
            for (i, &p) in power.iter().enumerate() {
                for (m, &am) in a.iter().enumerate() {
                    if i + m < 6 {
                        next[i + m + 1] += p * big_n as f64 * am;
                    }
                }
            }
            power = next;
            fact *= j as f64;
            for i in 0..=6 {
                series[i] += power[i] / fact;
            }
        }
        for n in 0..=6 {
            let b = b_n(n, kappa, big_n);
            prop_assert!((b - series[n]).abs() <= 1e-12 * b.abs().max(1.0), "n = {n}: {b} vs {}", series[n]);
        }
    }

    #[test]
    fn coefficient_homogeneity(kappa in 0.75f64..0.999, beta in -5.0f64..5.0, big_n in 1usize..7, n in 0usize..9) {
        let a = c_nn(big_n, n, kappa, beta);
        let b = c_nn(big_n, n, kappa, 2.0 * beta);
        prop_assert_eq!(b, a * 2f64.powi(big_n as i32));
    }

    #[test]
    fn positions_in_window(kappa in 0.75f64..0.999, beta in 0.1f64..3.0) {
        let cat = pole_catalog(&finite(kappa, beta), DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
        for e in cat.entries.iter().filter(|e| !e.universal) {
            for &(big_n, n) in &e.contributors {
                let (nf, sn) = (big_n as f64, n as f64);
                prop_assert!(e.position > -nf - 2.0 * sn - 1e-12 && e.position <= -nf / 2.0 - 2.0 * sn + 1e-12);
            }
        }
        for w in cat.entries.windows(2) {
            prop_assert!(w[0].position > w[1].position);
        }
    }

    #[test]
    fn residues_scale_with_beta(kappa in 0.75f64..0.999, beta in 0.1f64..2.0) {
        let one = pole_catalog(&finite(kappa, beta), 3, 0, DEFAULT_MERGE_TOL);
        let two = pole_catalog(&finite(kappa, 2.0 * beta), 3, 0, DEFAULT_MERGE_TOL);
        for (a, b) in one.entries.iter().zip(&two.entries).filter(|(a, _)| !a.universal) {
            let big_n = a.contributors[0].0;
            prop_assert_eq!(b.residue, a.residue * 2f64.powi(big_n as i32));
        }
    }

    #[test]
    fn special_cases_collapse(kappa in 0.75f64..1.5) {
        let p = CouplingParams::from_kappa(kappa).unwrap();
        for ext in [ExtensionParam::Finite(0.0), ExtensionParam::MinusInfinity] {
            let cat = pole_catalog(&SecularContext::new(p, ext), DEFAULT_N_MAX, DEFAULT_SMALL_N_MAX, DEFAULT_MERGE_TOL);
            prop_assert_eq!(cat.entries.len(), 1);
            prop_assert_eq!((cat.entries[0].position, cat.entries[0].residue), (1.0, 0.25));
        }
    }
}

#[test]
fn beta_sweep_is_injective() {
    let p = params_from_g(0.3).unwrap();
    let (_, g2) = szeta_core::sae::boundary_phases(&p).unwrap();
    // put one grid point on the zero of cos(γ − γ₂)
    let pole = (g2 + PI / 2.0).rem_euclid(PI);
    let n = 10_000;
    let h = PI / n as f64;
    let offset = pole - h * (pole / h).floor();
    let mut finite_values = Vec::new();
    let mut infinities = 0;
    for i in 0..n {
        let gamma = offset + i as f64 * h;
        match beta_from_gamma(gamma, &p).unwrap() {
            ExtensionParam::MinusInfinity => infinities += 1,
            ExtensionParam::Finite(b) => finite_values.push(b),
        }
    }
    assert_eq!(infinities, 1);
    finite_values.sort_by(f64::total_cmp);
    for w in finite_values.windows(2) {
        assert!(w[0] < w[1]);
    }
}

#[test]
fn half_kappa_degeneracy() {
    for m in 1..=6 {
        assert!(a_m(m, 0.5).abs() < 1e-14);
    }
    let coeffs = CoefficientSet::new(0.5, 4, 4);
    for big_n in 1..=4 {
        for n in 0..=4 {
            let b = coeffs.b(n, big_n);
            assert!((b - if n == 0 { 1.0 } else { 0.0 }).abs() < 1e-14);
            // 4^{Nδ} = 1, so C = −β^N (2n/N) b_n
            let c = coeffs.c(big_n, n, 1.5);
            let expect = -(1.5f64).powi(big_n as i32) * (2.0 * n as f64 / big_n as f64) * b;
            assert!((c - expect).abs() < 1e-14);
        }
    }
}
