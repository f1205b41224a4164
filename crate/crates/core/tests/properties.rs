//! Property-level invariants: dual-route series checks, gamma identities,
//! FTC derivative reproduction, quadrature self-consistency.

use hyperint_core::asymptotics::Thresholds;
use hyperint_core::families::{
    antiderivative, integrand, EvalOptions, Family, IntegralSpec,
};
use hyperint_core::oracles::{adaptive_quadrature, central_derivative, oscillatory_tail_quadrature};
use hyperint_core::series::pfq_real;
use hyperint_core::{gamma, pochhammer, Complex};

use proptest::prelude::*;

const SQRT_2PI: f64 = 2.5066282746310002;

/// Direct summation of pFq by gamma ratios (the definitional route),
/// independent of the production recurrence.
fn pfq_direct(upper: &[f64], lower: &[f64], z: f64, terms: u32) -> f64 {
    let mut sum = 0.0;
    let mut factorial = 1.0;
    for n in 0..terms {
        if n > 0 {
            factorial *= n as f64;
        }
        let mut term = z.powi(n as i32) / factorial;
        for &a in upper {
            term *= gamma(a + n as f64).unwrap() / gamma(a).unwrap();
        }
        for &b in lower {
            term /= gamma(b + n as f64).unwrap() / gamma(b).unwrap();
        }
        sum += term;
    }
    sum
}

/// The paper-family parameter shapes exercised by the dual-route check.
fn family_params(c: f64, d: f64, e: f64) -> [(Vec<f64>, Vec<f64>); 5] {
    [
        (vec![c], vec![c + 1.0, 1.5]),                 // sine kernel
        (vec![1.0, d], vec![d + 1.0, 1.5, 2.0]),       // cosine kernel
        (vec![1.0, 1.0], vec![2.0, 2.0, 2.5]),         // sine log kernel
        (vec![1.0, 1.0], vec![2.0, 2.0]),              // exp kernel
        (vec![1.0, e], vec![2.0, e + 1.0]),            // exp general kernel
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_direct_gamma_summation(
        z in -10.0f64..10.0,
        c in 0.05f64..1.45,
        d in 0.55f64..1.45,
        e in 0.1f64..1.9,
    ) {
        for (upper, lower) in family_params(c, d, e) {
            let r = pfq_real(&upper, &lower, z, 1e-14, 400).unwrap();
            let direct = pfq_direct(&upper, &lower, z, r.terms_used);
            let err = (r.value.re - direct).abs() / direct.abs().max(1.0);
            prop_assert!(err <= 1e-12, "params {upper:?};{lower:?} z={z}: err {err:e}");
        }
    }

    #[test]
    fn gamma_duplication_identity(alpha in 0.1f64..20.0) {
        // Γ(2α) = (2π)^{-1/2} 2^{2α-1/2} Γ(α) Γ(α+1/2)
        let lhs = gamma(2.0 * alpha).unwrap();
        let rhs = 2f64.powf(2.0 * alpha - 0.5) / SQRT_2PI
            * gamma(alpha).unwrap()
            * gamma(alpha + 0.5).unwrap();
        prop_assert!(((lhs - rhs) / lhs).abs() <= 1e-10);
    }

    #[test]
    fn pochhammer_gamma_consistency(theta in 0.05f64..25.0, n in 0u32..21) {
        let direct = pochhammer(theta, n).unwrap();
        let via_gamma = gamma(theta + n as f64).unwrap() / gamma(theta).unwrap();
        prop_assert!(((direct - via_gamma) / via_gamma).abs() <= 1e-11);
    }

    #[test]
    fn real_arguments_stay_exactly_real(c in 0.05f64..2.0, z in -20.0f64..20.0) {
        let r = pfq_real(&[c], &[c + 1.0, 1.5], z, 1e-12, 2000).unwrap();
        prop_assert_eq!(r.value.im, 0.0);
        let r = hyperint_core::pfq(
            &[1.0, c],
            &[2.0, c + 1.0],
            Complex::from_real(z),
            1e-12,
            2000,
        )
        .unwrap();
        prop_assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn quadrature_is_additive_over_splits(
        a in -2.0f64..0.5,
        width1 in 0.1f64..2.0,
        width2 in 0.1f64..2.0,
    ) {
        let b = a + width1;
        let c = b + width2;
        let f = |t: f64| (t * t).sin() + (1.3 * t).cos();
        let whole = adaptive_quadrature(f, a, c, 1e-11).unwrap();
        let left = adaptive_quadrature(f, a, b, 1e-11).unwrap();
        let right = adaptive_quadrature(f, b, c, 1e-11).unwrap();
        let budget = whole.error_estimate + left.error_estimate + right.error_estimate + 1e-13;
        prop_assert!((whole.value - (left.value + right.value)).abs() <= budget);
    }

    /// FTC reproduction: the central difference of every antiderivative
    /// matches its integrand in the series regime (|λ|x^β ≤ 8, where the
    /// alternating series carry full double precision).
    #[test]
    fn antiderivative_differentiates_to_integrand(
        fam_idx in 0usize..5,
        beta in 1.0f64..3.0,
        alpha_frac in 0.0f64..1.0,
        lam_mag in 0.3f64..2.0,
        lam_neg: bool,
        x_frac in 0.0f64..1.0,
    ) {
        let family = [Family::Si, Family::Ci, Family::Shi, Family::Chi, Family::Ei][fam_idx];
        let alpha_max = match family {
            Family::Si | Family::Shi | Family::Ei => beta + 0.95,
            Family::Ci | Family::Chi => 2.0 * beta + 0.95,
        };
        let mut alpha = -1.0 + alpha_frac * (alpha_max + 1.0);
        if (alpha - 1.0).abs() < 0.02 {
            alpha += 0.05; // keep the 1/(1-α) prefactor well conditioned
        }
        let lambda = if lam_neg { -lam_mag } else { lam_mag };
        let x_cap = (8.0 / lam_mag).powf(1.0 / beta).min(2.5);
        let x = 0.3 + x_frac * (x_cap - 0.3).max(0.01);

        let spec = IntegralSpec::new(family, beta, alpha, lambda).unwrap();
        let h = 1e-5 * x.abs().max(1.0);
        let g = |t: f64| antiderivative(&spec, t).unwrap().value;
        let cd = central_derivative(g, x, h);
        let truth = integrand(&spec, x).unwrap();
        if truth.abs() < 1e-2 {
            prop_assert!((cd - truth).abs() <= 1e-4, "{spec:?} x={x}: cd={cd} truth={truth}");
        } else {
            prop_assert!(
                ((cd - truth) / truth).abs() <= 1e-6,
                "{spec:?} x={x}: cd={cd} truth={truth}"
            );
        }
    }
}

#[test]
fn inflection_at_origin() {
    // G(0) = 0 exactly and the second central difference vanishes there:
    // the origin is an inflection point of the sine-kernel antiderivative.
    let spec = IntegralSpec::new(Family::Si, 1.0, 1.0, 1.0).unwrap();
    let g = |t: f64| antiderivative(&spec, t).unwrap().value;
    assert_eq!(g(0.0), 0.0);
    let h = 1e-3;
    let second = (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
    assert!(second.abs() < 1e-6, "second difference {second}");
    // And G is locally linear with unit slope.
    assert!((central_derivative(g, 0.0, h) - 1.0).abs() < 1e-6);
}

#[test]
fn accelerated_tail_is_bracketed_by_partial_sums() {
    // Alternating-series bound: consecutive partial sums bracket the limit,
    // and the accelerated estimate must land inside the final bracket.
    let spec = IntegralSpec::new(Family::Si, 1.0, 1.0, 1.0).unwrap();
    let accel = oscillatory_tail_quadrature(&spec, 0.0, 1e-10).unwrap();
    assert!(accel.converged);

    let f = |t: f64| t.sin() / t;
    let pi = core::f64::consts::PI;
    let mut partial = 0.0;
    let mut partials = Vec::new();
    for k in 0..14 {
        let (a, b) = (k as f64 * pi, (k + 1) as f64 * pi);
        partial += adaptive_quadrature(f, a.max(1e-300), b, 1e-12).unwrap().value;
        partials.push(partial);
    }
    for w in partials.windows(2).skip(1) {
        let (lo, hi) = (w[0].min(w[1]), w[0].max(w[1]));
        assert!(
            accel.value >= lo && accel.value <= hi,
            "estimate {} outside bracket [{lo}, {hi}]",
            accel.value
        );
    }
}

#[test]
fn asymptotic_and_series_regimes_meet_continuously() {
    // At a threshold lowered into the trustworthy series range, the two
    // paths must agree to the asymptotic form's own accuracy O(w⁻²).
    let spec = IntegralSpec::new(Family::Si, 1.0, 1.0, 1.0).unwrap();
    let series_opts = EvalOptions::default();
    let asym_opts = EvalOptions {
        thresholds: Thresholds {
            oscillatory: 10.0,
            exponential: 10.0,
        },
        ..EvalOptions::default()
    };
    for x in [12.0, 15.0, 20.0] {
        let s = hyperint_core::families::antiderivative_with(&spec, x, &series_opts)
            .unwrap()
            .value;
        let a = hyperint_core::families::antiderivative_with(&spec, x, &asym_opts)
            .unwrap()
            .value;
        assert!(
            (s - a).abs() < 2.0 / (x * x),
            "x={x}: series {s} vs asym {a}"
        );
    }
}
