//! Independent ground-truth generators: adaptive Gauss–Kronrod
//! quadrature, oscillatory-tail panel summation, central differences and a
//! prime sieve. Nothing here goes through the hypergeometric machinery, so
//! these (and only these) are fit to validate it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{integrand, Family, IntegralSpec};
use crate::float;

use core::f64::consts::PI;

/// Result of a quadrature run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: u32,
    pub converged: bool,
}

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK abscissae;
// odd indices are the embedded Gauss points, the last entry is the center).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss–Kronrod panel: returns (K15 value, |K15 − G7| estimate).
/// Endpoints are never evaluated, so integrable endpoint singularities are
/// tolerated.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let fc = f(center);
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        resk += WGK[j] * fsum;
        if j % 2 == 1 {
            resg += WG[j / 2] * fsum;
        }
    }
    (resk * half, ((resk - resg) * half).abs())
}

struct AdaptState<'f, F> {
    f: &'f F,
    tol_per_width: f64, // tol / (b - a): per-panel budget is width-proportional
    value: f64,
    error: f64,
    panels: u32,
    converged: bool,
}

fn adapt_rec<F: Fn(f64) -> f64>(st: &mut AdaptState<'_, F>, a: f64, b: f64, depth: u32) {
    let (v, e) = gk15(st.f, a, b);
    if e <= st.tol_per_width * (b - a) || depth >= 60 {
        st.value += v;
        st.error += e;
        st.panels += 1;
        if depth >= 60 && e > st.tol_per_width * (b - a) {
            st.converged = false;
        }
        return;
    }
    let mid = 0.5 * (a + b);
    adapt_rec(st, a, mid, depth + 1);
    adapt_rec(st, mid, b, depth + 1);
}

/// Adaptive bisection with an embedded G7/K15 rule pair per panel.
/// Panels are split until each local error fits its width-proportional
/// share of `tol`; `converged` is false if depth 60 was hit first.
pub fn adaptive_quadrature<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "quadrature needs finite a < b (got a={a}, b={b})"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive")));
    }
    let mut st = AdaptState {
        f: &f,
        tol_per_width: tol / (b - a),
        value: 0.0,
        error: 0.0,
        panels: 0,
        converged: true,
    };
    adapt_rec(&mut st, a, b, 0);
    Ok(QuadratureResult {
        value: st.value,
        error_estimate: st.error,
        subdivisions: st.panels,
        converged: st.converged,
    })
}

/// k-th zero of the oscillating factor past which panels alternate:
/// sin(λx^β) vanishes at (kπ/λ)^{1/β}, cos(λx^β) at ((k−1/2)π/λ)^{1/β}.
fn oscillation_zero(family: Family, beta: f64, lambda: f64, k: u32) -> f64 {
    let phase = match family {
        Family::Si => k as f64 * PI,
        Family::Ci => (k as f64 - 0.5) * PI,
        _ => unreachable!(),
    };
    float::pow(phase / lambda, 1.0 / beta)
}

/// Integrates a Si/Ci integrand from `a` to +∞ by summing the alternating
/// between-zeros panel series with repeated-averaging acceleration.
///
/// Stops when the accelerated tail bound drops below `tol`; if 10⁴ panels
/// are not enough, the result is returned with `converged = false`.
pub fn oscillatory_tail_quadrature(
    spec: &IntegralSpec,
    a: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !matches!(spec.family, Family::Si | Family::Ci) {
        return Err(Error::Domain(format!(
            "oscillatory tail summation applies to the sine/cosine families"
        )));
    }
    if a < 0.0 || !a.is_finite() {
        return Err(Error::Domain(format!("start point must satisfy a >= 0")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive")));
    }
    let lam = spec.lambda.abs();
    let lam_sign = if spec.lambda < 0.0 && spec.family == Family::Ci {
        -1.0
    } else {
        1.0
    };
    let f = |x: f64|

        // The integrand is evaluated with |λ|; the λ-sign is restored once
        // at the end (sine kernels are λ-even, cosine kernels λ-odd).
        integrand(
            &IntegralSpec {
                lambda: lam,
                ..*spec
            },
            x,
        )
        .unwrap_or(0.0);

    let panel_tol = tol / 64.0;
    const MAX_PANELS: u32 = 10_000;

    // First zero strictly past `a`.
    let mut k = 1u32;
    while oscillation_zero(spec.family, spec.beta, lam, k) <= a {
        k += 1;
    }

    let mut value_head = 0.0;
    let mut err_sum = 0.0;
    let mut panels = 0u32;
    let first_zero = oscillation_zero(spec.family, spec.beta, lam, k);
    if first_zero > a {
        let head = adaptive_quadrature(&f, a, first_zero, panel_tol)?;
        value_head = head.value;
        err_sum += head.error_estimate;
        panels += head.subdivisions;
    }

    let mut partials: Vec<f64> = Vec::new();
    let mut running = value_head;
    let mut prev_estimate = f64::NAN;
    let mut estimate = value_head;
    let mut bound = f64::INFINITY;
    let mut converged = false;

    for _ in 0..MAX_PANELS {
        let lo = oscillation_zero(spec.family, spec.beta, lam, k);
        let hi = oscillation_zero(spec.family, spec.beta, lam, k + 1);
        k += 1;
        let panel = adaptive_quadrature(&f, lo, hi, panel_tol)?;
        err_sum += panel.error_estimate;
        panels += 1;
        running += panel.value;
        partials.push(running);

        if partials.len() >= 4 {
            estimate = accelerated_limit(&partials);
            if prev_estimate.is_finite() {
                bound = (estimate - prev_estimate).abs();
                if bound <= tol {
                    converged = true;
                    break;
                }
            }
            prev_estimate = estimate;
        }
    }

    Ok(QuadratureResult {
        value: lam_sign * estimate,
        error_estimate: bound.min(f64::MAX) + err_sum,
        subdivisions: panels,
        converged,
    })
}

/// Repeated pairwise averaging (Euler transform) of the most recent
/// partial sums; for an alternating tail each level halves the error.
fn accelerated_limit(partials: &[f64]) -> f64 {
    let window = partials.len().min(16);
    let mut row: Vec<f64> = partials[partials.len() - window..].to_vec();
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    row[0]
}

/// Central difference (f(x+h) − f(x−h)) / 2h; exact for quadratics.
pub fn central_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Exact prime count π(x) by an odds-only bit sieve. Bounded at 10⁸
/// (12.5 MB of sieve bits).
pub fn prime_pi(x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::Domain(format!("prime count needs x >= 2 (got {x})")));
    }
    if x > 100_000_000 {
        return Err(Error::Resource(format!(
            "sieve bound is 1e8 (asked for {x})"
        )));
    }
    let n = x as usize;
    if n == 2 {
        return Ok(1);
    }
    // Odd v in [3, n] maps to index (v-3)/2.
    let size = (n - 1) / 2;
    let mut bits = vec![u64::MAX; (size + 63) / 64];
    let mut v = 3usize;
    while v * v <= n {
        if bits[(v - 3) / 2 / 64] >> ((v - 3) / 2 % 64) & 1 == 1 {
            let mut j = (v * v - 3) / 2;
            while j < size {
                bits[j / 64] &= !(1u64 << (j % 64));
                j += v;
            }
        }
        v += 2;
    }
    // Mask out padding bits beyond `size`.
    let tail = size % 64;
    if tail != 0 {
        let last = bits.len() - 1;
        bits[last] &= (1u64 << tail) - 1;
    }
    let odd_count: u64 = bits.iter().map(|w| w.count_ones() as u64).sum();
    Ok(odd_count + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integrand_is_exact() {
        let r = adaptive_quadrature(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!(r.converged);
    }

    #[test]
    fn classical_sine_area() {
        let r = adaptive_quadrature(float::sin, 0.0, PI, 1e-13).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sine_kernel_area() {
        // ∫₀¹ sin t/t dt, mpmath reference; the 0 endpoint is never
        // evaluated by the rule so the removable singularity is harmless.
        let r = adaptive_quadrature(|t| float::sin(t) / t, 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value - 0.946083070367183015).abs() < 1e-12);
        assert!(r.error_estimate < 1e-12);
    }

    #[test]
    fn preconditions_rejected() {
        assert!(adaptive_quadrature(|_| 1.0, 1.0, 0.0, 1e-10).is_err());
        assert!(adaptive_quadrature(|_| 1.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn oscillatory_tail_dirichlet() {
        let spec = IntegralSpec::new(Family::Si, 1.0, 1.0, 1.0).unwrap();
        let r = oscillatory_tail_quadrature(&spec, 0.0, 1e-10).unwrap();
        assert!(r.converged);
        assert!(
            (r.value - core::f64::consts::FRAC_PI_2).abs() < 1e-8,
            "value {}",
            r.value
        );
    }

    #[test]
    fn oscillatory_panels_alternate() {
        // Between consecutive zeros of sin the panel integrals alternate.
        let f = |t: f64| float::sin(t) / t;
        let mut prev_sign = 0.0;
        for k in 1..8 {
            let (a, b) = (k as f64 * PI, (k + 1) as f64 * PI);
            let v = adaptive_quadrature(f, a, b, 1e-12).unwrap().value;
            if prev_sign != 0.0 {
                assert!(v * prev_sign < 0.0);
            }
            prev_sign = v;
        }
    }

    #[test]
    fn oscillatory_requires_sine_or_cosine() {
        let spec = IntegralSpec::new(Family::Shi, 1.0, 1.0, 1.0).unwrap();
        assert!(oscillatory_tail_quadrature(&spec, 0.0, 1e-8).is_err());
    }

    #[test]
    fn central_difference_basics() {
        assert_eq!(central_derivative(|x| x, 3.0, 0.5), 1.0);
        // Exact for quadratics at any h.
        assert!((central_derivative(|x| x * x, 3.0, 0.25) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn sieve_reference_counts() {
        assert_eq!(prime_pi(2).unwrap(), 1);
        assert_eq!(prime_pi(10).unwrap(), 4);
        assert_eq!(prime_pi(1_000).unwrap(), 168);
        assert_eq!(prime_pi(10_000).unwrap(), 1_229);
        assert_eq!(prime_pi(1_000_000).unwrap(), 78_498);
    }

    #[test]
    fn sieve_matches_trial_division_below_1000() {
        let is_prime = |n: u64| -> bool {
            if n < 2 {
                return false;
            }
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 1;
            }
            true
        };
        let mut count = 0;
        for n in 2..=1000u64 {
            if is_prime(n) {
                count += 1;
            }
            assert_eq!(prime_pi(n).unwrap(), count, "pi({n})");
        }
    }

    #[test]
    fn sieve_bounds() {
        assert!(matches!(prime_pi(1), Err(Error::Domain(_))));
        assert!(matches!(prime_pi(200_000_000), Err(Error::Resource(_))));
    }
}
