//! Generalized hypergeometric series
//!
//! ```text
//! pFq(a₁..a_p; b₁..b_q; z) = Σₙ [(a₁)ₙ⋯(a_p)ₙ / (b₁)ₙ⋯(b_q)ₙ] zⁿ/n!
//! ```
//!
//! summed by the term recurrence
//! `term_{n+1} = term_n · Π(aᵢ+n)/Π(bⱼ+n) · z/(n+1)`. For p ≤ q the series
//! is entire in z and the term ratio tends to zero, so truncation is
//! controlled: summation stops once three consecutive terms fall below
//! `tol·max(1, |sum|)` (a single small term is not trusted because
//! alternating series dip transiently), and the tail estimate is twice the
//! magnitude of the first dropped term.

use alloc::format;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::float;

/// Default truncation tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default term budget; generous for arguments up to |z| ~ 1e3.
pub const DEFAULT_MAX_TERMS: u32 = 10_000;

/// The (a; b; z) triple defining one pFq evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub argument: Complex,
}

impl HyperParams {
    /// Validates that no lower parameter is zero or a negative integer and
    /// that p ≤ q + 1.
    pub fn new(upper: Vec<f64>, lower: Vec<f64>, argument: Complex) -> Result<Self> {
        validate_params(&upper, &lower)?;
        Ok(HyperParams {
            upper,
            lower,
            argument,
        })
    }

    pub fn evaluate(&self, tol: f64, max_terms: u32) -> Result<SeriesResult> {
        pfq(&self.upper, &self.lower, self.argument, tol, max_terms)
    }
}

/// Outcome of a truncated series summation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesResult {
    pub value: Complex,
    /// Number of terms actually added to the sum (≥ 1).
    pub terms_used: u32,
    /// Absolute bound on the truncation error: 2 × |first dropped term|.
    pub tail_estimate: f64,
    /// False when `max_terms` was exhausted before the stop rule fired.
    pub converged: bool,
}

fn validate_params(upper: &[f64], lower: &[f64]) -> Result<()> {
    for &b in lower {
        if float::is_nonpositive_integer(b) {
            return Err(Error::InvalidParameter(format!(
                "lower parameter {b} is zero or a negative integer"
            )));
        }
    }
    if upper.len() > lower.len() + 1 {
        return Err(Error::InvalidParameter(format!(
            "p = {} exceeds q + 1 = {}",
            upper.len(),
            lower.len() + 1
        )));
    }
    Ok(())
}

/// Sums pFq(upper; lower; z) to tolerance `tol`.
///
/// A purely real argument stays exactly real: the recurrence multiplies the
/// running term by real ratios and by z itself, and complex products with
/// zero imaginary parts have exactly zero imaginary parts.
pub fn pfq(
    upper: &[f64],
    lower: &[f64],
    z: Complex,
    tol: f64,
    max_terms: u32,
) -> Result<SeriesResult> {
    validate_params(upper, lower)?;
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive")));
    }

    let ratio = |n: u32| -> f64 {
        let nf = n as f64;
        let mut r = 1.0;
        for &a in upper {
            r *= a + nf;
        }
        for &b in lower {
            r /= b + nf;
        }
        r / (nf + 1.0)
    };

    let mut sum = Complex::ONE; // n = 0 term
    let mut term = Complex::ONE;
    let mut terms_used = 1u32;
    let mut small_run = 0u8;

    for n in 0..max_terms {
        term = term * z * ratio(n);
        if !term.is_finite() {
            return Err(Error::Overflow {
                sign: if term.re < 0.0 { -1.0 } else { 1.0 },
            });
        }
        sum = sum + term;
        terms_used += 1;

        if term.abs() <= tol * sum.abs().max(1.0) {
            small_run += 1;
            if small_run == 3 {
                let dropped = (term * z * ratio(n + 1)).abs();
                return Ok(SeriesResult {
                    value: sum,
                    terms_used,
                    tail_estimate: 2.0 * dropped,
                    converged: true,
                });
            }
        } else {
            small_run = 0;
        }
    }

    let dropped = (term * z * ratio(max_terms)).abs();
    Ok(SeriesResult {
        value: sum,
        terms_used,
        tail_estimate: 2.0 * dropped,
        converged: false,
    })
}

/// Real-argument convenience wrapper; the result's imaginary part is
/// exactly zero by the closure property above.
pub fn pfq_real(
    upper: &[f64],
    lower: &[f64],
    z: f64,
    tol: f64,
    max_terms: u32,
) -> Result<SeriesResult> {
    pfq(upper, lower, Complex::from_real(z), tol, max_terms)
}

/// u·₂F₂(1,1;2,2;u) = Σ_{k≥1} uᵏ/(k·k!), the kernel shared by the
/// exponential and logarithmic antiderivatives.
///
/// For u > 0 the series has positive terms and is summed directly. For
/// u ≤ −5 the alternating series cancels catastrophically (absolute error
/// ~ ε·e^|u|), so the value is taken from the complementary identity
/// Σ uᵏ/(k·k!) = −γ − ln(−u) − E₁(−u) with E₁ evaluated by a Lentz
/// continued fraction.
pub fn exp_kernel(u: f64, tol: f64, max_terms: u32) -> Result<SeriesResult> {
    if u == 0.0 {
        return Ok(SeriesResult {
            value: Complex::ZERO,
            terms_used: 1,
            tail_estimate: 0.0,
            converged: true,
        });
    }
    if u <= -5.0 {
        let (e1, iters, resid) = e1_continued_fraction(-u);
        let value = -crate::special::EULER_MASCHERONI - float::ln(-u) - e1;
        return Ok(SeriesResult {
            value: Complex::from_real(value),
            terms_used: iters,
            tail_estimate: resid,
            converged: true,
        });
    }
    let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], u, tol, max_terms)?;
    Ok(SeriesResult {
        value: r.value.scale(u),
        tail_estimate: r.tail_estimate * u.abs(),
        ..r
    })
}

/// E₁(y) for y ≥ 5 by the classical continued fraction
/// e^{-y} / (y+1 - 1²/(y+3 - 2²/(y+5 - ⋯))), evaluated with the modified
/// Lentz algorithm. Returns (value, iterations, residual bound).
fn e1_continued_fraction(y: f64) -> (f64, u32, f64) {
    debug_assert!(y >= 5.0);
    let tiny = 1e-300;
    let mut b = y + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    let mut iters = 0u32;
    let mut delta = 0.0;
    for i in 1..200u32 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let factor = c * d;
        h *= factor;
        iters = i;
        delta = (factor - 1.0).abs();
        if delta < 1e-16 {
            break;
        }
    }
    let value = float::exp(-y) * h;
    (value, iters, delta * value.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(r: &SeriesResult) -> f64 {
        r.value.re
    }

    #[test]
    fn zero_argument_is_one() {
        let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], 0.0, 1e-12, 100).unwrap();
        assert_eq!(val(&r), 1.0);
        assert!(r.converged);
        assert!(r.terms_used >= 1);
    }

    #[test]
    fn sine_kernel_value_at_quarter() {
        // 1F2(1/2; 3/2, 3/2; -1/4) = ∫₀¹ sin t/t dt, mpmath reference.
        let r = pfq_real(&[0.5], &[1.5, 1.5], -0.25, 1e-15, 100).unwrap();
        assert!((val(&r) - 0.946083070367183015).abs() < 1e-15);
    }

    #[test]
    fn exp_kernel_at_one() {
        // 2F2(1,1;2,2;1), mpmath reference.
        let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], 1.0, 1e-15, 200).unwrap();
        assert!((val(&r) - 1.31790215145440389).abs() < 1e-14);
    }

    #[test]
    fn real_argument_stays_exactly_real() {
        let r = pfq_real(&[0.5], &[1.5, 1.5], -9.0, 1e-12, 1000).unwrap();
        assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn converged_tail_respects_tolerance() {
        let tol = 1e-12;
        let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], 3.0, tol, 1000).unwrap();
        assert!(r.converged);
        assert!(r.tail_estimate <= tol * val(&r).abs().max(1.0));
    }

    #[test]
    fn max_terms_reports_non_convergence() {
        let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], 25.0, 1e-12, 10).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 11);
    }

    #[test]
    fn invalid_lower_parameter_rejected() {
        assert!(matches!(
            pfq_real(&[1.0], &[-2.0], 0.5, 1e-12, 100),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            HyperParams::new(alloc::vec![1.0], alloc::vec![0.0], Complex::ONE),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn too_many_upper_parameters_rejected() {
        assert!(matches!(
            pfq_real(&[1.0, 1.0, 1.0], &[2.0], 0.5, 1e-12, 100),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn terminating_series_is_polynomial() {
        // Upper parameter -3 terminates after four terms: 1F1(-3;2;z).
        let r = pfq_real(&[-3.0], &[2.0], 1.7, 1e-12, 100).unwrap();
        // Direct polynomial: sum_{n=0..3} (-3)_n/(2)_n z^n/n!
        let z: f64 = 1.7;
        let want = 1.0 - 3.0 / 2.0 * z + (6.0 / 6.0) * z * z / 2.0 - (6.0 / 24.0) * z * z * z / 6.0;
        assert!((val(&r) - want).abs() < 1e-14);
        assert!(r.converged);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            pfq_real(&[1.0, 1.0], &[2.0, 2.0], 1e4, 1e-12, 10_000),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn exp_kernel_continued_fraction_matches_series_at_crossover() {
        // Both branches are accurate near u = -5; they must agree there.
        let cf = exp_kernel(-5.0, 1e-15, 500).unwrap().value.re;
        let series = {
            let r = pfq_real(&[1.0, 1.0], &[2.0, 2.0], -5.0, 1e-15, 500).unwrap();
            -5.0 * r.value.re
        };
        assert!(
            (cf - series).abs() < 1e-12,
            "cf {cf} vs series {series}"
        );
        // mpmath reference for u = -5.
        assert!((cf - -2.18780187292690856).abs() < 1e-13);
    }

    #[test]
    fn exp_kernel_deep_negative_reference() {
        // mpmath: u·2F2(1,1;2,2;u) at u = -40 (raw f64 series would be noise).
        let v = exp_kernel(-40.0, 1e-12, 500).unwrap().value.re;
        assert!((v - -4.26609511901546916).abs() < 1e-12);
    }
}
