//! Leading-order large-argument forms and the series/asymptotic regime
//! selector.
//!
//! For w = λx^β large, the oscillatory antiderivatives approach finite
//! limits with an O(w⁻¹·x^{-(α-1)})-scale oscillation around them:
//!
//! ```text
//! G_si(x) ~ K_si(β,α,λ) − cos(λx^β) / (λ²β x^{α+β−1})
//! G_ci(x) ~ C_ci(β,α,λ) + sin(λx^β) / (λ²β x^{α+β−1})
//! ```
//!
//! The constants come from the Mellin sine/cosine transforms,
//!
//! ```text
//! K_si = (2/λ)^{2c}/s · Γ(c+1)/Γ(3/2−c) · √π/2       c = s/(2β), s = β−α+1
//! C_ci = λ^{(α−1)/β−1}/β · π/(2 sin(πp/2) Γ(1−p))     p = (1−α)/β
//! ```
//!
//! with dedicated values for the log-bearing cases (α = β+1 for the sine
//! family, α = 1 and α = 2β+1 for the cosine family). Everything here
//! assumes λ > 0; callers reduce negative λ by the integrand's parity
//! first. The limits exist only when α + β > 1.

use alloc::format;

use crate::error::{Error, Result};
use crate::float;
use crate::series::{self, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use crate::special::{gamma, EULER_MASCHERONI};

use core::f64::consts::PI;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Which evaluation path a magnitude falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegimeKind {
    Series,
    Asymptotic,
}

/// Selected regime plus the threshold that produced the decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regime {
    pub kind: RegimeKind,
    pub switch_threshold: f64,
}

/// Threshold class: the oscillatory families switch later than the
/// exponential-kernel ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticFamily {
    Oscillatory,
    Exponential,
}

/// Regime switch points, configurable per call site.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    pub oscillatory: f64,
    pub exponential: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            oscillatory: 40.0,
            exponential: 30.0,
        }
    }
}

/// Series below the threshold, asymptotic at or above it (closed on the
/// right). The magnitude is the family's natural large parameter |λx^β|
/// (ln x for the logarithmic integral).
pub fn select_regime(z_magnitude: f64, family: AsymptoticFamily) -> Regime {
    select_regime_with(z_magnitude, family, &Thresholds::default())
}

pub fn select_regime_with(
    z_magnitude: f64,
    family: AsymptoticFamily,
    thresholds: &Thresholds,
) -> Regime {
    let threshold = match family {
        AsymptoticFamily::Oscillatory => thresholds.oscillatory,
        AsymptoticFamily::Exponential => thresholds.exponential,
    };
    let kind = if z_magnitude >= threshold {
        RegimeKind::Asymptotic
    } else {
        RegimeKind::Series
    };
    Regime {
        kind,
        switch_threshold: threshold,
    }
}

fn require_positive_lambda(lambda: f64) -> Result<()> {
    if lambda <= 0.0 {
        return Err(Error::Domain(format!(
            "asymptotic forms assume lambda > 0 (got {lambda}); reduce by parity first"
        )));
    }
    Ok(())
}

fn require_limit_exists(beta: f64, alpha: f64) -> Result<()> {
    if alpha + beta <= 1.0 {
        return Err(Error::Divergent(format!(
            "alpha + beta = {} <= 1: the antiderivative has no finite limit",
            alpha + beta
        )));
    }
    Ok(())
}

/// x → +∞ limit of the sine-family antiderivative.
///
/// For β = α this is the closed form (2/λ)^{1/α} Γ(1/(2α)+1)/Γ(3/2−1/(2α))·√π/2.
pub fn si_limit(beta: f64, alpha: f64, lambda: f64) -> Result<f64> {
    require_positive_lambda(lambda)?;
    require_limit_exists(beta, alpha)?;
    if alpha == beta + 1.0 {
        // Log case: G(x) = ln x + … tends to (1 − γ − ln λ)/β.
        return Ok((1.0 - EULER_MASCHERONI - float::ln(lambda)) / beta);
    }
    let s = beta - alpha + 1.0;
    let c = s / (2.0 * beta);
    // c ∈ (0, 1) whenever α+β > 1 and α < β+1, so both gammas are safe.
    Ok(float::pow(2.0 / lambda, 2.0 * c) / s * gamma(c + 1.0)? / gamma(1.5 - c)? * SQRT_PI / 2.0)
}

/// x → +∞ limit of the cosine-family antiderivative.
pub fn ci_limit(beta: f64, alpha: f64, lambda: f64) -> Result<f64> {
    require_positive_lambda(lambda)?;
    require_limit_exists(beta, alpha)?;
    if alpha == 1.0 {
        return Ok(-(EULER_MASCHERONI + float::ln(lambda)) / (lambda * beta));
    }
    if alpha == 2.0 * beta + 1.0 {
        return Ok(lambda / beta * ((EULER_MASCHERONI + float::ln(lambda)) / 2.0 - 0.75));
    }
    let p = (1.0 - alpha) / beta;
    let sin_half = float::sin(PI * p / 2.0);
    if sin_half == 0.0 {
        return Err(Error::Domain(format!(
            "cosine-family limit undefined at p = {p}"
        )));
    }
    Ok(float::pow(lambda, (alpha - 1.0) / beta - 1.0) / beta * PI
        / (2.0 * sin_half * gamma(1.0 - p)?))
}

/// Parity of sin(λx^β)/x^α under x → −x for integer exponents:
/// even exactly when α and β have the same parity.
pub(crate) fn sin_kernel_even(beta: i64, alpha: i64) -> bool {
    (alpha - beta).rem_euclid(2) == 0
}

/// Parity of cos(λx^β)/x^α: even exactly when α is even (cos is even in
/// its argument for any integer β).
pub(crate) fn cos_kernel_even(alpha: i64) -> bool {
    alpha.rem_euclid(2) == 0
}

/// For negative x the closed forms require integer exponents; returns the
/// sign relating G(−x) to G(x): −1 when the integrand is even (G odd),
/// +1 when the integrand is odd (G even).
fn negative_axis_sign(beta: f64, alpha: f64, even: impl Fn(i64, i64) -> bool) -> Result<f64> {
    if !float::is_integer(beta) || !float::is_integer(alpha) {
        return Err(Error::Domain(format!(
            "x < 0 requires integer beta and alpha (got beta={beta}, alpha={alpha})"
        )));
    }
    Ok(if even(beta as i64, alpha as i64) {
        -1.0
    } else {
        1.0
    })
}

/// Leading-order sine-family antiderivative at large |λx^β|.
pub fn si_large_x(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<f64> {
    require_positive_lambda(lambda)?;
    if x == 0.0 {
        return Err(Error::Domain(format!("large-argument form needs x != 0")));
    }
    if x < 0.0 {
        let sign = negative_axis_sign(beta, alpha, sin_kernel_even)?;
        return Ok(sign * si_large_x(beta, alpha, lambda, -x)?);
    }
    let limit = si_limit(beta, alpha, lambda)?;
    let w = lambda * float::pow(x, beta);
    Ok(limit - float::cos(w) / (lambda * lambda * beta * float::pow(x, alpha + beta - 1.0)))
}

/// Leading-order cosine-family antiderivative at large |λx^β|.
pub fn ci_large_x(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<f64> {
    require_positive_lambda(lambda)?;
    if x == 0.0 {
        return Err(Error::Domain(format!("large-argument form needs x != 0")));
    }
    if x < 0.0 {
        let sign = negative_axis_sign(beta, alpha, |_, a| cos_kernel_even(a))?;
        return Ok(sign * ci_large_x(beta, alpha, lambda, -x)?);
    }
    let limit = ci_limit(beta, alpha, lambda)?;
    let w = lambda * float::pow(x, beta);
    Ok(limit + float::sin(w) / (lambda * lambda * beta * float::pow(x, alpha + beta - 1.0)))
}

/// Large-argument form of λx^β·₂F₂(1,1;2,2;λx^β): −2 + e^{λx^β}/(λx^β).
///
/// Valid as λx^β → +∞; overflow of the exponential is reported.
pub fn exp_2f2_large(beta: f64, lambda: f64, x: f64) -> Result<f64> {
    if x <= 0.0 && !float::is_integer(beta) {
        return Err(Error::Domain(format!(
            "x^beta undefined for x <= 0 with non-integer beta"
        )));
    }
    let u = lambda * float::pow(x, beta);
    let e = float::exp(u);
    if e.is_infinite() {
        return Err(Error::Overflow { sign: 1.0 });
    }
    Ok(-2.0 + e / u)
}

/// Large-x logarithmic integral: x/ln x + ln(ln x/ln μ) − 2 − ln μ·₂F₂(1,1;2,2;ln μ).
pub fn li_large_x(mu: f64, x: f64) -> Result<f64> {
    if mu <= 1.0 {
        return Err(Error::Domain(format!("li requires mu > 1 (got {mu})")));
    }
    if x < 100.0 * mu {
        return Err(Error::Domain(format!(
            "large-x form needs x >= 100*mu (x = {x}, mu = {mu})"
        )));
    }
    let ln_x = float::ln(x);
    let ln_mu = float::ln(mu);
    let constant = series::exp_kernel(ln_mu, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value.re;
    Ok(x / ln_x + float::ln(ln_x / ln_mu) - 2.0 - constant)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAC_PI_2: f64 = core::f64::consts::FRAC_PI_2;

    #[test]
    fn regime_selection() {
        assert_eq!(
            select_regime(0.5, AsymptoticFamily::Oscillatory).kind,
            RegimeKind::Series
        );
        assert_eq!(
            select_regime(1e6, AsymptoticFamily::Oscillatory).kind,
            RegimeKind::Asymptotic
        );
        // Closed on the right: exactly at the threshold is asymptotic.
        assert_eq!(
            select_regime(40.0, AsymptoticFamily::Oscillatory).kind,
            RegimeKind::Asymptotic
        );
        assert_eq!(
            select_regime(30.0, AsymptoticFamily::Exponential).kind,
            RegimeKind::Asymptotic
        );
        assert_eq!(
            select_regime(29.999, AsymptoticFamily::Exponential).kind,
            RegimeKind::Series
        );
        let t = Thresholds {
            oscillatory: 10.0,
            exponential: 10.0,
        };
        assert_eq!(
            select_regime_with(12.0, AsymptoticFamily::Oscillatory, &t).kind,
            RegimeKind::Asymptotic
        );
    }

    #[test]
    fn sine_limits_match_closed_forms() {
        // β = α = 1: ±π/(2λ).
        for lam in [1.0, 2.0, 0.5] {
            assert!((si_limit(1.0, 1.0, lam).unwrap() - FRAC_PI_2 / lam).abs() < 1e-14);
        }
        // β = α = 2, λ = 1: √(π/2) (mpmath reference).
        assert!((si_limit(2.0, 2.0, 1.0).unwrap() - 1.25331413731550025).abs() < 1e-14);
        // β = α = 3, λ = 1 (mpmath reference).
        assert!((si_limit(3.0, 3.0, 1.0).unwrap() - 1.16001441311698473).abs() < 1e-14);
    }

    #[test]
    fn cosine_limit_classical_values() {
        // ∫₀^∞ cos t/√t dt = √(π/2), integrand here carries 1/λ = 1.
        assert!((ci_limit(1.0, 0.5, 1.0).unwrap() - 1.25331413731550025).abs() < 1e-14);
        // α = 2: antiderivative of cos t/t² tends to −π/2.
        assert!((ci_limit(1.0, 2.0, 1.0).unwrap() + FRAC_PI_2).abs() < 1e-14);
        // α = 1 log case, λ = 1: −γ.
        assert!((ci_limit(1.0, 1.0, 1.0).unwrap() + EULER_MASCHERONI).abs() < 1e-15);
    }

    #[test]
    fn limits_at_huge_x() {
        // At |x| = 1e12 the oscillatory correction is ≤ 1e-12.
        let g = si_large_x(1.0, 1.0, 1.0, 1e12).unwrap();
        assert!((g - FRAC_PI_2).abs() < 1e-10);
        let g = si_large_x(1.0, 1.0, 1.0, -1e12).unwrap();
        assert!((g + FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn sign_symmetry_for_odd_case() {
        for x in [45.0, 80.0, 123.0] {
            let plus = si_large_x(1.0, 1.0, 0.7, x).unwrap();
            let minus = si_large_x(1.0, 1.0, 0.7, -x).unwrap();
            assert_eq!(minus, -plus);
        }
    }

    #[test]
    fn negative_x_needs_integer_exponents() {
        assert!(matches!(
            si_large_x(1.5, 1.0, 1.0, -50.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exp_form_reference() {
        let v = exp_2f2_large(1.0, 1.0, 30.0).unwrap();
        let want = -2.0 + (30.0_f64).exp() / 30.0;
        assert_eq!(v, want);
        // λx = −40: the exponential is negligible, value ≈ −2.
        let v = exp_2f2_large(1.0, -1.0, 40.0).unwrap();
        assert!((v + 2.0).abs() < 1e-15);
        assert!(matches!(
            exp_2f2_large(1.0, 1.0, 800.0),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn li_large_x_guards() {
        assert!(matches!(li_large_x(1.0, 1e6), Err(Error::Domain(_))));
        assert!(matches!(li_large_x(2.0, 150.0), Err(Error::Domain(_))));
        // Structural: value minus x/lnx is independent of x (up to ln ln x).
        // Tolerance reflects the cancellation of the O(1e8) x/lnx term.
        let f = |x: f64| li_large_x(2.0, x).unwrap() - x / float::ln(x) - float::ln(float::ln(x));
        assert!((f(1e6) - f(1e9)).abs() < 1e-7);
    }

    #[test]
    fn lambda_must_be_positive() {
        assert!(matches!(
            si_large_x(1.0, 1.0, -1.0, 50.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(si_limit(1.0, 1.0, 0.0), Err(Error::Domain(_))));
    }
}
