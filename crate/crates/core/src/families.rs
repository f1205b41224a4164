//! Antiderivative catalog and FTC-based definite integration.
//!
//! Five integrand families share one interface:
//!
//! ```text
//! Si:  sin(λx^β)/(λx^α)    α ≤ β+1      Ci:  cos(λx^β)/(λx^α)   α ≤ 2β+1
//! Shi: sinh(λx^β)/(λx^α)   α ≤ β+1      Chi: cosh(λx^β)/(λx^α)  α ≤ 2β+1
//! Ei:  e^{λx^β}/x^α        α ≤ β+1, x > 0
//! ```
//!
//! with β ≥ 1 throughout. Each family's antiderivative G is a closed form
//! in ₁F₂/₂F₂/₂F₃ (the boundary exponents α = 1, α = β+1, α = 2β+1 pick up
//! logarithmic terms), every coefficient fixed by requiring G′ to
//! reproduce the integrand. Definite integrals are G(b) − G(a); infinite
//! endpoints use the limits in [`crate::asymptotics`].
//!
//! Conventions: x < 0 needs integer exponents and is reduced by the
//! integrand's parity; negative λ is reduced by the families' exact
//! λ-parity (sin/sinh invariant, cos/cosh odd) except for Ei, where the
//! sign of λ genuinely changes the integrand.

use alloc::format;
use alloc::vec::Vec;

use crate::asymptotics::{
    self, select_regime_with, AsymptoticFamily, Regime, RegimeKind, Thresholds,
};
use crate::error::{Error, Result};
use crate::float;
use crate::series::{self, pfq_real, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use crate::special::EULER_MASCHERONI;

use core::f64::consts::LN_2;

/// Integrand family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Si,
    Ci,
    Shi,
    Chi,
    Ei,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Si => "si",
            Family::Ci => "ci",
            Family::Shi => "shi",
            Family::Chi => "chi",
            Family::Ei => "ei",
        }
    }

    fn is_sine_kind(self) -> bool {
        matches!(self, Family::Si | Family::Shi)
    }
}

/// One integrand: family plus the (β, α, λ) exponent/scale triple.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralSpec {
    pub family: Family,
    pub beta: f64,
    pub alpha: f64,
    pub lambda: f64,
}

impl IntegralSpec {
    /// Validates β ≥ 1, λ ≠ 0 and the supported exponent ranges
    /// (α ≤ β+1 for Si/Shi/Ei, α ≤ 2β+1 for Ci/Chi).
    pub fn new(family: Family, beta: f64, alpha: f64, lambda: f64) -> Result<Self> {
        if !beta.is_finite() || !alpha.is_finite() || !lambda.is_finite() {
            return Err(Error::Domain(format!("beta, alpha, lambda must be finite")));
        }
        if beta < 1.0 {
            return Err(Error::Scope(format!("beta must be >= 1 (got {beta})")));
        }
        if lambda == 0.0 {
            return Err(Error::Domain(format!("lambda must be nonzero")));
        }
        match family {
            Family::Si | Family::Shi | Family::Ei => {
                if alpha > beta + 1.0 {
                    return Err(Error::Scope(format!(
                        "alpha exceeds beta+1: {} > {}",
                        alpha,
                        beta + 1.0
                    )));
                }
            }
            Family::Ci | Family::Chi => {
                if alpha > 2.0 * beta + 1.0 {
                    return Err(Error::Scope(format!(
                        "alpha exceeds 2*beta+1: {} > {}",
                        alpha,
                        2.0 * beta + 1.0
                    )));
                }
            }
        }
        Ok(IntegralSpec {
            family,
            beta,
            alpha,
            lambda,
        })
    }
}

/// Bound of a definite integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Endpoint {
    NegInfinity,
    Finite(f64),
    PosInfinity,
}

impl Endpoint {
    fn key(self) -> f64 {
        match self {
            Endpoint::NegInfinity => f64::NEG_INFINITY,
            Endpoint::Finite(v) => v,
            Endpoint::PosInfinity => f64::INFINITY,
        }
    }
}

/// Evaluation knobs: series tolerance, term budget, regime thresholds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalOptions {
    pub tol: f64,
    pub max_terms: u32,
    pub thresholds: Thresholds,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: DEFAULT_TOL,
            max_terms: DEFAULT_MAX_TERMS,
            thresholds: Thresholds::default(),
        }
    }
}

/// Antiderivative value plus which path produced it. `series_detail` is
/// absent on the asymptotic path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AntiderivativeValue {
    pub value: f64,
    pub regime: Regime,
    pub series_detail: Option<SeriesResult>,
}

/// The integrand itself (used by the quadrature oracles and FTC checks).
pub fn integrand(spec: &IntegralSpec, x: f64) -> Result<f64> {
    let IntegralSpec {
        family,
        beta,
        alpha,
        lambda,
    } = *spec;
    if family == Family::Ei && x <= 0.0 {
        return Err(Error::Domain(format!("Ei integrand needs x > 0")));
    }
    if x < 0.0 && !(float::is_integer(beta) && float::is_integer(alpha)) {
        return Err(Error::Domain(format!(
            "x < 0 requires integer beta and alpha"
        )));
    }
    if x == 0.0 && alpha > 0.0 {
        return Err(Error::Domain(format!("integrand singular at x = 0")));
    }
    let w = lambda * float::pow(x, beta);
    let xa = float::pow(x, alpha);
    Ok(match family {
        Family::Si => float::sin(w) / (lambda * xa),
        Family::Ci => float::cos(w) / (lambda * xa),
        Family::Shi => float::sinh(w) / (lambda * xa),
        Family::Chi => float::cosh(w) / (lambda * xa),
        Family::Ei => float::exp(w) / xa,
    })
}

/// G(x) with default options.
pub fn antiderivative(spec: &IntegralSpec, x: f64) -> Result<AntiderivativeValue> {
    antiderivative_with(spec, x, &EvalOptions::default())
}

/// G(x): closed-form antiderivative of the family integrand, normalized so
/// the power-series part vanishes at 0 (log cases carry ln x instead).
pub fn antiderivative_with(
    spec: &IntegralSpec,
    x: f64,
    opts: &EvalOptions,
) -> Result<AntiderivativeValue> {
    let IntegralSpec {
        family,
        beta,
        alpha,
        lambda,
    } = *spec;

    if family == Family::Ei {
        if x <= 0.0 {
            return Err(Error::Domain(format!(
                "Ei family is restricted to x > 0 (got {x})"
            )));
        }
        return ei_series(beta, alpha, lambda, x, opts);
    }

    // Oscillatory / hyperbolic families.
    if x < 0.0 {
        let sign = negative_axis_sign(family, beta, alpha)?;
        let inner = antiderivative_with(spec, -x, opts)?;
        return Ok(AntiderivativeValue {
            value: sign * inner.value,
            ..inner
        });
    }

    // λ-parity: sin/sinh integrands are invariant under λ → −λ, cos/cosh
    // integrands flip sign.
    let (lam, lam_sign) = if lambda < 0.0 {
        (-lambda, if family.is_sine_kind() { 1.0 } else { -1.0 })
    } else {
        (lambda, 1.0)
    };

    if x == 0.0 {
        let log_case = alpha == beta + 1.0
            || (!family.is_sine_kind() && (alpha == 1.0 || alpha == 2.0 * beta + 1.0));
        if log_case || (!family.is_sine_kind() && alpha >= 1.0) {
            return Err(Error::Domain(format!(
                "x = 0 is singular for {} with alpha = {alpha}",
                family.name()
            )));
        }
    }

    let w = lam * float::pow(x, beta);
    let regime = match family {
        Family::Si | Family::Ci => {
            select_regime_with(w, AsymptoticFamily::Oscillatory, &opts.thresholds)
        }
        // Hyperbolic series have positive terms (no cancellation), so they
        // stay on the series path at every magnitude; overflow is reported.
        _ => Regime {
            kind: RegimeKind::Series,
            switch_threshold: opts.thresholds.oscillatory,
        },
    };

    let out = if regime.kind == RegimeKind::Asymptotic {
        if alpha + beta <= 1.0 {
            return Err(Error::Domain(format!(
                "lambda*x^beta = {w} is beyond series precision and no asymptotic \
                 limit exists for alpha + beta <= 1"
            )));
        }
        let value = match family {
            Family::Si => asymptotics::si_large_x(beta, alpha, lam, x)?,
            Family::Ci => asymptotics::ci_large_x(beta, alpha, lam, x)?,
            _ => unreachable!(),
        };
        AntiderivativeValue {
            value,
            regime,
            series_detail: None,
        }
    } else {
        let (value, detail) = match family {
            Family::Si => sine_kind_series(beta, alpha, lam, x, -1.0, opts)?,
            Family::Shi => sine_kind_series(beta, alpha, lam, x, 1.0, opts)?,
            Family::Ci => cosine_kind_series(beta, alpha, lam, x, -1.0, opts)?,
            Family::Chi => cosine_kind_series(beta, alpha, lam, x, 1.0, opts)?,
            Family::Ei => unreachable!(),
        };
        AntiderivativeValue {
            value,
            regime,
            series_detail: Some(detail),
        }
    };

    Ok(AntiderivativeValue {
        value: lam_sign * out.value,
        ..out
    })
}

/// sin/sinh antiderivatives; `arg_sign` is −1 for Si, +1 for Shi.
///
/// ```text
/// α < β+1:  x^s/s · ₁F₂(c; c+1, 3/2; ±z)          s = β−α+1, c = s/(2β)
/// α = β+1:  ln x ± λ²x^{2β}/(12β) · ₂F₃(1,1; 2,2,5/2; ±z)
/// ```
/// with z = λ²x^{2β}/4.
fn sine_kind_series(
    beta: f64,
    alpha: f64,
    lam: f64,
    x: f64,
    arg_sign: f64,
    opts: &EvalOptions,
) -> Result<(f64, SeriesResult)> {
    let x2b = float::pow(x, 2.0 * beta);
    let z = arg_sign * lam * lam * x2b / 4.0;
    if alpha == beta + 1.0 {
        let f = pfq_real(&[1.0, 1.0], &[2.0, 2.0, 2.5], z, opts.tol, opts.max_terms)?;
        let value = float::ln(x) + arg_sign * lam * lam * x2b / (12.0 * beta) * f.value.re;
        Ok((value, f))
    } else {
        let s = beta - alpha + 1.0;
        let c = s / (2.0 * beta);
        let f = pfq_real(&[c], &[c + 1.0, 1.5], z, opts.tol, opts.max_terms)?;
        Ok((float::pow(x, s) / s * f.value.re, f))
    }
}

/// cos/cosh antiderivatives; `arg_sign` is −1 for Ci, +1 for Chi.
///
/// ```text
/// α ∉ {1, 2β+1}: x^{1−α}/(λ(1−α)) ± (λ/2)·x^t/t · ₂F₃(1,d; d+1,3/2,2; ±z)
/// α = 1:         ln x/λ ± λx^{2β}/(4β) · ₂F₃(1,1; 3/2,2,2; ±z)
/// α = 2β+1:      −1/(2λβx^{2β}) ± (λ/2)ln x + λ³x^{2β}/(48β) · ₂F₃(1,1; 2,5/2,3; ±z)
/// ```
/// with t = 2β−α+1, d = t/(2β), z = λ²x^{2β}/4.
fn cosine_kind_series(
    beta: f64,
    alpha: f64,
    lam: f64,
    x: f64,
    arg_sign: f64,
    opts: &EvalOptions,
) -> Result<(f64, SeriesResult)> {
    let x2b = float::pow(x, 2.0 * beta);
    let z = arg_sign * lam * lam * x2b / 4.0;
    if alpha == 1.0 {
        let f = pfq_real(&[1.0, 1.0], &[1.5, 2.0, 2.0], z, opts.tol, opts.max_terms)?;
        let value = float::ln(x) / lam + arg_sign * lam * x2b / (4.0 * beta) * f.value.re;
        Ok((value, f))
    } else if alpha == 2.0 * beta + 1.0 {
        let f = pfq_real(&[1.0, 1.0], &[2.0, 2.5, 3.0], z, opts.tol, opts.max_terms)?;
        let value = -1.0 / (2.0 * lam * beta * x2b) + arg_sign * lam / 2.0 * float::ln(x)
            + lam * lam * lam * x2b / (48.0 * beta) * f.value.re;
        Ok((value, f))
    } else {
        let t = 2.0 * beta - alpha + 1.0;
        let d = t / (2.0 * beta);
        let f = pfq_real(&[1.0, d], &[d + 1.0, 1.5, 2.0], z, opts.tol, opts.max_terms)?;
        let value = float::pow(x, 1.0 - alpha) / (lam * (1.0 - alpha))
            + arg_sign * lam / 2.0 * float::pow(x, t) / t * f.value.re;
        Ok((value, f))
    }
}

/// Exponential-family antiderivatives (integrand e^{λx^β}/x^α, x > 0):
///
/// ```text
/// α ∉ {1, β+1}: x^{1−α}/(1−α) + λx^s/s · ₂F₂(1,e; 2,e+1; w)   e = s/β, w = λx^β
/// α = 1:        ln x + (1/β)·w·₂F₂(1,1;2,2;w)
/// α = β+1:      −1/(βx^β) + λ ln x + λ²x^β/(2β) · ₂F₂(1,1; 2,3; w)
/// ```
fn ei_series(
    beta: f64,
    alpha: f64,
    lambda: f64,
    x: f64,
    opts: &EvalOptions,
) -> Result<AntiderivativeValue> {
    let w = lambda * float::pow(x, beta);
    let regime = Regime {
        kind: RegimeKind::Series,
        switch_threshold: opts.thresholds.exponential,
    };
    if alpha == 1.0 {
        // exp_kernel has a cancellation-safe branch for deep negative w.
        let f = series::exp_kernel(w, opts.tol, opts.max_terms)?;
        return Ok(AntiderivativeValue {
            value: float::ln(x) + f.value.re / beta,
            regime,
            series_detail: Some(f),
        });
    }
    if w < -25.0 {
        return Err(Error::Domain(format!(
            "lambda*x^beta = {w} < -25: the alternating series for alpha != 1 \
             loses all precision"
        )));
    }
    let (value, f) = if alpha == beta + 1.0 {
        let f = pfq_real(&[1.0, 1.0], &[2.0, 3.0], w, opts.tol, opts.max_terms)?;
        let xb = float::pow(x, beta);
        (
            -1.0 / (beta * xb) + lambda * float::ln(x) + lambda * lambda * xb / (2.0 * beta) * f.value.re,
            f,
        )
    } else {
        let s = beta - alpha + 1.0;
        let e = s / beta;
        let f = pfq_real(&[1.0, e], &[2.0, e + 1.0], w, opts.tol, opts.max_terms)?;
        (
            float::pow(x, 1.0 - alpha) / (1.0 - alpha) + lambda * float::pow(x, s) / s * f.value.re,
            f,
        )
    };
    Ok(AntiderivativeValue {
        value,
        regime,
        series_detail: Some(f),
    })
}

/// Sign relating G(−x) to G(x) for integer exponents: −1 when the
/// integrand is even (G odd), +1 when odd (G even).
fn negative_axis_sign(family: Family, beta: f64, alpha: f64) -> Result<f64> {
    if !(float::is_integer(beta) && float::is_integer(alpha)) {
        return Err(Error::Domain(format!(
            "x < 0 requires integer beta and alpha (got beta={beta}, alpha={alpha})"
        )));
    }
    let even = if family.is_sine_kind() {
        asymptotics::sin_kernel_even(beta as i64, alpha as i64)
    } else {
        asymptotics::cos_kernel_even(alpha as i64)
    };
    Ok(if even { -1.0 } else { 1.0 })
}

/// Definite integral over [a, b] as G(b) − G(a), with default options.
pub fn definite(spec: &IntegralSpec, a: Endpoint, b: Endpoint) -> Result<f64> {
    definite_with(spec, a, b, &EvalOptions::default())
}

/// Definite integral over [a, b]. Infinite endpoints use the asymptotic
/// limits; intervals crossing x = 0 are rejected unless the integrand side
/// is integrable there (Si/Shi with β−α+1 > 0, Ci/Chi with α < 1).
pub fn definite_with(
    spec: &IntegralSpec,
    a: Endpoint,
    b: Endpoint,
    opts: &EvalOptions,
) -> Result<f64> {
    if a.key() == b.key() {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if a.key() <= b.key() {
        (a, b, 1.0)
    } else {
        (b, a, -1.0)
    };

    if lo.key() < 0.0 && hi.key() > 0.0 {
        let allowed = match spec.family {
            Family::Si | Family::Shi => spec.beta - spec.alpha + 1.0 > 0.0,
            Family::Ci | Family::Chi => spec.alpha < 1.0,
            Family::Ei => false,
        };
        if !allowed {
            return Err(Error::SingularityCrossed(format!(
                "interval crosses the non-integrable singularity at x = 0 \
                 ({} with alpha = {})",
                spec.family.name(),
                spec.alpha
            )));
        }
    }

    let g_hi = endpoint_value(spec, hi, opts)?;
    let g_lo = endpoint_value(spec, lo, opts)?;
    Ok(sign * (g_hi - g_lo))
}

fn endpoint_value(spec: &IntegralSpec, e: Endpoint, opts: &EvalOptions) -> Result<f64> {
    match e {
        Endpoint::Finite(v) => Ok(antiderivative_with(spec, v, opts)?.value),
        Endpoint::PosInfinity => limit_upper(spec),
        Endpoint::NegInfinity => match spec.family {
            Family::Ei => Err(Error::Domain(format!("Ei family is restricted to x > 0"))),
            Family::Shi | Family::Chi => Err(Error::Divergent(format!(
                "{} grows without bound as x -> -inf",
                spec.family.name()
            ))),
            Family::Si | Family::Ci => {
                let sign = negative_axis_sign(spec.family, spec.beta, spec.alpha)?;
                Ok(sign * limit_upper(spec)?)
            }
        },
    }
}

fn limit_upper(spec: &IntegralSpec) -> Result<f64> {
    let lam = spec.lambda.abs();
    let lam_sign = if spec.lambda < 0.0 && !spec.family.is_sine_kind() {
        -1.0
    } else {
        1.0
    };
    let limit = match spec.family {
        Family::Si => asymptotics::si_limit(spec.beta, spec.alpha, lam)?,
        Family::Ci => asymptotics::ci_limit(spec.beta, spec.alpha, lam)?,
        Family::Shi | Family::Chi | Family::Ei => {
            return Err(Error::Divergent(format!(
                "{} grows without bound as x -> +inf",
                spec.family.name()
            )))
        }
    };
    Ok(lam_sign * limit)
}

/// Linearized-power integrals: ∫ sinⁿ(λx^β)/(λx^α) dx and the cosine
/// analogue, expanded by exact product-to-sum linearization into a
/// constant plus sin/cos(jλx^β) terms and evaluated term by term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    SinPow,
    CosPow,
}

pub fn power_reduced_definite(
    n: u32,
    kind: PowerKind,
    beta: f64,
    alpha: f64,
    lambda: f64,
    a: Endpoint,
    b: Endpoint,
) -> Result<f64> {
    power_reduced_definite_with(n, kind, beta, alpha, lambda, a, b, &EvalOptions::default())
}

pub fn power_reduced_definite_with(
    n: u32,
    kind: PowerKind,
    beta: f64,
    alpha: f64,
    lambda: f64,
    a: Endpoint,
    b: Endpoint,
    opts: &EvalOptions,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain(format!("power must be >= 1")));
    }
    if n > 60 {
        return Err(Error::Resource(format!(
            "power {n} too large for exact linearization coefficients"
        )));
    }
    let (constant, terms) = linearize(n, kind);
    let mut total = 0.0;
    for &(j, coef, is_sin) in &terms {
        let family = if is_sin { Family::Si } else { Family::Ci };
        let spec = IntegralSpec::new(family, beta, alpha, j as f64 * lambda)?;
        // ∫ trig(jλx^β)/(λx^α) dx = j · ∫ trig(jλx^β)/((jλ)x^α) dx
        total += coef * j as f64 * definite_with(&spec, a, b, opts)?;
    }
    if constant != 0.0 {
        total += constant / lambda * (power_term(alpha, b)? - power_term(alpha, a)?);
    }
    Ok(total)
}

/// Endpoint value of ∫ x^{−α} dx (the linearization's constant term).
fn power_term(alpha: f64, e: Endpoint) -> Result<f64> {
    match e {
        Endpoint::Finite(v) => {
            if v < 0.0 && !float::is_integer(alpha) {
                return Err(Error::Domain(format!(
                    "x < 0 requires integer alpha (got {alpha})"
                )));
            }
            if alpha == 1.0 {
                if v == 0.0 {
                    return Err(Error::Domain(format!("ln|x| singular at x = 0")));
                }
                Ok(float::ln(v.abs()))
            } else {
                if v == 0.0 && alpha > 1.0 {
                    return Err(Error::Domain(format!("x^(1-alpha) singular at x = 0")));
                }
                Ok(float::pow(v, 1.0 - alpha) / (1.0 - alpha))
            }
        }
        Endpoint::PosInfinity | Endpoint::NegInfinity => {
            if alpha > 1.0 {
                Ok(0.0)
            } else {
                Err(Error::Divergent(format!(
                    "constant linearization term diverges at infinity for alpha <= 1"
                )))
            }
        }
    }
}

/// Exact product-to-sum coefficients: returns the constant term and the
/// (multiple, coefficient, is_sin) triples with
/// trigⁿ(u) = constant + Σ coefⱼ · trig(j·u).
fn linearize(n: u32, kind: PowerKind) -> (f64, Vec<(u32, f64, bool)>) {
    let scale = float::pow(2.0, 1.0 - n as f64);
    let half = scale / 2.0;
    let mut terms = Vec::new();
    let mut constant = 0.0;
    match kind {
        PowerKind::CosPow => {
            for k in 0..=(n - 1) / 2 {
                terms.push((n - 2 * k, scale * binomial(n, k), false));
            }
            if n % 2 == 0 {
                constant = half * binomial(n, n / 2);
            }
        }
        PowerKind::SinPow => {
            if n % 2 == 1 {
                let m = (n - 1) / 2;
                for k in 0..=m {
                    let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
                    terms.push((n - 2 * k, sign * scale * binomial(n, k), true));
                }
            } else {
                let m = n / 2;
                constant = half * binomial(n, m);
                for k in 0..m {
                    let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
                    terms.push((n - 2 * k, sign * scale * binomial(n, k), false));
                }
            }
        }
    }
    (constant, terms)
}

/// Binomial coefficient, exact in integer arithmetic for the n ≤ 60 range.
fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

/// Which reciprocal-argument integrand: ∫ sin(λ/x^μ) dx or ∫ cos(λ/x^μ) dx.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecipKind {
    SinRecip,
    CosRecip,
}

/// Antiderivative of sin(λ/x^μ) or cos(λ/x^μ) for x > 0, μ ≥ 1, via the
/// substitution u = 1/x: H(x) = −λ·G(1/x) with G the (β=μ, α=2) sine or
/// cosine antiderivative. μ = 1 lands on the sine family's log case
/// automatically (α = 2 = μ+1).
pub fn reciprocal_argument_antiderivative(
    kind: RecipKind,
    mu: f64,
    lambda: f64,
    x: f64,
) -> Result<f64> {
    reciprocal_argument_antiderivative_with(kind, mu, lambda, x, &EvalOptions::default())
}

pub fn reciprocal_argument_antiderivative_with(
    kind: RecipKind,
    mu: f64,
    lambda: f64,
    x: f64,
    opts: &EvalOptions,
) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!(
            "reciprocal-argument integrals need x > 0 (got {x})"
        )));
    }
    if mu < 1.0 {
        return Err(Error::Domain(format!("mu must be >= 1 (got {mu})")));
    }
    let family = match kind {
        RecipKind::SinRecip => Family::Si,
        RecipKind::CosRecip => Family::Ci,
    };
    let inner = IntegralSpec::new(family, mu, 2.0, lambda)?;
    Ok(-lambda * antiderivative_with(&inner, 1.0 / x, opts)?.value)
}

/// Antiderivative of e^{λe^{βx}}: x + (λe^{βx}/β)·₂F₂(1,1;2,2;λe^{βx}).
pub fn exp_exp_antiderivative(beta: f64, lambda: f64, x: f64) -> Result<f64> {
    exp_exp_antiderivative_with(beta, lambda, x, &EvalOptions::default())
}

pub fn exp_exp_antiderivative_with(
    beta: f64,
    lambda: f64,
    x: f64,
    opts: &EvalOptions,
) -> Result<f64> {
    if beta < 1.0 {
        return Err(Error::Scope(format!("beta must be >= 1 (got {beta})")));
    }
    let inner = float::exp(beta * x);
    if inner.is_infinite() {
        return Err(Error::Overflow { sign: 1.0 });
    }
    let u = lambda * inner;
    Ok(x + series::exp_kernel(u, opts.tol, opts.max_terms)?.value.re / beta)
}

/// Antiderivative of ln(ln x) for x > 1:
/// x·ln(ln x) − ln(ln x) − ln x·₂F₂(1,1;2,2;ln x).
pub fn log_log_antiderivative(x: f64) -> Result<f64> {
    log_log_antiderivative_with(x, &EvalOptions::default())
}

pub fn log_log_antiderivative_with(x: f64, opts: &EvalOptions) -> Result<f64> {
    if x <= 1.0 {
        return Err(Error::Domain(format!(
            "ln(ln x) antiderivative needs x > 1 (got {x}; it diverges to -inf as x -> 1+)"
        )));
    }
    let lx = float::ln(x);
    let kernel = series::exp_kernel(lx, opts.tol, opts.max_terms)?.value.re;
    Ok(x * float::ln(lx) - float::ln(lx) - kernel)
}

/// Logarithmic integral ∫_μ^x dt/ln t for x, μ > 1:
///
/// ```text
/// ln(ln x/ln μ) + ln x·₂F₂(1,1;2,2;ln x) − ln μ·₂F₂(1,1;2,2;ln μ)
/// ```
///
/// switching to the leading-order large-x form once ln x reaches the
/// exponential regime threshold.
pub fn li(mu: f64, x: f64) -> Result<f64> {
    li_with(mu, x, &EvalOptions::default())
}

pub fn li_with(mu: f64, x: f64, opts: &EvalOptions) -> Result<f64> {
    if mu <= 1.0 {
        return Err(Error::Domain(format!("li requires mu > 1 (got {mu})")));
    }
    if x <= 1.0 {
        return Err(Error::Domain(format!("li requires x > 1 (got {x})")));
    }
    let ln_x = float::ln(x);
    let ln_mu = float::ln(mu);
    let regime = select_regime_with(ln_x, AsymptoticFamily::Exponential, &opts.thresholds);
    if regime.kind == RegimeKind::Asymptotic && x >= 100.0 * mu {
        return asymptotics::li_large_x(mu, x);
    }
    let top = series::exp_kernel(ln_x, opts.tol, opts.max_terms)?.value.re;
    let bottom = series::exp_kernel(ln_mu, opts.tol, opts.max_terms)?.value.re;
    Ok(float::ln(ln_x / ln_mu) + top - bottom)
}

/// Rayleigh-fading channel capacity E[log₂(1+P|H|²)] in bits per channel
/// use: (e^{1/P}/ln 2)·(ln P − γ + (1/P)·₂F₂(1,1;2,2;−1/P)).
pub fn fading_capacity(p: f64) -> Result<f64> {
    fading_capacity_with(p, &EvalOptions::default())
}

pub fn fading_capacity_with(p: f64, opts: &EvalOptions) -> Result<f64> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("average power must be > 0 (got {p})")));
    }
    // (1/P)·₂F₂(1,1;2,2;−1/P) = −exp_kernel(−1/P)
    let kernel = series::exp_kernel(-1.0 / p, opts.tol, opts.max_terms)?.value.re;
    Ok(float::exp(1.0 / p) / LN_2 * (float::ln(p) - EULER_MASCHERONI - kernel))
}
