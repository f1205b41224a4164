//! Machine-checkable reconstructions of the one-sided hypergeometric
//! kernels from complex-argument ₂F₂ values.
//!
//! With s = β−α+1, t = 2β−α+1, c = s/(2β), d = t/(2β), e = s/β,
//! w = λx^β and z = λ²x^{2β}/4:
//!
//! ```text
//! ₁F₂(c; c+1, 3/2; −z)        = ½[F(iw) + F(−iw)]
//! ₁F₂(c; c+1, 3/2; +z)        = ½[F(w)  + F(−w)]
//! ₂F₃(1,d; d+1, 3/2, 2; −z)   = (t/s)·[F(iw) − F(−iw)]/(iw)
//! ₂F₃(1,d; d+1, 3/2, 2; +z)   = (t/s)·[F(w)  − F(−w)]/w
//! ```
//!
//! where F(·) = ₂F₂(1, e; 2, e+1; ·). Both sides are evaluated
//! independently by the series engine and the residual |lhs − rhs| is
//! returned, so the checks double as a cross-validation of the engine on
//! complex arguments.

use alloc::format;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::float;
use crate::series::{pfq, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL};

/// Both sides of an identity and their absolute difference.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityResidual {
    pub lhs: Complex,
    pub rhs: Complex,
    pub abs_residual: f64,
}

impl IdentityResidual {
    fn new(lhs: Complex, rhs: Complex) -> Self {
        IdentityResidual {
            lhs,
            rhs,
            abs_residual: (lhs - rhs).abs(),
        }
    }
}

struct Vars {
    s: f64,
    t: f64,
    c: f64,
    d: f64,
    e: f64,
    w: f64,
    z: f64,
}

fn vars(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<Vars> {
    if beta < 1.0 {
        return Err(Error::Scope(format!("beta must be >= 1 (got {beta})")));
    }
    if x < 0.0 && !float::is_integer(beta) {
        return Err(Error::Domain(format!("x < 0 requires integer beta")));
    }
    let s = beta - alpha + 1.0;
    let t = 2.0 * beta - alpha + 1.0;
    if s == 0.0 || t == 0.0 {
        return Err(Error::Domain(format!(
            "identity parameters degenerate (beta-alpha+1 = {s}, 2*beta-alpha+1 = {t})"
        )));
    }
    let w = lambda * float::pow(x, beta);
    Ok(Vars {
        s,
        t,
        c: s / (2.0 * beta),
        d: t / (2.0 * beta),
        e: s / beta,
        w,
        z: w * w / 4.0,
    })
}

fn f22(e: f64, arg: Complex, tol: f64, max_terms: u32) -> Result<Complex> {
    Ok(pfq(&[1.0, e], &[2.0, e + 1.0], arg, tol, max_terms)?.value)
}

fn f22_pair(e: f64, arg: Complex, tol: f64, max_terms: u32) -> Result<(Complex, Complex)> {
    Ok((
        f22(e, arg, tol, max_terms)?,
        f22(e, -arg, tol, max_terms)?,
    ))
}

fn one_f2(c: f64, z: f64, tol: f64, max_terms: u32) -> Result<SeriesResult> {
    pfq(
        &[c],
        &[c + 1.0, 1.5],
        Complex::from_real(z),
        tol,
        max_terms,
    )
}

fn two_f3(d: f64, z: f64, tol: f64, max_terms: u32) -> Result<SeriesResult> {
    pfq(
        &[1.0, d],
        &[d + 1.0, 1.5, 2.0],
        Complex::from_real(z),
        tol,
        max_terms,
    )
}

/// ₁F₂ at −z versus the average of ₂F₂ at ±iw (sine-kernel identity).
pub fn check_trig_1f2(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<IdentityResidual> {
    check_trig_1f2_with(beta, alpha, lambda, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

pub fn check_trig_1f2_with(
    beta: f64,
    alpha: f64,
    lambda: f64,
    x: f64,
    tol: f64,
    max_terms: u32,
) -> Result<IdentityResidual> {
    let v = vars(beta, alpha, lambda, x)?;
    let lhs = one_f2(v.c, -v.z, tol, max_terms)?.value;
    let (p, m) = f22_pair(v.e, Complex::new(0.0, v.w), tol, max_terms)?;
    let rhs = (p + m).scale(0.5);
    Ok(IdentityResidual::new(lhs, rhs))
}

/// ₁F₂ at +z versus the average of ₂F₂ at ±w (hyperbolic counterpart).
pub fn check_hyp_1f2(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<IdentityResidual> {
    check_hyp_1f2_with(beta, alpha, lambda, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

pub fn check_hyp_1f2_with(
    beta: f64,
    alpha: f64,
    lambda: f64,
    x: f64,
    tol: f64,
    max_terms: u32,
) -> Result<IdentityResidual> {
    let v = vars(beta, alpha, lambda, x)?;
    let lhs = one_f2(v.c, v.z, tol, max_terms)?.value;
    let (p, m) = f22_pair(v.e, Complex::from_real(v.w), tol, max_terms)?;
    let rhs = (p + m).scale(0.5);
    Ok(IdentityResidual::new(lhs, rhs))
}

/// ₂F₃ at −z versus the scaled difference of ₂F₂ at ±iw.
pub fn check_trig_2f3(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<IdentityResidual> {
    check_trig_2f3_with(beta, alpha, lambda, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

pub fn check_trig_2f3_with(
    beta: f64,
    alpha: f64,
    lambda: f64,
    x: f64,
    tol: f64,
    max_terms: u32,
) -> Result<IdentityResidual> {
    let v = vars(beta, alpha, lambda, x)?;
    let lhs = two_f3(v.d, -v.z, tol, max_terms)?.value;
    let rhs = if v.w == 0.0 {
        // Limit w → 0 of the right side is exactly 1.
        Complex::ONE
    } else {
        let iw = Complex::new(0.0, v.w);
        let (p, m) = f22_pair(v.e, iw, tol, max_terms)?;
        ((p - m) / iw).scale(v.t / v.s)
    };
    Ok(IdentityResidual::new(lhs, rhs))
}

/// ₂F₃ at +z versus the scaled difference of ₂F₂ at ±w.
pub fn check_hyp_2f3(beta: f64, alpha: f64, lambda: f64, x: f64) -> Result<IdentityResidual> {
    check_hyp_2f3_with(beta, alpha, lambda, x, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

pub fn check_hyp_2f3_with(
    beta: f64,
    alpha: f64,
    lambda: f64,
    x: f64,
    tol: f64,
    max_terms: u32,
) -> Result<IdentityResidual> {
    let v = vars(beta, alpha, lambda, x)?;
    let lhs = two_f3(v.d, v.z, tol, max_terms)?.value;
    let rhs = if v.w == 0.0 {
        Complex::ONE
    } else {
        let (p, m) = f22_pair(v.e, Complex::from_real(v.w), tol, max_terms)?;
        ((p - m) / v.w).scale(v.t / v.s)
    };
    Ok(IdentityResidual::new(lhs, rhs))
}
