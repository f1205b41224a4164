//! Evaluation of the non-elementary integrals
//!
//! ```text
//! Si[β,α] = ∫ sin(λx^β)/(λx^α) dx        β ≥ 1, α ≤ β+1
//! Ci[β,α] = ∫ cos(λx^β)/(λx^α) dx        β ≥ 1, α ≤ 2β+1
//! Shi/Chi = hyperbolic counterparts
//! Ei[β,α] = ∫ e^{λx^β}/x^α dx            β ≥ 1, α ≤ β+1
//! Li(μ,x) = ∫_μ^x dt/ln t                μ > 1
//! ```
//!
//! through closed-form antiderivatives built on the generalized
//! hypergeometric series ₁F₂, ₂F₂ and ₂F₃, so that definite integrals —
//! including over infinite intervals — reduce to endpoint differences of
//! those antiderivatives. Large arguments switch to leading-order
//! asymptotic forms; [`oracles`] provides the independent ground-truth
//! machinery (adaptive quadrature, oscillatory panel summation, a prime
//! sieve) used to validate everything else.
//!
//! The crate is `no_std` (with `alloc`); all float math goes through
//! `libm`, which also keeps results bit-reproducible across platforms.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod asymptotics;
pub mod complex;
pub mod error;
pub mod families;
pub mod identities;
pub mod oracles;
pub mod series;
pub mod special;

mod float;

pub use complex::Complex;
pub use error::{Error, Result};
pub use families::{
    antiderivative, definite, fading_capacity, li, AntiderivativeValue, Endpoint, EvalOptions,
    Family, IntegralSpec,
};
pub use series::{pfq, HyperParams, SeriesResult};
pub use special::{gamma, pochhammer};
