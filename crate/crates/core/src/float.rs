//! Thin shim over `libm` for the transcendentals `core` does not provide.

pub(crate) use libm::{cos, cosh, exp, hypot, log as ln, pow, sin, sinh, trunc};

/// True when `x` is finite and has no fractional part.
pub(crate) fn is_integer(x: f64) -> bool {
    x.is_finite() && trunc(x) == x
}

/// True when `x` is zero or a negative integer (a gamma pole).
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && is_integer(x)
}
