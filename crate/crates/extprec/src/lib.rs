//! Extended-precision scalar arithmetic for the lacunary-series evaluators.
//!
//! The quantity everything downstream cares about is `n·log|c_n|` with
//! `|c_n| = 1 − O(1/n)` at `n` up to `2^40 ≈ 10^12`. Keeping that product
//! accurate to a comfortable margin under `10^-6` needs roughly 28
//! significant decimal digits in the scalar layer — double `f64` precision.
//! This crate supplies exactly that: double-double reals ([`ExtReal`]),
//! complexes over them ([`ExtComplex`]), the handful of transcendental
//! kernels the series need (`exp`, `log1p`, `sin`/`cos` at π-rational
//! angles), and 30-digit decimal I/O.
//!
//! Design constraints that shaped the API:
//!
//! * **Determinism.** Every operation is a fixed IEEE-754 instruction
//!   sequence: same inputs, bit-identical outputs on a given platform. No
//!   tables built from environment state, no fast-math.
//! * **Cancellation lives in the integers.** Angle reduction for
//!   `cos(π r/n)` folds the integer pair `(r, n)` exactly before any
//!   floating multiply ([`sincos_pi_residue`]); `1 − cos` is always
//!   produced by a half-angle identity, never by subtraction near 1; the
//!   deviation `1 − c_n` feeds [`log1p_ext`] directly so the `O(1/n)`
//!   signal is never rounded into a neighborhood of 1.
//! * **No generality.** Range and function inventory are what the c_n
//!   pipeline uses, nothing more; see the individual modules for the
//!   specific caveats (e.g. precision taper of `exp_ext` below −655).

mod complex;
mod decimal;
mod exp;
mod real;
mod trig;

pub use complex::ExtComplex;
pub use decimal::{parse_decimal, to_decimal};
pub use exp::{exp_ext, log1p_ext};
pub use real::ExtReal;
pub use trig::{cospi_frac, one_minus_cos, sincos_pi_residue, sincos_small, SinCos, SinCosOmc};

/// Errors surfaced by the fallible operations.
///
/// Plumbing arithmetic (`+`, `−`, `×`, `÷`, `sqrt`) does not return these:
/// its preconditions (finite inputs, nonzero divisors, nonnegative radicands)
/// are programming invariants in this workspace and are debug-asserted
/// instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    /// Argument outside the mathematical domain (log of a nonpositive
    /// number, division by exact zero).
    #[error("argument outside the function's domain")]
    Domain,
    /// Result not representable (exp overflow/underflow guard at |x| > 700).
    #[error("result outside the representable range")]
    Range,
    /// Structurally invalid argument (unsupported q, excessive descent
    /// depth, malformed decimal literal, angle outside the reduced range).
    #[error("invalid argument: {0}")]
    Argument(&'static str),
}

/// π as an [`ExtReal`] (≥ 30 correct digits).
///
/// A function rather than a bare constant because the callers treat it as
/// one of the transcendental kernels; it always returns the same bits, so
/// `2·pi_ext() − pi_ext()` reproduces `pi_ext()` exactly.
#[inline]
pub fn pi_ext() -> ExtReal {
    ExtReal::PI
}
