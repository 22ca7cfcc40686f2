//! Scalar engine for the Trotter-projection counterexamples.
//!
//! The objects of interest are averaged exponentials
//!
//! ```text
//! c_n = Σ_{k≥1} 2^{-k} e^{iπ·2^k/n}          (Hilbert-space model)
//! c_n = 16/17 + (1/17) Σ_{k≥1} 2^{-k} cos(2^kπ/n)   (L_p model)
//! ```
//!
//! and the question everything reduces to is whether `c_n^n` converges as
//! n → ∞. It does not: along n = 2^m the powers stay above one explicit
//! constant, along n = 3·2^m they fall below a smaller one, and this crate
//! computes both subsequences precisely enough to certify the gap.
//!
//! The numerical obstacles are concentrated in three places, each with a
//! dedicated mechanism:
//!
//! * the infinite series is made *exactly* finite by the eventual
//!   periodicity of 2^k mod 2n ([`cycle_of_two_mod`]);
//! * the deviation 1 − c_n ≈ C/n is accumulated directly from
//!   cancellation-free pieces (2·sin², exact integer angle folding), never
//!   recovered by subtracting two near-unit quantities ([`CnSample`]);
//! * n·log|c_n| is evaluated through `log1p` of that deviation, so the
//!   certificate arithmetic stays accurate at n = 2^40 and beyond
//!   ([`certify_divergence`]).

mod bounds;
mod certify;
mod cycle;
mod evaluate;
mod sample;

pub use bounds::{
    bound_constants, envelope_check_3pow2, envelope_check_pow2, BoundConstants, EnvelopeCheck,
};
pub use certify::{
    certify_divergence, subsequence_scan, BoundCheck, BoundCheckKind, DivergenceCertificate,
    Model, Subsequence, Verdict,
};
pub use cycle::{cycle_of_two_mod, CycleDecomposition, MAX_N, MAX_STORED_CYCLE};
pub use evaluate::{cn_hilbert, cn_hilbert_subseq_3pow2, cn_hilbert_subseq_pow2, cn_lp};
pub use sample::CnSample;

/// Errors from the scalar engine. Everything user-reachable is an argument
/// problem; internal math errors (domain/range in the extended-precision
/// layer) cannot occur for validated arguments and would indicate a bug,
/// but are propagated rather than unwrapped where the type system sees
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("invalid argument: {0}")]
    Argument(&'static str),
    #[error("extended-precision arithmetic error: {0}")]
    Math(#[from] extprec::MathError),
}
