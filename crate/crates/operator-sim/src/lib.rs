//! Direct simulation of the alternating scheme `[S(t/n) P]^n` — a
//! strongly continuous semigroup step composed with a rank-one orthogonal
//! projection — on two concrete carriers:
//!
//! * a dyadic grid over `[0,1]` carrying the unitary multiplication
//!   semigroup `f ↦ e^{ith}f` with the lacunary step symbol
//!   `h = Σ_k χ_{(2^{-k}, 2^{-k+1}]}·2^kπ`, projected onto the constant
//!   function ([`grid`]);
//! * a sparse trigonometric-mode set over `[0,2π]` carrying the
//!   translation semigroup `f(x) ↦ f(x + 2πt)`, projected onto a fixed
//!   positive unit function with lacunary cosine spectrum ([`fourier`]).
//!
//! Whether the alternation converges as n → ∞ is exactly the question the
//! scalar analysis in `lacunary-core` settles; this crate supplies the
//! operator-level counterpart. Everything here runs in ordinary machine
//! precision — carriers hold `Complex64` samples, and tolerances are of
//! order 10⁻¹²–10⁻¹³ — because the delicate part of the problem (powers
//! `c_n^n` with `c_n` within 10/n of the unit circle) is delegated to
//! extended precision exactly where it appears: the scalar power inside
//! [`rank_one_reduction`] and the positive control's scalar sequence.
//!
//! The simulator is a controlled-error oracle, not an exact one. The grid
//! truncates the step symbol at its own resolution (residual cell gets
//! h = 0), shifting the alternation's scalar by at most `2·2^{-D}`; the
//! mode set truncates the cosine spectrum with an exactly known Parseval
//! tail. Cross-validation against the exact closed forms, within those
//! documented bounds, is what the test suites and the CLI's `simulate`
//! subcommand exercise.

mod carrier;
mod control;
mod fourier;
mod grid;
mod probe;
mod projection;
mod sum;

pub use carrier::{Carrier, Semigroup};
pub use control::{control_axis, positive_control};
pub use fourier::{build_g, FourierFunction, HeatSemigroup, TranslationSemigroup};
pub use grid::{build_h, GridFunction, MultiplicationSemigroup};
pub use probe::{
    convergence_probe, CauchyRow, ConvergenceVerdict, SubsequenceWitness, VerdictKind,
};
pub use projection::{rank_one_reduction, trotter_iterate, RankOneProjection};

/// Errors surfaced by carrier construction and the alternation drivers.
#[derive(Debug, thiserror::Error)]
pub enum SimError {
    /// A parameter violated its documented range or shape.
    #[error("invalid argument: {0}")]
    Argument(&'static str),
    /// Extended-precision arithmetic failed on the scalar path.
    #[error("extended-precision arithmetic error: {0}")]
    Math(#[from] extprec::MathError),
}
