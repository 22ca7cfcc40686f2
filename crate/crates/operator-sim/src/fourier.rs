//! Sparse trigonometric-mode functions on `[0,2π]` and the two diagonal
//! semigroups acting on them: translation (the divergence example) and
//! heat damping (the convergent control).

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::carrier::{Carrier, Semigroup};
use crate::sum::{Compensated, CompensatedComplex};
use crate::SimError;

/// Fewest retained cosine modes for the projection axis.
pub const MIN_MODES: u32 = 8;
/// Most retained cosine modes; frequencies reach 2^50, and the Parseval
/// tail 2^{-k_max}/34 is far below every tolerance in play.
pub const MAX_MODES: u32 = 50;

/// A finite combination `c₀ + Σ_ω a_ω cos(ωx) + b_ω sin(ωx)` stored
/// sparsely by frequency.
///
/// Only the frequencies actually present are stored (the relevant spectra
/// are lacunary — {2^k} — so dense layouts would be astronomically
/// wasteful). Coefficients are complex so the carrier stays closed under
/// projection onto a complex axis; building blocks with real samples
/// simply have zero imaginary parts. Ordered maps keep every traversal,
/// and hence every floating-point sum, in one deterministic order.
#[derive(Clone, Debug, Default)]
pub struct FourierFunction {
    constant_term: Complex64,
    cos_coeffs: BTreeMap<u64, Complex64>,
    sin_coeffs: BTreeMap<u64, Complex64>,
}

impl FourierFunction {
    /// The constant function `c`.
    pub fn constant(c: Complex64) -> FourierFunction {
        FourierFunction {
            constant_term: c,
            ..FourierFunction::default()
        }
    }

    /// Assemble from explicit mode lists; a zero frequency is rejected
    /// (constant mass belongs in `constant_term`, where it carries the
    /// 2π rather than π Parseval weight).
    pub fn from_modes(
        constant_term: Complex64,
        cos_modes: impl IntoIterator<Item = (u64, Complex64)>,
        sin_modes: impl IntoIterator<Item = (u64, Complex64)>,
    ) -> Result<FourierFunction, SimError> {
        let cos_coeffs: BTreeMap<u64, Complex64> = cos_modes.into_iter().collect();
        let sin_coeffs: BTreeMap<u64, Complex64> = sin_modes.into_iter().collect();
        if cos_coeffs.contains_key(&0) || sin_coeffs.contains_key(&0) {
            return Err(SimError::Argument(
                "frequency 0 must be passed as the constant term",
            ));
        }
        Ok(FourierFunction {
            constant_term,
            cos_coeffs,
            sin_coeffs,
        })
    }

    pub fn constant_term(&self) -> Complex64 {
        self.constant_term
    }

    pub fn cos_coeffs(&self) -> &BTreeMap<u64, Complex64> {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &BTreeMap<u64, Complex64> {
        &self.sin_coeffs
    }

    /// Every frequency present in either mode map, ascending.
    fn frequencies(a: &FourierFunction, b: &FourierFunction) -> Vec<u64> {
        let mut freqs: Vec<u64> = a
            .cos_coeffs
            .keys()
            .chain(a.sin_coeffs.keys())
            .chain(b.cos_coeffs.keys())
            .chain(b.sin_coeffs.keys())
            .copied()
            .collect();
        freqs.sort_unstable();
        freqs.dedup();
        freqs
    }

    fn coeff(map: &BTreeMap<u64, Complex64>, freq: u64) -> Complex64 {
        map.get(&freq).copied().unwrap_or_default()
    }

    /// Point evaluation, for sampling-based checks (positivity of the
    /// projection axis). Not used on any hot path.
    pub fn evaluate(&self, x: f64) -> Complex64 {
        let mut acc = CompensatedComplex::default();
        acc.add(self.constant_term);
        for (&freq, &a) in &self.cos_coeffs {
            acc.add(a * (freq as f64 * x).cos());
        }
        for (&freq, &b) in &self.sin_coeffs {
            acc.add(b * (freq as f64 * x).sin());
        }
        acc.value()
    }
}

impl Carrier for FourierFunction {
    /// Weighted coefficient sum: constants pair with weight 2π, each
    /// cos/sin mode with weight π (the orthogonality weights of the
    /// trigonometric system on `[0,2π]`).
    fn inner_product(&self, other: &FourierFunction) -> Result<Complex64, SimError> {
        let mut acc = CompensatedComplex::default();
        acc.add(self.constant_term * other.constant_term.conj() * std::f64::consts::TAU);
        for freq in FourierFunction::frequencies(self, other) {
            let cc = FourierFunction::coeff(&self.cos_coeffs, freq)
                * FourierFunction::coeff(&other.cos_coeffs, freq).conj();
            let ss = FourierFunction::coeff(&self.sin_coeffs, freq)
                * FourierFunction::coeff(&other.sin_coeffs, freq).conj();
            acc.add((cc + ss) * std::f64::consts::PI);
        }
        Ok(acc.value())
    }

    fn norm(&self) -> f64 {
        let mut acc = Compensated::default();
        acc.add(self.constant_term.norm_sqr() * std::f64::consts::TAU);
        for v in self.cos_coeffs.values().chain(self.sin_coeffs.values()) {
            acc.add(v.norm_sqr() * std::f64::consts::PI);
        }
        acc.value().sqrt()
    }

    fn scale(&self, z: Complex64) -> FourierFunction {
        FourierFunction {
            constant_term: self.constant_term * z,
            cos_coeffs: self.cos_coeffs.iter().map(|(&f, &v)| (f, v * z)).collect(),
            sin_coeffs: self.sin_coeffs.iter().map(|(&f, &v)| (f, v * z)).collect(),
        }
    }

    fn sub(&self, other: &FourierFunction) -> Result<FourierFunction, SimError> {
        let mut out = FourierFunction::constant(self.constant_term - other.constant_term);
        for freq in FourierFunction::frequencies(self, other) {
            let dc = FourierFunction::coeff(&self.cos_coeffs, freq)
                - FourierFunction::coeff(&other.cos_coeffs, freq);
            let ds = FourierFunction::coeff(&self.sin_coeffs, freq)
                - FourierFunction::coeff(&other.sin_coeffs, freq);
            out.cos_coeffs.insert(freq, dc);
            out.sin_coeffs.insert(freq, ds);
        }
        Ok(out)
    }
}

/// Build the fixed positive unit-norm projection axis with lacunary
/// cosine spectrum: constant term `4/√(34π)` and cosine coefficient
/// `2^{-k/2}/√(34π)` at frequency `2^k` for `0 ≤ k ≤ k_max`.
///
/// Its squared norm is exactly `1 − 2^{-k_max}/34` (finite Parseval sum),
/// so with `k_max ≥ 8` the axis is a unit vector to within 2·10⁻⁴ and the
/// truncation tail is accounted for explicitly wherever it matters.
pub fn build_g(k_max: u32) -> Result<FourierFunction, SimError> {
    if !(MIN_MODES..=MAX_MODES).contains(&k_max) {
        return Err(SimError::Argument("mode count must lie in [8, 50]"));
    }
    let normalizer = (34.0 * std::f64::consts::PI).sqrt().recip();
    let cos_modes = (0..=k_max).map(|k| {
        let coeff = (0.5f64).powi(k as i32).sqrt() * normalizer;
        (1u64 << k, Complex64::new(coeff, 0.0))
    });
    FourierFunction::from_modes(
        Complex64::new(4.0 * normalizer, 0.0),
        cos_modes,
        std::iter::empty(),
    )
}

/// Translation `f(x) ↦ f(x + 2πt)`, diagonal on frequencies: the mode at
/// ω rotates by angle 2πtω, mixing its cos and sin coefficients.
#[derive(Clone, Copy, Debug, Default)]
pub struct TranslationSemigroup;

impl Semigroup<FourierFunction> for TranslationSemigroup {
    fn apply(&self, t: f64, f: &FourierFunction) -> FourierFunction {
        assert!(t >= 0.0, "semigroup parameter must be nonnegative");
        let mut out = FourierFunction::constant(f.constant_term);
        for freq in FourierFunction::frequencies(f, &out) {
            // Whole turns are discarded before the angle ever sees π, so
            // dyadic t at power-of-two frequencies stays exact and large
            // arguments never reach the trig routines.
            let turns = t * freq as f64;
            let angle = std::f64::consts::TAU * turns.fract();
            let (sin, cos) = angle.sin_cos();
            let a = FourierFunction::coeff(&f.cos_coeffs, freq);
            let b = FourierFunction::coeff(&f.sin_coeffs, freq);
            out.cos_coeffs.insert(freq, a * cos + b * sin);
            out.sin_coeffs.insert(freq, b * cos - a * sin);
        }
        out
    }
}

/// Heat-flow damping: the mode at ω shrinks by `e^{−tω²}`, the constant
/// rides along unchanged. Self-adjoint and contractive — the convergent
/// regime the positive control runs in.
#[derive(Clone, Copy, Debug, Default)]
pub struct HeatSemigroup;

impl Semigroup<FourierFunction> for HeatSemigroup {
    fn apply(&self, t: f64, f: &FourierFunction) -> FourierFunction {
        assert!(t >= 0.0, "semigroup parameter must be nonnegative");
        let damp = |freq: u64| (-t * (freq as f64) * (freq as f64)).exp();
        let mut out = FourierFunction::constant(f.constant_term);
        out.cos_coeffs = f
            .cos_coeffs
            .iter()
            .map(|(&freq, &v)| (freq, v * damp(freq)))
            .collect();
        out.sin_coeffs = f
            .sin_coeffs
            .iter()
            .map(|(&freq, &v)| (freq, v * damp(freq)))
            .collect();
        out
    }
}
