//! Exponential and logarithm at double-double precision.
//!
//! Both functions are built from short Taylor/atanh series on heavily
//! reduced arguments, so no step loses more than a couple of ulps of the
//! 106-bit format. `log1p_ext` exists because the evaluators need
//! `n * log|c_n|` to survive `|c_n| = 1 - O(1/n)` at `n = 2^40`: computing
//! `log(1+x)` from `x` directly keeps the full precision of the deviation
//! `x` instead of rounding it into `1 + x` first.

use crate::real::ExtReal;
use crate::MathError;

/// Largest |x| accepted by [`exp_ext`]; e^700 ≈ 1.01e304 still fits in the
/// leading limb with room to spare.
const EXP_ARG_LIMIT: f64 = 700.0;

/// atanh(u) for |u| ≤ 0.18, by the odd series u + u³/3 + u⁵/5 + …
///
/// At the largest argument we feed it ((√2−1)/(√2+1) ≈ 0.1716) the 25th
/// odd term is below 10^-38, so truncation is invisible at this precision.
fn atanh_small(u: ExtReal) -> ExtReal {
    let u2 = u.sqr();
    let mut term = u;
    let mut sum = u;
    for j in 1..=24u32 {
        term = term.mul(u2);
        sum = sum.add(term.div_f64((2 * j + 1) as f64));
    }
    sum
}

/// log(1+x) with relative error ≤ 1e-27, accurate for |x| down to 1e-30.
///
/// For |x| ≤ 1/2 the value is 2·atanh(x/(2+x)) — no rounding of `1+x`
/// ever happens, which is the whole point. For larger x the sum `1+x` is
/// formed (exactly, when x ∈ (−1,−1/2] by Sterbenz; to an ulp otherwise),
/// split as `2^e · m` with m ∈ [√2/2, √2), and evaluated as
/// `e·ln2 + 2·atanh((m−1)/(m+1))`.
///
/// # Errors
/// [`MathError::Domain`] when `x ≤ −1` (log of a nonpositive number).
pub fn log1p_ext(x: ExtReal) -> Result<ExtReal, MathError> {
    if !x.is_finite() || x.cmp_ext(ExtReal::from_f64(-1.0)) != core::cmp::Ordering::Greater {
        return Err(MathError::Domain);
    }
    if x.abs().hi() <= 0.5 {
        let u = x.div(x.add_f64(2.0));
        return Ok(atanh_small(u).ldexp(1));
    }
    let y = x.add_f64(1.0);
    // Split y = 2^e * m with m in [sqrt(2)/2, sqrt(2)).
    let mut e = ilogb(y.hi());
    let mut m = y.ldexp(-e);
    if m.hi() >= core::f64::consts::SQRT_2 {
        e += 1;
        m = m.ldexp(-1);
    }
    let u = m.sub_f64(1.0).div(m.add_f64(1.0));
    let ln_m = atanh_small(u).ldexp(1);
    Ok(ExtReal::LN2.mul_f64(e as f64).add(ln_m))
}

/// e^x with relative error ≤ 1e-27 for |x| ≤ 700.
///
/// Standard reduction: x = k·ln2 + r with |r| ≤ ln2/2, then r is scaled
/// down by 2^5 so the 13-term Taylor series truncates below 10^-33, then
/// five squarings and an exact 2^k rescale undo the reductions.
///
/// Near the bottom of the range (x ≲ −655) the result is small enough
/// that the trailing limb goes subnormal and effective precision tapers
/// toward ~24 digits; every quantity this workspace exponentiates stays
/// far above that (the smallest, e^{-7.63…}, is ≈ 4.9e-4).
///
/// # Errors
/// [`MathError::Range`] when |x| > 700 or x is not finite.
pub fn exp_ext(x: ExtReal) -> Result<ExtReal, MathError> {
    if !x.is_finite() || x.abs().hi() > EXP_ARG_LIMIT {
        return Err(MathError::Range);
    }
    let k = (x.hi() / ExtReal::LN2.hi()).round();
    let r = x.sub(ExtReal::LN2.mul_f64(k));
    let r5 = r.ldexp(-5);
    // Taylor series for e^{r5}, |r5| <= ln2/64 ≈ 0.0109.
    let mut term = r5;
    let mut sum = r5.add_f64(1.0);
    for j in 2..=13u32 {
        term = term.mul(r5).div_f64(j as f64);
        sum = sum.add(term);
    }
    // Undo the 2^5 scaling by repeated squaring, then the 2^k shift.
    let mut result = sum;
    for _ in 0..5 {
        result = result.sqr();
    }
    Ok(result.ldexp(k as i32))
}

/// Binary exponent of a finite nonzero f64 (the e with x = m·2^e,
/// m ∈ [1,2)), handling subnormals by pre-scaling.
fn ilogb(x: f64) -> i32 {
    debug_assert!(x.is_finite() && x != 0.0);
    let ax = x.abs();
    if ax >= f64::MIN_POSITIVE {
        ((ax.to_bits() >> 52) & 0x7ff) as i32 - 1023
    } else {
        // Subnormal: scale up by 2^64 first.
        let scaled = ax * (2.0f64).powi(64);
        ((scaled.to_bits() >> 52) & 0x7ff) as i32 - 1023 - 64
    }
}
