//! Sine/cosine at double-double precision, organized so that *every*
//! cancellation happens in exact integer arithmetic, never in the angle.
//!
//! The series evaluators need cos(2^k·π/n) for n up to ~2^50, i.e. values
//! of cos at π·r/n for integer residues r. Folding such an angle into the
//! first quadrant by subtracting multiples of a *rounded* π would lose
//! exactly the digits the `n·log|c_n|` pipeline depends on. Instead,
//! [`sincos_pi_residue`] folds the integer pair (r, n) itself — forming
//! `2n − r`, `n − 2a` and so on exactly — and only then multiplies by the
//! double-double π, so the one rounding step happens on a small first-octant
//! argument. Everything funnels into a single sine Taylor kernel on
//! [0, π/2].
//!
//! [`cospi_frac`] handles the dyadic angles π/2^j and π/(3·2^j) separately
//! by half-angle descent from exact anchors, which keeps relative error flat
//! all the way down to j = 64 where the Taylor route would be fine too —
//! but the descent doubles as an independent cross-check of the kernel and
//! is what the subsequence closed forms use.

use crate::real::ExtReal;
use crate::MathError;
use std::sync::OnceLock;

/// A matched (cos, sin) pair for one angle.
#[derive(Clone, Copy, Debug)]
pub struct SinCos {
    pub cos: ExtReal,
    pub sin: ExtReal,
}

/// (cos, sin, 1−cos) for one angle; the third field is computed by a
/// cancellation-free route, never as `1 - cos` when cos is close to 1.
#[derive(Clone, Copy, Debug)]
pub struct SinCosOmc {
    pub cos: ExtReal,
    pub sin: ExtReal,
    pub one_minus_cos: ExtReal,
}

/// Taylor coefficients 1/(2j+1)! with alternating signs, enough terms that
/// the first omitted one is below 10^-42 at x = π/2.
fn sin_coefficients() -> &'static [ExtReal; 21] {
    static COEFFS: OnceLock<[ExtReal; 21]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [ExtReal::ZERO; 21];
        c[0] = ExtReal::ONE;
        for j in 1..21u32 {
            let denom = (2 * j * (2 * j + 1)) as f64;
            c[j as usize] = -c[j as usize - 1].div_f64(denom);
        }
        c
    })
}

/// sin x for |x| ≤ π/2 by the odd Taylor series (Horner in x²).
///
/// All terms after the first are corrections an order of magnitude down,
/// so the only rounding that matters is the final multiply by x.
fn sin_kernel(x: ExtReal) -> ExtReal {
    debug_assert!(
        x.abs().hi() <= core::f64::consts::FRAC_PI_2 + 1e-9,
        "sin kernel argument {} outside [0, pi/2]",
        x.hi()
    );
    let c = sin_coefficients();
    let x2 = x.sqr();
    let mut p = c[20];
    for j in (0..20).rev() {
        p = p.mul(x2).add(c[j]);
    }
    x.mul(p)
}

/// π·num/den as an `ExtReal`, for exact integer num ≤ 2^52, den ≤ 2^52.
fn pi_ratio(num: u64, den: u64) -> ExtReal {
    debug_assert!(num <= (1 << 52) && den <= (1 << 52) && den > 0);
    ExtReal::PI.mul_f64(num as f64).div_f64(den as f64)
}

/// cos, sin and 1−cos of θ = π·r/n for an integer residue r ∈ [0, 2n).
///
/// This is the entry point the series evaluators use: the caller reduces
/// its angle to a residue mod 2n in integer arithmetic, and all quadrant
/// folding below happens on integers too (2n−r, n−2a, …), so the only
/// inexact step is one multiply of a first-octant value by π. Relative
/// error of each output is ≤ 1e-27 with no degradation near θ = π/2 or
/// θ = π, because those neighborhoods are reached through exact integer
/// complements rather than subtraction of a rounded constant.
///
/// n may be as large as 2^51 (so that 2n and the folded numerators stay
/// exactly representable).
pub fn sincos_pi_residue(r: u64, n: u64) -> SinCosOmc {
    assert!(n >= 1 && n <= (1 << 51), "denominator out of range");
    assert!(r < 2 * n, "residue {r} not reduced mod 2n = {}", 2 * n);

    // Fold to the upper half circle: sin(π(2n−r)/n) = −sin(πr/n), cos even.
    let (a, sin_negative) = if r > n { (2 * n - r, true) } else { (r, false) };

    let (cos, sin, omc) = if 2 * a <= n {
        // First quadrant. cos(πa/n) = sin(π(n−2a)/(2n)) — the complement
        // formed exactly in the integers.
        let sin = sin_kernel(pi_ratio(a, n));
        let cos = sin_kernel(pi_ratio(n - 2 * a, 2 * n));
        let omc = if 3 * a < n {
            // Small angle: 1−cos = 2·sin²(θ/2) keeps full relative accuracy.
            sin_kernel(pi_ratio(a, 2 * n)).sqr().ldexp(1)
        } else {
            // cos ≤ 1/2 here, so plain subtraction loses at most one bit.
            ExtReal::ONE.sub(cos)
        };
        (cos, sin, omc)
    } else {
        // Second quadrant: reflect through π/2 with b = n − a ≤ n/2.
        let b = n - a;
        let sin = sin_kernel(pi_ratio(b, n));
        let cos_b = sin_kernel(pi_ratio(n - 2 * b, 2 * n));
        // cos = −cos(πb/n) ≤ 0, and 1−cos = 1+cos(πb/n) is a true addition.
        (-cos_b, sin, cos_b.add_f64(1.0))
    };

    SinCosOmc {
        cos,
        sin: if sin_negative { -sin } else { sin },
        one_minus_cos: omc,
    }
}

/// (cos θ, sin θ) for θ = π/(q·2^j), q ∈ {1, 3}, by half-angle descent.
///
/// Anchors are exact: (cos π, sin π) = (−1, 0) and (cos π/3, sin π/3) =
/// (1/2, √3/2). Each halving uses cos(θ/2) = sqrt((1+cos θ)/2) followed by
/// sin(θ/2) = sin θ / (2 cos(θ/2)); as θ shrinks, cos θ → 1 and both forms
/// stay cancellation-free, so relative error grows only linearly in j and
/// remains below 1e-27 through j = 64.
///
/// # Errors
/// [`MathError::Argument`] for q ∉ {1, 3} or j > 64.
pub fn cospi_frac(j: u32, q: u32) -> Result<SinCos, MathError> {
    if q != 1 && q != 3 {
        return Err(MathError::Argument("q must be 1 or 3"));
    }
    if j > 64 {
        return Err(MathError::Argument("descent depth j must be at most 64"));
    }
    let (mut pair, steps) = match (q, j) {
        // The descent cannot start at (−1, 0) (sin θ/(2cos θ/2) is 0/0),
        // so π and π/2 are returned directly and deeper angles start at π/2.
        (1, 0) => {
            return Ok(SinCos {
                cos: -ExtReal::ONE,
                sin: ExtReal::ZERO,
            })
        }
        (1, _) => (
            SinCos {
                cos: ExtReal::ZERO,
                sin: ExtReal::ONE,
            },
            j - 1,
        ),
        (3, _) => (
            SinCos {
                cos: ExtReal::from_f64(0.5),
                sin: ExtReal::from_f64(3.0).sqrt().ldexp(-1),
            },
            j,
        ),
        _ => unreachable!(),
    };
    for _ in 0..steps {
        let cos_half = pair.cos.add_f64(1.0).ldexp(-1).sqrt();
        let sin_half = pair.sin.div(cos_half.ldexp(1));
        pair = SinCos {
            cos: cos_half,
            sin: sin_half,
        };
    }
    Ok(pair)
}

/// (cos x, sin x) for a general |x| ≤ π.
///
/// The fold is done in double-double arithmetic against the stored π, so
/// unlike [`sincos_pi_residue`] the *relative* error of sin degrades as x
/// approaches ±π (and of cos near ±π/2): the complement π − |x| carries the
/// ~3e-33 absolute uncertainty of the π constant, which is only ≤ 1e-27
/// *relative* while the complement exceeds ~3e-6. Absolute error is always
/// ≤ 4e-33. Callers that need full relative accuracy at angles commensurate
/// with π use the residue or descent entry points instead; this one serves
/// the simulator's irrational-phase probes, where the caveat is harmless.
///
/// # Errors
/// [`MathError::Argument`] when |x| > π (beyond one ulp of slack).
pub fn sincos_small(x: ExtReal) -> Result<SinCos, MathError> {
    let full = sincos_small_full(x)?;
    Ok(SinCos {
        cos: full.cos,
        sin: full.sin,
    })
}

/// 1 − cos x computed as 2·sin²(x/2) (or an additive form past π/2), so
/// callers never form `1 - cos` by subtraction near cos = 1. Same domain
/// and caveats as [`sincos_small`].
pub fn one_minus_cos(x: ExtReal) -> Result<ExtReal, MathError> {
    Ok(sincos_small_full(x)?.one_minus_cos)
}

fn sincos_small_full(x: ExtReal) -> Result<SinCosOmc, MathError> {
    if !x.is_finite() || x.abs().hi() > ExtReal::PI.hi() + 1e-12 {
        return Err(MathError::Argument("|x| must be at most pi"));
    }
    let ax = x.abs();
    let folded = if ax.hi() > core::f64::consts::FRAC_PI_2 {
        // Reflect through π: sin(π−y) = sin y, cos(π−y) = −cos y.
        let y = ExtReal::PI.sub(ax);
        let q = first_quadrant(y.abs());
        SinCosOmc {
            cos: -q.cos,
            sin: if y.is_negative() { -q.sin } else { q.sin },
            one_minus_cos: q.cos.add_f64(1.0),
        }
    } else {
        first_quadrant(ax)
    };
    Ok(SinCosOmc {
        cos: folded.cos,
        sin: if x.is_negative() {
            -folded.sin
        } else {
            folded.sin
        },
        one_minus_cos: folded.one_minus_cos,
    })
}

/// Core evaluation on [0, π/2] (plus an ulp of slack from the fold).
fn first_quadrant(ax: ExtReal) -> SinCosOmc {
    debug_assert!(!ax.is_negative());
    let sin = sin_kernel(ax);
    if ax.hi() <= core::f64::consts::FRAC_PI_4 {
        let omc = sin_kernel(ax.ldexp(-1)).sqr().ldexp(1);
        SinCosOmc {
            cos: ExtReal::ONE.sub(omc),
            sin,
            one_minus_cos: omc,
        }
    } else {
        // cos via the complement; cos ≤ √2/2 so 1−cos is a mild subtraction.
        let cos = sin_kernel(ExtReal::PI_OVER_2.sub(ax));
        SinCosOmc {
            cos,
            sin,
            one_minus_cos: ExtReal::ONE.sub(cos),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_entry_hits_the_axes() {
        let sc = sincos_pi_residue(0, 7);
        assert_eq!(sc.cos.to_f64(), 1.0);
        assert!(sc.sin.is_zero());
        assert!(sc.one_minus_cos.is_zero());

        let sc = sincos_pi_residue(7, 7); // θ = π
        assert_eq!(sc.cos.to_f64(), -1.0);
        assert!(sc.sin.abs().hi() < 1e-30);
        assert_eq!(sc.one_minus_cos.to_f64(), 2.0);

        let sc = sincos_pi_residue(1, 2); // θ = π/2
        assert!(sc.cos.abs().hi() < 1e-30);
        assert!((sc.sin.to_f64() - 1.0).abs() < 1e-30);

        let sc = sincos_pi_residue(3, 2); // θ = 3π/2
        assert!(sc.cos.abs().hi() < 1e-30);
        assert!((sc.sin.to_f64() + 1.0).abs() < 1e-30);
    }

    #[test]
    fn residue_entry_handles_exact_thirds() {
        // θ = π/3: cos = 1/2 exactly up to kernel rounding.
        let sc = sincos_pi_residue(1, 3);
        let half_err = sc.cos.sub(ExtReal::from_f64(0.5)).abs();
        assert!(half_err.hi() < 1e-31, "cos(π/3) error {}", half_err.hi());
        // θ = 2π/3: cos = −1/2, second-quadrant path.
        let sc = sincos_pi_residue(2, 3);
        let err = sc.cos.add_f64(0.5).abs();
        assert!(err.hi() < 1e-31);
        assert_eq!(sc.one_minus_cos.to_f64(), 1.5);
    }

    #[test]
    fn descent_anchors_are_exact() {
        let sc = cospi_frac(0, 1).unwrap();
        assert_eq!(sc.cos.to_f64(), -1.0);
        assert!(sc.sin.is_zero());

        let sc = cospi_frac(1, 1).unwrap();
        assert!(sc.cos.is_zero());
        assert_eq!(sc.sin.to_f64(), 1.0);

        let sc = cospi_frac(0, 3).unwrap();
        assert_eq!(sc.cos.to_f64(), 0.5);
    }

    #[test]
    fn quarter_pi_is_symmetric() {
        let sc = cospi_frac(2, 1).unwrap();
        let d = sc.cos.sub(sc.sin).abs();
        assert!(d.hi() < 1e-31, "cos π/4 vs sin π/4: {}", d.hi());
        let two = sc.cos.sqr().ldexp(2);
        assert!(two.sub_f64(2.0).abs().hi() < 1e-30);
    }

    #[test]
    fn pi_sixth_matches_pi_third_complement() {
        let s6 = cospi_frac(1, 3).unwrap(); // π/6
        assert!(s6.sin.sub(ExtReal::from_f64(0.5)).abs().hi() < 1e-31);
        let s3 = cospi_frac(0, 3).unwrap(); // π/3
        assert!(s6.cos.sub(s3.sin).abs().hi() < 1e-31);
    }

    #[test]
    fn small_entry_matches_residue_entry() {
        // Same angle through both paths: θ = 5π/13.
        let via_residue = sincos_pi_residue(5, 13);
        let x = ExtReal::PI.mul_f64(5.0).div_f64(13.0);
        let via_small = sincos_small(x).unwrap();
        assert!(via_residue.cos.sub(via_small.cos).abs().hi() < 1e-30);
        assert!(via_residue.sin.sub(via_small.sin).abs().hi() < 1e-30);
    }

    #[test]
    fn sin_at_stored_pi_vanishes() {
        let sc = sincos_small(ExtReal::PI).unwrap();
        assert!(sc.sin.abs().hi() <= 1e-27);
        assert!((sc.cos.to_f64() + 1.0).abs() < 1e-26);
    }

    #[test]
    fn one_minus_cos_is_taylor_accurate_for_tiny_x() {
        let x = ExtReal::from_f64(1e-10);
        let omc = one_minus_cos(x).unwrap();
        // 1 − cos x = x²/2 · (1 − x²/12 + …)
        let lead = x.sqr().ldexp(-1);
        let rel = omc.sub(lead).div(lead);
        let expected_correction = -1e-20 / 12.0;
        assert!((rel.to_f64() - expected_correction).abs() < 1e-27);
    }

    #[test]
    fn unsupported_arguments_are_rejected() {
        assert!(cospi_frac(1, 2).is_err());
        assert!(cospi_frac(65, 1).is_err());
        assert!(sincos_small(ExtReal::from_f64(3.2)).is_err());
    }
}
