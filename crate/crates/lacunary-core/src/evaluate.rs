//! Evaluators for the scalar sequences, in deviation form.
//!
//! Everything here computes 1 − c_n rather than c_n: the interesting part
//! of c_n is its distance from 1, which shrinks like 1/n, and accumulating
//! it directly from cancellation-free pieces (1 − e^{iθ} = (1−cos θ) − i·sin θ
//! with 1−cos θ produced as 2·sin²(θ/2)) preserves its full relative
//! accuracy. [`CnSample::from_one_minus`] then derives value, trace and
//! power without undoing that work.
//!
//! Two routes produce the deviation:
//!
//! * the general route reduces the exponents 2^k mod 2n in integer
//!   arithmetic and collapses the infinite series exactly over the orbit's
//!   cycle ([`cycle_of_two_mod`]);
//! * for n = 2^m and n = 3·2^m the orbit is known in closed form — the
//!   terms k ≥ m telescope away (entirely for 2^m, into a single pure
//!   imaginary term for 3·2^m) — and the remaining angles π/2^j, π/(3·2^j)
//!   come from exact half-angle descent ([`cospi_frac`]). These are the
//!   evaluators the certificates use, and they extend past the point where
//!   3·2^m would overflow the general route's modulus.

use crate::cycle::cycle_of_two_mod;
use crate::sample::CnSample;
use crate::CoreError;
use extprec::{cospi_frac, sincos_pi_residue, ExtComplex, ExtReal};

/// Accumulates Σ w_k (1 − e^{iθ_k}) from per-term (1−cos, sin) pairs.
#[derive(Clone, Copy)]
struct Deviation {
    om: ExtComplex,
}

impl Deviation {
    fn new() -> Deviation {
        Deviation {
            om: ExtComplex::ZERO,
        }
    }

    fn push(&mut self, weight: ExtReal, one_minus_cos: ExtReal, sin: ExtReal) {
        self.om.re = self.om.re.add(weight.mul(one_minus_cos));
        self.om.im = self.om.im.sub(weight.mul(sin));
    }
}

/// 1 − c_n by exact orbit reduction: preperiod terms carry their plain
/// weights 2^{-k}, and a full stored cycle is summed once with the closed
/// geometric factor 1/(1 − 2^{-L}). When the cycle is longer than the
/// stored prefix, the prefix is summed with plain weights instead and the
/// dropped tail is below 2^{-193} — invisible at this precision.
fn hilbert_deviation(n: u64) -> Result<ExtComplex, CoreError> {
    let orbit = cycle_of_two_mod(n)?;
    let mut dev = Deviation::new();
    for (i, &r) in orbit.preperiod.iter().enumerate() {
        let k = (i + 1) as i32;
        let sc = sincos_pi_residue(r, n);
        dev.push(ExtReal::ONE.ldexp(-k), sc.one_minus_cos, sc.sin);
    }
    let p = orbit.preperiod.len() as i32;
    let closure = if orbit.truncated() {
        ExtReal::ONE
    } else {
        // 1 − 2^{-L} is exact in two limbs for L ≤ 192, so this costs one
        // rounding for the whole tail.
        let ratio = ExtReal::ONE.ldexp(-(orbit.period as i32));
        ExtReal::ONE.div(ExtReal::ONE.sub(ratio))
    };
    for (i, &r) in orbit.cycle.iter().enumerate() {
        let k = p + (i + 1) as i32;
        let sc = sincos_pi_residue(r, n);
        dev.push(closure.ldexp(-k), sc.one_minus_cos, sc.sin);
    }
    Ok(dev.om)
}

/// 1 − c_{2^m} in closed form: the terms k ≥ m cancel exactly (the k = m
/// term is −2^{-m} and the remaining geometric tail is +2^{-m}), leaving
///
/// ```text
/// 1 − c_{2^m} = Σ_{k=1}^{m-1} 2^{-k} (1 − e^{iπ/2^{m-k}}) + 2^{1-m}.
/// ```
fn pow2_deviation(m: u32) -> ExtComplex {
    debug_assert!((1..=50).contains(&m));
    let mut dev = Deviation::new();
    for k in 1..m {
        let j = m - k;
        let sc = cospi_frac(j, 1).expect("descent depth below 50");
        // 1 − cos from sin²/(1+cos); cos ≥ 0 on this angle range.
        let omc = sc.sin.sqr().div(sc.cos.add_f64(1.0));
        dev.push(ExtReal::ONE.ldexp(-(k as i32)), omc, sc.sin);
    }
    dev.om.re = dev.om.re.add(ExtReal::ONE.ldexp(1 - m as i32));
    dev.om
}

/// 1 − c_{3·2^m} in closed form: from k = m onward the angles cycle through
/// π/3, 2π/3, 4π/3, … and the whole tail collapses to the single term
/// i·2√3/(3·2^m) — its real part cancels the head's missing weight exactly:
///
/// ```text
/// 1 − c_{3·2^m} = Σ_{k=1}^{m-1} 2^{-k} (1 − e^{iπ/(3·2^{m-k})})
///                 + 2^{1-m} − i·2√3/(3·2^m).
/// ```
fn three_pow2_deviation(m: u32) -> ExtComplex {
    debug_assert!((1..=50).contains(&m));
    let mut dev = Deviation::new();
    for k in 1..m {
        let j = m - k;
        let sc = cospi_frac(j, 3).expect("descent depth below 50");
        let omc = sc.sin.sqr().div(sc.cos.add_f64(1.0));
        dev.push(ExtReal::ONE.ldexp(-(k as i32)), omc, sc.sin);
    }
    dev.om.re = dev.om.re.add(ExtReal::ONE.ldexp(1 - m as i32));
    let tail = ExtReal::from_f64(3.0)
        .sqrt()
        .ldexp(1)
        .div_f64(3.0)
        .ldexp(-(m as i32));
    dev.om.im = dev.om.im.sub(tail);
    dev.om
}

/// Projects a Hilbert-model deviation onto the L_p model's scalar: there
/// the sequence is c_n = 16/17 + (1/17)·Re(c_n^hilbert), i.e.
/// 1 − c_n = Re(1 − c_n^hilbert)/17, again with no subtraction of
/// near-unit quantities.
fn lp_deviation(hilbert: ExtComplex) -> ExtComplex {
    ExtComplex {
        re: hilbert.re.div_f64(17.0),
        im: ExtReal::ZERO,
    }
}

fn validate_m(m: u32) -> Result<(), CoreError> {
    if (1..=50).contains(&m) {
        Ok(())
    } else {
        Err(CoreError::Argument("subsequence index m must lie in 1..=50"))
    }
}

/// c_n = Σ_{k≥1} 2^{-k} e^{i·2^kπ/n}, the Hilbert-model scalar.
///
/// # Errors
/// [`CoreError::Argument`] unless 1 ≤ n ≤ 2^50.
pub fn cn_hilbert(n: u64) -> Result<CnSample, CoreError> {
    Ok(CnSample::from_one_minus(n, hilbert_deviation(n)?))
}

/// c_n = 16/17 + (1/17)·Σ_{k≥1} 2^{-k} cos(2^kπ/n), the L_p-model scalar.
///
/// # Errors
/// [`CoreError::Argument`] unless 1 ≤ n ≤ 2^50.
pub fn cn_lp(n: u64) -> Result<CnSample, CoreError> {
    Ok(CnSample::from_one_minus(
        n,
        lp_deviation(hilbert_deviation(n)?),
    ))
}

/// Hilbert-model c_n along n = 2^m via the closed form.
///
/// # Errors
/// [`CoreError::Argument`] unless 1 ≤ m ≤ 50.
pub fn cn_hilbert_subseq_pow2(m: u32) -> Result<CnSample, CoreError> {
    validate_m(m)?;
    Ok(CnSample::from_one_minus(1u64 << m, pow2_deviation(m)))
}

/// Hilbert-model c_n along n = 3·2^m via the closed form.
///
/// # Errors
/// [`CoreError::Argument`] unless 1 ≤ m ≤ 50.
pub fn cn_hilbert_subseq_3pow2(m: u32) -> Result<CnSample, CoreError> {
    validate_m(m)?;
    Ok(CnSample::from_one_minus(3u64 << m, three_pow2_deviation(m)))
}

/// Closed-form subsequence samples for the L_p model. Routed through the
/// same deviations as the Hilbert closed forms, so they remain available at
/// m = 49, 50 where 3·2^m exceeds the general evaluator's modulus limit.
pub(crate) fn lp_subseq_pow2(m: u32) -> Result<CnSample, CoreError> {
    validate_m(m)?;
    Ok(CnSample::from_one_minus(
        1u64 << m,
        lp_deviation(pow2_deviation(m)),
    ))
}

pub(crate) fn lp_subseq_3pow2(m: u32) -> Result<CnSample, CoreError> {
    validate_m(m)?;
    Ok(CnSample::from_one_minus(
        3u64 << m,
        lp_deviation(three_pow2_deviation(m)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: ExtReal, b: f64, tol: f64, what: &str) {
        let err = a.sub_f64(b).abs().hi();
        assert!(err <= tol, "{what}: got {}, want {b}, err {err:.3e}", a.hi());
    }

    #[test]
    fn n_equals_one_gives_exactly_one() {
        let s = cn_hilbert(1).unwrap();
        assert_eq!(s.value.re.hi(), 1.0);
        assert!(s.value.re.lo() == 0.0 && s.value.im.is_zero());
        assert!(s.one_minus.re.is_zero());
        assert_eq!(s.power.hi(), 1.0);
    }

    #[test]
    fn n_equals_two_degenerates_to_zero() {
        // Closed form: the cancellation is exact, power is exactly 0.
        let s = cn_hilbert_subseq_pow2(1).unwrap();
        assert!(s.value.re.is_zero() && s.value.im.is_zero());
        assert!(s.power.is_zero());
        assert_eq!(s.trace.hi(), f64::NEG_INFINITY);
        // General route: same up to double-double rounding.
        let g = cn_hilbert(2).unwrap();
        assert!(g.value.modulus().hi() <= 1e-31);
        assert!(g.power.hi() <= 1e-31);
    }

    #[test]
    fn small_special_values_match_hand_reduction() {
        // c_3 = −1/2 + i·√3/6: orbit {2,4} mod 6 with geometric factor 4/3.
        let s = cn_hilbert(3).unwrap();
        close(s.value.re, -0.5, 1e-31, "Re c_3");
        close(s.value.im, 3f64.sqrt() / 6.0, 1e-16, "Im c_3");

        // c_4 = i/2.
        let s = cn_hilbert(4).unwrap();
        close(s.value.re, 0.0, 1e-31, "Re c_4");
        close(s.value.im, 0.5, 1e-31, "Im c_4");

        // c_6 = i·√3/3.
        let s = cn_hilbert(6).unwrap();
        close(s.value.re, 0.0, 1e-31, "Re c_6");
        close(s.value.im, 3f64.sqrt() / 3.0, 1e-16, "Im c_6");

        // c_12 = √3/4 + i(1/4 + √3/6).
        let s = cn_hilbert(12).unwrap();
        close(s.value.re, 3f64.sqrt() / 4.0, 1e-16, "Re c_12");
        close(s.value.im, 0.25 + 3f64.sqrt() / 6.0, 1e-16, "Im c_12");
    }

    #[test]
    fn closed_forms_match_the_general_route() {
        for m in 1..=20u32 {
            let a = cn_hilbert_subseq_pow2(m).unwrap();
            let b = cn_hilbert(1u64 << m).unwrap();
            let d = (a.one_minus - b.one_minus).modulus().hi();
            assert!(d <= 1e-28, "pow2 m={m}: routes differ by {d:.3e}");

            let a = cn_hilbert_subseq_3pow2(m).unwrap();
            let b = cn_hilbert(3u64 << m).unwrap();
            let d = (a.one_minus - b.one_minus).modulus().hi();
            assert!(d <= 1e-28, "3pow2 m={m}: routes differ by {d:.3e}");
        }
    }

    #[test]
    fn lp_values_are_the_projected_rationals() {
        // 1 − c_2 = 1 in the Hilbert model, so c_2 = 16/17 in L_p.
        let s = cn_lp(2).unwrap();
        close(s.value.re, 16.0 / 17.0, 1e-31, "lp c_2");
        assert!(s.value.im.is_zero());
        // Re(1 − c_3) = 3/2 ⇒ c_3 = 31/34.
        let s = cn_lp(3).unwrap();
        close(s.value.re, 31.0 / 34.0, 1e-31, "lp c_3");
        // Re(1 − c_4) = 1 ⇒ c_4 = 16/17 again.
        let s = cn_lp(4).unwrap();
        close(s.value.re, 16.0 / 17.0, 1e-31, "lp c_4");
    }

    #[test]
    fn subsequence_arguments_are_validated() {
        assert!(cn_hilbert_subseq_pow2(0).is_err());
        assert!(cn_hilbert_subseq_pow2(51).is_err());
        assert!(cn_hilbert_subseq_3pow2(0).is_err());
        assert!(cn_hilbert(0).is_err());
        assert!(cn_hilbert((1u64 << 50) + 1).is_err());
        // m = 49, 50 work through the closed forms even though 3·2^m
        // exceeds the general evaluator's range.
        assert!(cn_hilbert_subseq_3pow2(50).is_ok());
        assert!(cn_hilbert(3u64 << 49).is_err());
    }
}
