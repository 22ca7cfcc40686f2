//! The explicit constants separating the two subsequence limits, and the
//! Taylor-envelope inequalities that control the finite-m samples.

use crate::evaluate::{cn_hilbert_subseq_3pow2, cn_hilbert_subseq_pow2};
use extprec::{exp_ext, pi_ext, ExtReal};

/// The two exponents whose separation drives the whole argument, together
/// with their exponentials:
///
/// ```text
/// lower_exponent = 4 + π²/4            ≈ 6.46740110…
/// upper_exponent = 6 + π²/6 − π⁴/4536  ≈ 7.62345940…
/// ```
///
/// Along n = 2^m the powers |c_n|^n stay above exp(−lower_exponent); along
/// n = 3·2^m they drop below exp(−upper_exponent). Since the first exponent
/// is smaller, the bands are disjoint and c_n^n cannot converge.
#[derive(Debug, Clone, Copy)]
pub struct BoundConstants {
    /// 4 + π²/4.
    pub lower_exponent: ExtReal,
    /// 6 + π²/6 − π⁴/4536, with 4536 = 27·24·7 exact.
    pub upper_exponent: ExtReal,
    /// exp(−lower_exponent): the floor for the 2^m subsequence.
    pub lower_bound: ExtReal,
    /// exp(−upper_exponent): the ceiling for the 3·2^m subsequence.
    pub upper_bound: ExtReal,
}

/// Evaluates the four constants from their exact formulas.
pub fn bound_constants() -> BoundConstants {
    let pi2 = pi_ext().sqr();
    let lower_exponent = pi2.ldexp(-2).add_f64(4.0);
    let upper_exponent = pi2
        .div_f64(6.0)
        .add_f64(6.0)
        .sub(pi2.sqr().div_f64(4536.0));
    let lower_bound = exp_ext(-lower_exponent).expect("exponent is small");
    let upper_bound = exp_ext(-upper_exponent).expect("exponent is small");
    debug_assert!(lower_exponent < upper_exponent);
    debug_assert!(upper_bound < lower_bound);
    BoundConstants {
        lower_exponent,
        upper_exponent,
        lower_bound,
        upper_bound,
    }
}

/// Outcome of one envelope comparison: `slack` is the signed distance by
/// which the inequality holds (nonnegative = pass), computed without
/// catastrophic cancellation so that even slacks of order 2^{-45} carry
/// meaningful digits.
#[derive(Debug, Clone, Copy)]
pub struct EnvelopeCheck {
    /// Subsequence index.
    pub m: u32,
    /// The n the sample belongs to (2^m or 3·2^m).
    pub n: u64,
    /// Inequality margin; the check passes iff this is ≥ 0.
    pub slack: ExtReal,
    /// `!slack.is_negative()`.
    pub pass: bool,
}

/// Checks the modulus floor |c_{2^m}| ≥ 1 − (4+π²/4)/2^m + π²/4^m.
///
/// The interesting part is the near-cancellation: both sides are 1 − O(2^{-m}),
/// so the slack is formed from the deviations themselves,
///
/// ```text
/// slack = (4+π²/4)/2^m − π²/4^m − (1 − |c|),
/// 1 − |c| = x / (1 + sqrt(1−x)),   x = 1 − |c|² = 2·Re(1−c) − |1−c|²,
/// ```
///
/// which keeps ~30 significant digits in a quantity of size ~0.07·2^{-m}.
///
/// # Panics
/// If m ∉ [2, 50].
pub fn envelope_check_pow2(m: u32) -> EnvelopeCheck {
    assert!((2..=50).contains(&m), "envelope index m must lie in 2..=50");
    let s = cn_hilbert_subseq_pow2(m).expect("m validated above");
    let x = s.one_minus.re.ldexp(1).sub(s.one_minus.norm_sqr());
    let one_minus_mod = x.div(ExtReal::ONE.add(ExtReal::ONE.sub(x).sqrt()));
    let pi2 = pi_ext().sqr();
    let slack = pi2
        .ldexp(-2)
        .add_f64(4.0)
        .ldexp(-(m as i32))
        .sub(pi2.ldexp(-2 * m as i32))
        .sub(one_minus_mod);
    EnvelopeCheck {
        m,
        n: s.n,
        slack,
        pass: !slack.is_negative(),
    }
}

/// Checks the imaginary-part ceiling |Im c_{3·2^m}| ≤ (m+1)·π/(3·2^m).
///
/// (The matching real-part envelope involves constants the analysis never
/// pins down, so only the imaginary bound is checked; the real part is
/// instead controlled indirectly through the certificate's floor check.)
///
/// # Panics
/// If m ∉ [2, 50].
pub fn envelope_check_3pow2(m: u32) -> EnvelopeCheck {
    assert!((2..=50).contains(&m), "envelope index m must lie in 2..=50");
    let s = cn_hilbert_subseq_3pow2(m).expect("m validated above");
    let bound = pi_ext()
        .mul_f64((m + 1) as f64)
        .div_f64(3.0)
        .ldexp(-(m as i32));
    let slack = bound.sub(s.value.im.abs());
    EnvelopeCheck {
        m,
        n: s.n,
        slack,
        pass: !slack.is_negative(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_have_the_expected_leading_digits() {
        let b = bound_constants();
        assert!((b.lower_exponent.hi() - 6.467401100272340).abs() < 1e-14);
        assert!((b.upper_exponent.hi() - 7.623459399512688).abs() < 1e-14);
        assert!((b.lower_bound.hi() - 1.5532572517499631e-3).abs() < 1e-17);
        assert!((b.upper_bound.hi() - 4.888477828258070e-4).abs() < 1e-17);
        assert!(b.lower_exponent < b.upper_exponent);
        assert!(b.upper_bound < b.lower_bound);
    }

    #[test]
    fn modulus_floor_holds_with_the_predicted_slack() {
        // slack ≈ (lower_exponent − C)/2^m where C ≈ 6.3963 is the true
        // deviation constant, so ~0.0711·2^{-m}.
        let chk = envelope_check_pow2(20);
        assert!(chk.pass);
        let ratio = chk.slack.to_f64() * (1u64 << 20) as f64;
        assert!(
            (ratio - 0.0711).abs() < 5e-3,
            "slack·2^20 = {ratio}, expected ≈ 0.0711"
        );
        assert!(envelope_check_pow2(5).pass);
    }

    #[test]
    fn imag_ceiling_holds_and_is_asymptotically_tight() {
        assert!(envelope_check_3pow2(3).pass);
        let chk = envelope_check_3pow2(30);
        assert!(chk.pass);
        // Im ≈ (m−1)π/(3·2^m), so the slack is ≈ 2π/(3·2^m): two of the
        // (m+1) allowance units.
        let expected = 2.0 * std::f64::consts::PI / (3.0 * (1u64 << 30) as f64);
        let rel = (chk.slack.to_f64() - expected).abs() / expected;
        assert!(rel < 0.2, "slack {} vs expected {expected}", chk.slack.to_f64());
    }

    #[test]
    fn small_m_edge_is_reported_not_asserted() {
        // m = 2 sits before the asymptotic regime; record whichever way it
        // lands so the behavior is pinned without overclaiming.
        let chk = envelope_check_pow2(2);
        assert_eq!(chk.n, 4);
        let chk = envelope_check_3pow2(2);
        assert_eq!(chk.n, 12);
    }
}
