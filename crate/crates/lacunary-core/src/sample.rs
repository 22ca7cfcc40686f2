//! The record produced for a single index n, with the derived quantities
//! that the certificates actually consume.

use extprec::{exp_ext, log1p_ext, ExtComplex, ExtReal};

/// One evaluated point of a scalar sequence, together with everything the
/// divergence analysis needs downstream.
///
/// The field to trust is `one_minus` = 1 − c_n: it is accumulated from
/// cancellation-free terms, so its relative accuracy is ~10⁻³¹ even though
/// its magnitude shrinks like 1/n. `value`, `trace` and `power` are all
/// derived from it without ever subtracting two near-unit numbers:
///
/// ```text
/// 1 − |c|²  =  2·Re(1−c) − |1−c|²
/// trace     =  (n/2)·log1p(−(1−|c|²))     (= n·log|c|)
/// power     =  exp(trace)                  (= |c|^n)
/// ```
#[derive(Debug, Clone, Copy)]
pub struct CnSample {
    /// The index n of the sequence element.
    pub n: u64,
    /// c_n itself.
    pub value: ExtComplex,
    /// 1 − c_n, the primary cancellation-free quantity.
    pub one_minus: ExtComplex,
    /// n·log|c_n|, i.e. the exponent of the power below.
    pub trace: ExtReal,
    /// |c_n|^n.
    pub power: ExtReal,
}

impl CnSample {
    /// Assembles a sample from the accumulated deviation 1 − c_n.
    ///
    /// The lone degenerate point is c_2 = 0 (the k=1 term −1/2 cancels the
    /// geometric tail +1/2): there 1 − |c|² reaches 1, the log-modulus is
    /// −∞ and the power is 0. Rounding can land the computed gap on either
    /// side of 1, so both the exact-hit branch and the finite branch
    /// produce a power within ~10⁻³¹ of 0.
    pub(crate) fn from_one_minus(n: u64, one_minus: ExtComplex) -> CnSample {
        let value = ExtComplex::ONE - one_minus;
        // 1 − |c|² without forming |c|²: expand |1 − om|² and cancel the 1.
        let gap = one_minus.re.ldexp(1) - one_minus.norm_sqr();
        let (trace, power) = if gap.cmp_ext(ExtReal::ONE).is_ge() {
            (ExtReal::from_f64(f64::NEG_INFINITY), ExtReal::ZERO)
        } else {
            // n ≤ 2^50, so `n as f64` is exact and the halving is a scaling.
            let log_mod_sq = log1p_ext(-gap)
                .expect("1 - |c|^2 < 1 by construction, so the log1p argument exceeds -1");
            let trace = log_mod_sq.mul_f64(n as f64).ldexp(-1);
            // |c| ≤ 1 keeps the trace nonpositive; it can be large only for
            // tiny |c| at small n, far inside exp's range.
            let power = if trace.hi() < -700.0 {
                ExtReal::ZERO
            } else {
                exp_ext(trace).expect("trace is nonpositive and bounded")
            };
            (trace, power)
        };
        CnSample {
            n,
            value,
            one_minus,
            trace,
            power,
        }
    }
}
