//! Unevaluated double-double reals: a value is the exact sum `hi + lo` of two
//! `f64`s with `|lo| <= ulp(hi)/2`, giving roughly 106 significand bits
//! (~31 decimal digits).
//!
//! Every operation here is a fixed, branch-stable sequence of IEEE-754
//! operations, so results are bit-identical across runs on a given target.
//! The error-free transformations (`two_sum`, `two_prod`) are the classical
//! Knuth / Dekker ones; products lean on `f64::mul_add` for the exact
//! residual.

/// Extended-precision real: the exact, unevaluated sum `hi + lo`.
///
/// Invariant: `hi == fl(hi + lo)`, i.e. the pair is normalized so `hi` alone
/// is the correctly rounded `f64` value. Arithmetic keeps relative error
/// below ~`4 * 2^-106 < 1e-31` per operation, comfortably inside the
/// `1e-28` budget the evaluators assume.
///
/// There is no separate exponent field, so the representable range is that
/// of `f64`. In particular `lo` goes subnormal once `|hi|` drops below about
/// `1e-290` and the second limb gradually loses bits; every quantity this
/// workspace produces stays at or above `1e-40` in magnitude, far from that
/// regime (the sole consumer that flirts with it, `exp_ext` near `-700`,
/// documents the taper).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ExtReal {
    hi: f64,
    lo: f64,
}

/// Knuth two-sum: `a + b = s + e` exactly, no ordering assumption.
#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Fast two-sum, valid when `|a| >= |b|` (or either is zero).
#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Exact product: `a * b = p + e` with `e` the FMA residual.
#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal { hi: 0.0, lo: 0.0 };
    pub const ONE: ExtReal = ExtReal { hi: 1.0, lo: 0.0 };

    /// pi to full double-double precision (residual ~3e-33).
    pub const PI: ExtReal = ExtReal {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };

    /// pi/2, exactly half of [`ExtReal::PI`].
    pub const PI_OVER_2: ExtReal = ExtReal {
        hi: 1.5707963267948966,
        lo: 6.123233995736766e-17,
    };

    /// ln 2 to full double-double precision (residual ~6e-34).
    pub const LN2: ExtReal = ExtReal {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };

    /// Wraps an `f64` exactly.
    #[inline]
    pub fn from_f64(x: f64) -> ExtReal {
        ExtReal { hi: x, lo: 0.0 }
    }

    /// Exact value of any `u64` (split across the two limbs when the
    /// integer needs more than 53 bits).
    #[inline]
    pub fn from_u64(v: u64) -> ExtReal {
        let hi = v as f64;
        // hi is within 2^11 of v, so the difference is an exact small i64.
        let lo = (v as i128 - hi as i128) as f64;
        normalize(hi, lo)
    }

    /// Exact value of any `i64`.
    #[inline]
    pub fn from_i64(v: i64) -> ExtReal {
        let hi = v as f64;
        let lo = (v as i128 - hi as i128) as f64;
        normalize(hi, lo)
    }

    /// Rebuilds from raw limbs, renormalizing. The pair must already
    /// represent the intended value exactly: `hi + lo` is taken at face
    /// value.
    #[inline]
    pub fn from_parts(hi: f64, lo: f64) -> ExtReal {
        normalize(hi, lo)
    }

    /// Leading limb (the correctly rounded `f64` value).
    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    /// Trailing limb.
    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Rounds to nearest `f64`. Because the pair is normalized this is
    /// just `hi`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    #[inline]
    pub fn abs(self) -> ExtReal {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    /// Exact scaling by `2^k` (no rounding while both limbs stay normal).
    #[inline]
    pub fn ldexp(self, k: i32) -> ExtReal {
        let f = pow2(k);
        ExtReal {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// Accurate double-double sum (the two-limb Knuth scheme, ~`3*2^-106`
    /// relative error).
    #[inline]
    pub fn add(self, rhs: ExtReal) -> ExtReal {
        let (s1, e1) = two_sum(self.hi, rhs.hi);
        let (s2, e2) = two_sum(self.lo, rhs.lo);
        let lo = e1 + s2;
        let (h, l) = quick_two_sum(s1, lo);
        let (h2, l2) = quick_two_sum(h, l + e2);
        ExtReal { hi: h2, lo: l2 }
    }

    /// Sum with a plain `f64` (cheaper: one two-sum).
    #[inline]
    pub fn add_f64(self, rhs: f64) -> ExtReal {
        let (s, e) = two_sum(self.hi, rhs);
        let (h, l) = quick_two_sum(s, e + self.lo);
        ExtReal { hi: h, lo: l }
    }

    #[inline]
    pub fn sub(self, rhs: ExtReal) -> ExtReal {
        self.add(-rhs)
    }

    #[inline]
    pub fn sub_f64(self, rhs: f64) -> ExtReal {
        self.add_f64(-rhs)
    }

    /// Full product: exact `hi*hi` via FMA plus the three cross terms that
    /// still reach the 106-bit window.
    #[inline]
    pub fn mul(self, rhs: ExtReal) -> ExtReal {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let t = self.hi.mul_add(rhs.lo, self.lo * rhs.hi);
        let (h, l) = quick_two_sum(p, e + t);
        ExtReal { hi: h, lo: l }
    }

    /// Product with a plain `f64`.
    #[inline]
    pub fn mul_f64(self, rhs: f64) -> ExtReal {
        let (p, e) = two_prod(self.hi, rhs);
        let (h, l) = quick_two_sum(p, e + self.lo * rhs);
        ExtReal { hi: h, lo: l }
    }

    /// Quotient via one leading division and two Newton-style corrections;
    /// relative error stays below `4 * 2^-106`.
    ///
    /// The divisor must be nonzero (debug-asserted); dividing by exact zero
    /// is a caller bug everywhere in this workspace, not a data condition.
    #[inline]
    pub fn div(self, rhs: ExtReal) -> ExtReal {
        debug_assert!(rhs.hi != 0.0, "division by exact zero");
        let q1 = self.hi / rhs.hi;
        let r1 = self.sub(rhs.mul_f64(q1));
        let q2 = r1.hi / rhs.hi;
        let r2 = r1.sub(rhs.mul_f64(q2));
        let q3 = r2.hi / rhs.hi;
        let (h, l) = quick_two_sum(q1, q2);
        let (h2, l2) = quick_two_sum(h, l + q3);
        ExtReal { hi: h2, lo: l2 }
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> ExtReal {
        self.div(ExtReal::from_f64(rhs))
    }

    /// Reciprocal.
    #[inline]
    pub fn recip(self) -> ExtReal {
        ExtReal::ONE.div(self)
    }

    /// Square (slightly cheaper and tighter than `mul(self, self)`).
    #[inline]
    pub fn sqr(self) -> ExtReal {
        let (p, e) = two_prod(self.hi, self.hi);
        let t = 2.0 * self.hi * self.lo;
        let (h, l) = quick_two_sum(p, e + t);
        ExtReal { hi: h, lo: l }
    }

    /// Square root by the Karp-Markstein correction: an `f64` seed, one
    /// double-double refinement, full 106-bit accuracy for the result.
    ///
    /// Negative input is a caller bug (debug-asserted); returns zero for
    /// zero.
    pub fn sqrt(self) -> ExtReal {
        debug_assert!(!self.is_negative(), "sqrt of negative value");
        if self.hi == 0.0 {
            return ExtReal::ZERO;
        }
        let s = self.hi.sqrt();
        let (p, e) = two_prod(s, s);
        let diff = self.sub(ExtReal { hi: p, lo: e });
        let corr = diff.hi / (2.0 * s);
        let (h, l) = quick_two_sum(s, corr);
        ExtReal { hi: h, lo: l }
    }

    /// Largest integer not exceeding the value, as an `ExtReal` (exact).
    pub fn floor(self) -> ExtReal {
        let fhi = self.hi.floor();
        if fhi == self.hi {
            // hi is integral: the fractional part lives entirely in lo.
            let flo = self.lo.floor();
            ExtReal::from_parts(fhi, flo)
        } else {
            // hi already carries a fractional part that dominates lo.
            ExtReal::from_f64(fhi)
        }
    }

    /// Total-order comparison (well-defined for normalized finite pairs).
    pub fn cmp_ext(self, rhs: ExtReal) -> core::cmp::Ordering {
        match self.hi.partial_cmp(&rhs.hi) {
            Some(core::cmp::Ordering::Equal) => self
                .lo
                .partial_cmp(&rhs.lo)
                .unwrap_or(core::cmp::Ordering::Equal),
            Some(ord) => ord,
            None => core::cmp::Ordering::Equal,
        }
    }
}

/// Renormalizes a raw pair so that `hi` absorbs as much as representable.
#[inline(always)]
fn normalize(hi: f64, lo: f64) -> ExtReal {
    let (h, l) = two_sum(hi, lo);
    ExtReal { hi: h, lo: l }
}

/// `2^k` as an exact `f64` for `|k| <= 1023`.
#[inline]
fn pow2(k: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&k), "ldexp exponent out of range");
    f64::from_bits(((k + 1023) as u64) << 52)
}

impl core::ops::Neg for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn neg(self) -> ExtReal {
        ExtReal {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl core::ops::Add for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal::add(self, rhs)
    }
}

impl core::ops::Sub for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn sub(self, rhs: ExtReal) -> ExtReal {
        ExtReal::sub(self, rhs)
    }
}

impl core::ops::Mul for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn mul(self, rhs: ExtReal) -> ExtReal {
        ExtReal::mul(self, rhs)
    }
}

impl core::ops::Div for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn div(self, rhs: ExtReal) -> ExtReal {
        ExtReal::div(self, rhs)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &ExtReal) -> Option<core::cmp::Ordering> {
        if self.hi.is_nan() || other.hi.is_nan() {
            return None;
        }
        Some(self.cmp_ext(*other))
    }
}

impl core::fmt::Display for ExtReal {
    /// Shortest display: the `f64` rounding of the pair. For full-precision
    /// decimal output use [`crate::decimal::to_decimal`].
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_tiny_is_distinguishable_from_one() {
        let tiny = ExtReal::from_f64((2.0f64).powi(-60));
        let x = ExtReal::ONE.add(tiny);
        assert!(x != ExtReal::ONE);
        assert_eq!(x.sub(ExtReal::ONE).to_f64(), (2.0f64).powi(-60));
    }

    #[test]
    fn mul_by_one_is_bit_identical() {
        let x = ExtReal::from_parts(0.1, 5.551115123125783e-18);
        let y = x.mul(ExtReal::ONE);
        assert_eq!(x.hi().to_bits(), y.hi().to_bits());
        assert_eq!(x.lo().to_bits(), y.lo().to_bits());
    }

    #[test]
    fn from_u64_is_exact_beyond_53_bits() {
        let v = (1u64 << 60) + 12345;
        let x = ExtReal::from_u64(v);
        // hi + lo must reconstruct v exactly.
        assert_eq!(x.hi() as i128 + x.lo() as i128, v as i128);
    }

    #[test]
    fn ldexp_scales_exactly() {
        let x = ExtReal::PI;
        let y = x.ldexp(-7).ldexp(7);
        assert_eq!(x.hi().to_bits(), y.hi().to_bits());
        assert_eq!(x.lo().to_bits(), y.lo().to_bits());
    }

    #[test]
    fn sqrt_of_four_is_two() {
        let r = ExtReal::from_f64(4.0).sqrt();
        assert_eq!(r.hi(), 2.0);
        assert_eq!(r.lo(), 0.0);
    }

    #[test]
    fn floor_sees_the_low_limb() {
        // 1 - 2^-80: hi = 1.0, lo < 0, true floor is 0.
        let x = ExtReal::from_parts(1.0, -(2.0f64).powi(-80));
        assert_eq!(x.floor().to_f64(), 0.0);
        let y = ExtReal::from_parts(1.0, (2.0f64).powi(-80));
        assert_eq!(y.floor().to_f64(), 1.0);
    }

    #[test]
    fn comparison_uses_both_limbs() {
        let a = ExtReal::from_parts(1.0, 1e-20);
        let b = ExtReal::from_parts(1.0, 2e-20);
        assert!(a < b);
        assert!(b > a);
        assert!(a == a);
    }
}
