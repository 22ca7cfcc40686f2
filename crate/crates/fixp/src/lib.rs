//! Exact decimal fixed-point arithmetic over big integers.
//!
//! A [`Fx`] holds `mant / 10^scale` with `mant: BigInt`. Every operation is
//! plain integer arithmetic with one final rounding to the value's scale, so
//! results are reproducible digit-for-digit on any platform. Nothing here is
//! fast; the point is to have a referee that shares no code, no representation
//! and no rounding behaviour with the floating-point implementations it
//! checks. Transcendental functions are evaluated by series whose truncation
//! error is driven below the last retained digit.
//!
//! Typical use is at 40–55 digits, comparing against double-double results
//! that claim 28+.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Decimal fixed-point number: `mant / 10^scale`.
///
/// Operations on mixed scales are a programming error and panic; all values
/// participating in one computation should be built with the same scale.
#[derive(Clone, PartialEq, Eq)]
pub struct Fx {
    mant: BigInt,
    scale: u32,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Round `num / den` to the nearest integer, ties away from zero.
///
/// Round-half-away keeps the rule sign-symmetric, which makes series
/// summation of alternating terms behave identically for both signs.
fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    debug_assert!(den.is_positive());
    let (q, r) = num.div_rem(den);
    if &r.abs() * 2 >= *den {
        if num.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Fx {
    pub fn zero(scale: u32) -> Self {
        Fx { mant: BigInt::zero(), scale }
    }

    pub fn int(v: i64, scale: u32) -> Self {
        Fx { mant: BigInt::from(v) * pow10(scale), scale }
    }

    /// Exact rational `p / q`, rounded once to the scale.
    pub fn ratio(p: i64, q: i64, scale: u32) -> Self {
        assert!(q != 0, "zero denominator");
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        let num = BigInt::from(p) * pow10(scale);
        Fx { mant: div_round(&num, &BigInt::from(q)), scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    fn check(&self, other: &Fx) {
        assert_eq!(self.scale, other.scale, "mixed fixed-point scales");
    }

    pub fn add(&self, other: &Fx) -> Fx {
        self.check(other);
        Fx { mant: &self.mant + &other.mant, scale: self.scale }
    }

    pub fn sub(&self, other: &Fx) -> Fx {
        self.check(other);
        Fx { mant: &self.mant - &other.mant, scale: self.scale }
    }

    pub fn neg(&self) -> Fx {
        Fx { mant: -&self.mant, scale: self.scale }
    }

    pub fn abs(&self) -> Fx {
        Fx { mant: self.mant.abs(), scale: self.scale }
    }

    pub fn mul(&self, other: &Fx) -> Fx {
        self.check(other);
        let num = &self.mant * &other.mant;
        Fx { mant: div_round(&num, &pow10(self.scale)), scale: self.scale }
    }

    pub fn div(&self, other: &Fx) -> Fx {
        self.check(other);
        assert!(!other.mant.is_zero(), "fixed-point division by zero");
        let num = &self.mant * pow10(self.scale);
        Fx { mant: div_round(&num, &other.mant), scale: self.scale }
    }

    /// Multiply by a small integer (exact, no rounding).
    pub fn mul_int(&self, k: i64) -> Fx {
        Fx { mant: &self.mant * BigInt::from(k), scale: self.scale }
    }

    /// Divide by a small integer with one rounding.
    pub fn div_int(&self, k: i64) -> Fx {
        assert!(k != 0);
        let (mant, k) = if k < 0 { (-&self.mant, -k) } else { (self.mant.clone(), k) };
        Fx { mant: div_round(&mant, &BigInt::from(k)), scale: self.scale }
    }

    /// Nonnegative square root via integer Newton iteration on `mant * 10^scale`.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.mant.is_negative(), "sqrt of negative value");
        if self.mant.is_zero() {
            return self.clone();
        }
        let target = &self.mant * pow10(self.scale);
        // Newton for isqrt: x_{k+1} = (x_k + target/x_k) / 2, monotone from above.
        let bits = target.bits();
        let mut x = BigInt::from(1u32) << (bits / 2 + 1);
        loop {
            let next = (&x + &target / &x) >> 1;
            if next >= x {
                break;
            }
            x = next;
        }
        // x = floor(sqrt(target)); pick the closer of x, x+1.
        let up: BigInt = &x + 1;
        let mant = if (&up * &up - &target).abs() < (&target - &x * &x).abs() { up } else { x };
        Fx { mant, scale: self.scale }
    }

    /// Exact value of a finite `f64` (the dyadic rational its bits encode),
    /// with a single rounding to the target scale.
    ///
    /// This is how floating-point results enter the referee: no decimal
    /// round trip, no accumulated conversions.
    pub fn from_f64_exact(v: f64, scale: u32) -> Fx {
        assert!(v.is_finite(), "cannot ingest a non-finite float");
        let bits = v.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074i64) // subnormal: no implicit bit
        } else {
            (frac | (1 << 52), biased - 1075)
        };
        let mut num = BigInt::from(m) * pow10(scale);
        if negative {
            num = -num;
        }
        let mant = if e >= 0 {
            num << e
        } else {
            div_round(&num, &(BigInt::from(1u32) << (-e) as usize))
        };
        Fx { mant, scale }
    }

    /// `10^-k` at this value's scale.
    pub fn eps(k: u32, scale: u32) -> Fx {
        assert!(k <= scale);
        Fx { mant: pow10(scale - k), scale }
    }

    /// True when `|self - other| <= 10^-digits`.
    pub fn agrees(&self, other: &Fx, digits: u32) -> bool {
        self.sub(other).abs().cmp_fx(&Fx::eps(digits, self.scale)) != Ordering::Greater
    }

    pub fn cmp_fx(&self, other: &Fx) -> Ordering {
        self.check(other);
        self.mant.cmp(&other.mant)
    }

    /// Decimal string with all `scale` fractional digits (no rounding applied).
    pub fn to_decimal_full(&self) -> String {
        let neg = self.mant.is_negative();
        let digits = self.mant.abs().to_string();
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale - digits.len() + 1), digits)
        } else {
            digits
        };
        let point = padded.len() - scale;
        format!("{}{}.{}", if neg { "-" } else { "" }, &padded[..point], &padded[point..])
    }

    /// Leading significant digits as a plain string, for comparisons against
    /// published constants: `"3.14159..."` -> `"314159..."`.
    pub fn significant_digits(&self, count: usize) -> String {
        let s = self.mant.abs().to_string();
        s.chars().take(count).collect()
    }

    /// Approximate conversion; fine for diagnostics, not used in checks.
    pub fn to_f64(&self) -> f64 {
        let s = self.to_decimal_full();
        s.parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for Fx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fx({})", self.to_decimal_full())
    }
}

/// π by Machin's formula: π = 16·atan(1/5) − 4·atan(1/239).
///
/// atan(1/x) is summed as Σ (−1)^k / ((2k+1) x^(2k+1)) in integers carrying
/// eight guard digits, so the returned scale is fully correct.
pub fn pi(scale: u32) -> Fx {
    let guard = scale + 8;
    let atan_inv = |x: i64| -> BigInt {
        let one = pow10(guard);
        let x2 = BigInt::from(x) * BigInt::from(x);
        let mut term = &one / BigInt::from(x);
        let mut sum = term.clone();
        let mut k = 1u32;
        while !term.is_zero() {
            term = &term / &x2;
            if term.is_zero() {
                break;
            }
            let contrib = &term / BigInt::from(2 * k + 1);
            if k % 2 == 1 {
                sum -= &contrib;
            } else {
                sum += &contrib;
            }
            k += 1;
        }
        sum
    };
    let raw = atan_inv(5) * 16 - atan_inv(239) * 4;
    Fx { mant: div_round(&raw, &pow10(8)), scale }
}

/// e = Σ 1/k!, truncated when the reciprocal factorial underflows the guard.
pub fn e(scale: u32) -> Fx {
    let guard = scale + 8;
    let mut term = pow10(guard);
    let mut sum = term.clone();
    let mut k = 1u64;
    while !term.is_zero() {
        term = term / BigInt::from(k);
        sum += &term;
        k += 1;
    }
    Fx { mant: div_round(&sum, &pow10(8)), scale }
}

/// exp(x) for |x| ≤ 16: scale the argument down to |y| < 1/32 by halving,
/// sum the Taylor series, then square back up.
pub fn exp(x: &Fx) -> Fx {
    let scale = x.scale;
    assert!(
        x.abs().cmp_fx(&Fx::int(16, scale)) != Ordering::Greater,
        "exp argument out of supported range"
    );
    let mut halvings = 0u32;
    let mut y = x.clone();
    let limit = Fx::ratio(1, 32, scale);
    while y.abs().cmp_fx(&limit) == Ordering::Greater {
        y = y.div_int(2);
        halvings += 1;
    }
    // Σ y^k / k!  — with |y| < 1/32 roughly three digits are gained per term.
    let mut term = Fx::int(1, scale);
    let mut sum = term.clone();
    let mut k = 1i64;
    while !term.mant.is_zero() {
        term = term.mul(&y).div_int(k);
        sum = sum.add(&term);
        k += 1;
    }
    for _ in 0..halvings {
        sum = sum.mul(&sum);
    }
    sum
}

/// Natural log on (0, 4]: ln x = 2·atanh((x−1)/(x+1)).
///
/// The atanh series Σ u^(2k+1)/(2k+1) converges geometrically with ratio
/// u² ≤ 9/25 on this domain, which is all the argument range the reference
/// computations need (moduli of averaged exponentials and their squares).
pub fn ln(x: &Fx) -> Fx {
    let scale = x.scale;
    assert!(x.mant.is_positive(), "ln of non-positive value");
    assert!(x.cmp_fx(&Fx::int(4, scale)) != Ordering::Greater, "ln argument above 4");
    let one = Fx::int(1, scale);
    let u = x.sub(&one).div(&x.add(&one));
    let u2 = u.mul(&u);
    let mut term = u.clone();
    let mut sum = u.clone();
    let mut k = 1i64;
    while !term.mant.is_zero() {
        term = term.mul(&u2);
        if term.mant.is_zero() {
            break;
        }
        sum = sum.add(&term.div_int(2 * k + 1));
        k += 1;
    }
    sum.mul_int(2)
}

/// (cos, sin) of θ = π·a/b for integers 0 ≤ a, b ≥ 1, by direct Taylor
/// summation after exact reduction of a mod 2b.
///
/// The series runs on θ ∈ [0, 2π) where the largest term is ≈ 85, costing two
/// of the eight guard digits; alternation does the rest.
pub fn cos_sin_pi_ratio(a: u64, b: u64, scale: u32) -> (Fx, Fx) {
    assert!(b >= 1);
    let a = a % (2 * b);
    let guard_scale = scale + 8;
    let theta = pi(guard_scale).mul_int(a as i64).div_int(b as i64);
    let theta2 = theta.mul(&theta);
    // cos: Σ (−1)^k θ^(2k)/(2k)!,  sin: Σ (−1)^k θ^(2k+1)/(2k+1)!
    let mut cos_term = Fx::int(1, guard_scale);
    let mut cos_sum = cos_term.clone();
    let mut sin_term = theta.clone();
    let mut sin_sum = sin_term.clone();
    let mut k = 1i64;
    loop {
        cos_term = cos_term.mul(&theta2).div_int((2 * k - 1) * (2 * k)).neg();
        sin_term = sin_term.mul(&theta2).div_int((2 * k) * (2 * k + 1)).neg();
        if cos_term.mant.is_zero() && sin_term.mant.is_zero() {
            break;
        }
        cos_sum = cos_sum.add(&cos_term);
        sin_sum = sin_sum.add(&sin_term);
        k += 1;
    }
    (rescale(&cos_sum, scale), rescale(&sin_sum, scale))
}

fn rescale(x: &Fx, scale: u32) -> Fx {
    assert!(x.scale >= scale);
    Fx { mant: div_round(&x.mant, &pow10(x.scale - scale)), scale }
}
