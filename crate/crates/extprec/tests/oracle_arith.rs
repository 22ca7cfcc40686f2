//! Exhaustive-by-sampling check of the core arithmetic against exact
//! rational numbers.
//!
//! Every double-double value is a dyadic rational, so `hi + lo` converts to
//! a `BigRational` without loss and the add/sub/mul results can be compared
//! against exact arithmetic. The contract under test: relative error at
//! most 1e-28 per operation (the implementation should sit near 1e-31; the
//! slack is deliberate so the test pins the *contract*, not the algorithm).

use extprec::ExtReal;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PAIRS: usize = 100_000;

fn rational_of(x: ExtReal) -> BigRational {
    BigRational::from_float(x.hi()).unwrap() + BigRational::from_float(x.lo()).unwrap()
}

/// Random normalized double-double with exponent spread wide enough to
/// exercise limb alignment, but far from overflow.
fn random_ext(rng: &mut ChaCha8Rng) -> ExtReal {
    let exp: i32 = rng.gen_range(-40..=40);
    let m: f64 = rng.gen_range(1.0..2.0);
    let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
    let hi = sign * m * (2.0f64).powi(exp);
    let lo = hi * rng.gen_range(-0.5..0.5) * (2.0f64).powi(-52);
    ExtReal::from_parts(hi, lo)
}

fn assert_rel_within_1e28(got: ExtReal, exact: &BigRational, what: &str) {
    let got = rational_of(got);
    if exact.is_zero() {
        assert!(got.is_zero(), "{what}: exact result is 0, got {got}");
        return;
    }
    let err = (got - exact).abs();
    // err / |exact| <= 1e-28  <=>  err * 10^28 <= |exact|
    let scaled = err * BigRational::from_integer(BigInt::from(10u32).pow(28));
    assert!(
        scaled <= exact.abs(),
        "{what}: relative error above 1e-28"
    );
}

#[test]
fn add_sub_mul_match_exact_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11_5eed);
    for i in 0..PAIRS {
        let a = random_ext(&mut rng);
        let b = random_ext(&mut rng);
        let (ra, rb) = (rational_of(a), rational_of(b));

        assert_rel_within_1e28(a + b, &(ra.clone() + rb.clone()), &format!("pair {i}: add"));
        assert_rel_within_1e28(a - b, &(ra.clone() - rb.clone()), &format!("pair {i}: sub"));
        assert_rel_within_1e28(a * b, &(ra.clone() * rb.clone()), &format!("pair {i}: mul"));
    }
}

#[test]
fn division_matches_exact_rationals() {
    // Division is also exactly representable in rationals; sampled lighter
    // because the quotient's denominator makes the comparison costlier.
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1b1_5eed);
    for i in 0..10_000 {
        let a = random_ext(&mut rng);
        let b = random_ext(&mut rng);
        assert_rel_within_1e28(
            a / b,
            &(rational_of(a) / rational_of(b)),
            &format!("pair {i}: div"),
        );
    }
}

#[test]
fn forced_cancellation_keeps_relative_accuracy() {
    // a and b agreeing to ~50 bits: the exact difference is ~2^-50 of the
    // operands, and the accurate two-limb sum must still deliver it to
    // 1e-28 *of the difference*.
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe_f00d);
    for i in 0..10_000 {
        let a = random_ext(&mut rng);
        let delta = a.mul_f64(rng.gen_range(0.25..1.0) * (2.0f64).powi(-50));
        let b = a.add(delta);
        assert_rel_within_1e28(
            b - a,
            &(rational_of(b) - rational_of(a)),
            &format!("pair {i}: cancelling sub"),
        );
    }
}

#[test]
fn sqrt_squares_back_to_the_radicand() {
    // sqrt has no exact rational counterpart; instead verify r*r ≈ x with
    // the squaring error budgeted on top (3e-28 total allows 1e-28 for the
    // square and 2·1e-28 for the root).
    let mut rng = ChaCha8Rng::seed_from_u64(0x5042_0075);
    for _ in 0..10_000 {
        let x = random_ext(&mut rng).abs();
        let r = x.sqrt();
        let back = rational_of(r).pow(2);
        let exact = rational_of(x);
        let err = (back - exact.clone()).abs();
        let scaled = err * BigRational::from_integer(BigInt::from(10u32).pow(28));
        assert!(scaled <= exact.abs() * BigInt::from(3), "sqrt drifted");
    }
}
