//! Decimal string conversion for [`ExtReal`].
//!
//! `to_decimal` renders round-to-nearest scientific strings with up to 30
//! significant digits — the full useful precision of the format — and
//! `parse_decimal` reads them back, so values can cross a text boundary
//! (golden files, certificates) without dropping below f64×f64 accuracy.
//!
//! The extraction scales the value into [1, 10) using powers of ten that
//! are held *exactly* (10^k for k ≤ 31 fits in the 106-bit significand and
//! is constructed from u128 integers, not by repeated rounded multiplies),
//! then peels one digit at a time with exact subtractions. Two guard digits
//! absorb the ~10^-31 extraction noise before rounding at the requested
//! position.

use crate::real::ExtReal;
use crate::MathError;

/// Largest power of ten that fits exactly in a double-double (103 bits).
const EXACT_POW10_LIMIT: u32 = 31;

/// 10^k held exactly, k ≤ 31. Built from the u128 integer so no rounding
/// sequence is trusted.
fn pow10_exact(k: u32) -> ExtReal {
    debug_assert!(k <= EXACT_POW10_LIMIT);
    let v = 10u128.pow(k);
    let hi = v as f64;
    let rest = (v as i128 - hi as i128) as f64;
    ExtReal::from_parts(hi, rest)
}

/// 10^k for 0 ≤ k ≤ 280, as a short product of exact 31-digit blocks
/// (at most 9 rounded multiplies).
fn pow10_blocks(k: u32) -> ExtReal {
    debug_assert!(k <= 280);
    let mut acc = pow10_exact(k % EXACT_POW10_LIMIT);
    let block = pow10_exact(EXACT_POW10_LIMIT);
    for _ in 0..k / EXACT_POW10_LIMIT {
        acc = acc.mul(block);
    }
    acc
}

/// x · 10^s without ever materializing an overflowing power: the chunked
/// factors always move the value toward [1, 10), so intermediates stay in
/// range whenever the result does.
fn scale_by_pow10(x: ExtReal, s: i32) -> ExtReal {
    let mut y = x;
    let mut s = s;
    while s > 250 {
        y = y.mul(pow10_blocks(250));
        s -= 250;
    }
    while s < -250 {
        y = y.div(pow10_blocks(250));
        s += 250;
    }
    if s >= 0 {
        y.mul(pow10_blocks(s as u32))
    } else {
        y.div(pow10_blocks((-s) as u32))
    }
}

/// Renders `x` as `[-]d.ddd…e±E` (scientific, lowercase e, no exponent
/// padding) with `digits` significant digits, rounded to nearest.
///
/// `digits` must be in 1..=30; the trailing zeros of the mantissa are kept
/// so output width is a function of `digits` alone — golden files depend
/// on that. Zero renders as `0e0` (with the usual fractional zeros).
pub fn to_decimal(x: ExtReal, digits: usize) -> String {
    assert!(
        (1..=30).contains(&digits),
        "supported precision is 1..=30 digits, got {digits}"
    );
    assert!(x.is_finite(), "cannot render a non-finite value");

    let mut out = String::with_capacity(digits + 8);
    if x.is_zero() {
        push_mantissa(&mut out, &vec![0u8; digits]);
        out.push_str("e0");
        return out;
    }
    if x.is_negative() {
        out.push('-');
    }
    let ax = x.abs();

    // Scale into [1, 10); the log10 estimate can be off by one either way.
    let mut e10 = ax.hi().log10().floor() as i32;
    let mut v = scale_by_pow10(ax, -e10);
    let ten = ExtReal::from_f64(10.0);
    while v.cmp_ext(ExtReal::ONE) == core::cmp::Ordering::Less {
        v = v.mul_f64(10.0);
        e10 -= 1;
    }
    while v.cmp_ext(ten) != core::cmp::Ordering::Less {
        v = v.div_f64(10.0);
        e10 += 1;
    }

    // Peel digits+2 digits; the two guards soak up extraction noise.
    let mut ds: Vec<i8> = Vec::with_capacity(digits + 2);
    let mut cur = v;
    for _ in 0..digits + 2 {
        let mut d = cur.hi().floor();
        let mut rem = cur.sub_f64(d);
        if rem.is_negative() {
            d -= 1.0;
            rem = rem.add_f64(1.0);
        } else if rem.cmp_ext(ExtReal::ONE) != core::cmp::Ordering::Less {
            d += 1.0;
            rem = rem.sub_f64(1.0);
        }
        ds.push(d as i8);
        cur = rem.mul_f64(10.0);
    }

    // Resolve transient 10s left by rounding at a digit boundary.
    for i in (1..ds.len()).rev() {
        if ds[i] >= 10 {
            ds[i] -= 10;
            ds[i - 1] += 1;
        }
    }

    // Round to `digits` using the first guard digit (nearest, ties away).
    if ds[digits] >= 5 {
        let mut i = digits;
        loop {
            if i == 0 {
                // 9.99…9 rounded up: shift the exponent instead.
                ds.insert(0, 1);
                e10 += 1;
                break;
            }
            i -= 1;
            ds[i] += 1;
            if ds[i] < 10 {
                break;
            }
            ds[i] = 0;
        }
    }
    ds.truncate(digits);

    push_mantissa(&mut out, &ds.iter().map(|&d| d as u8).collect::<Vec<_>>());
    out.push('e');
    out.push_str(&e10.to_string());
    out
}

fn push_mantissa(out: &mut String, ds: &[u8]) {
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        for &d in &ds[1..] {
            out.push((b'0' + d) as char);
        }
    }
}

/// Parses the format emitted by [`to_decimal`] (also accepting plain
/// integers and fixed-point forms without an exponent).
///
/// # Errors
/// [`MathError::Argument`] on empty or malformed input.
pub fn parse_decimal(s: &str) -> Result<ExtReal, MathError> {
    let malformed = MathError::Argument("malformed decimal literal");
    let s = s.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa_str, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| malformed)?),
        None => (body, 0),
    };
    let mut mantissa = ExtReal::ZERO;
    let mut frac_digits: i32 = 0;
    let mut seen_dot = false;
    let mut seen_digit = false;
    let mut absorbed = 0u32;
    for ch in mantissa_str.chars() {
        match ch {
            '0'..='9' => {
                seen_digit = true;
                // Digits beyond double-double resolution only shift scale.
                if absorbed < 34 {
                    mantissa = mantissa.mul_f64(10.0).add_f64((ch as u8 - b'0') as f64);
                    absorbed += 1;
                    if seen_dot {
                        frac_digits += 1;
                    }
                } else if !seen_dot {
                    frac_digits -= 1;
                }
            }
            '.' if !seen_dot => seen_dot = true,
            _ => return Err(malformed),
        }
    }
    if !seen_digit {
        return Err(malformed);
    }
    let value = scale_by_pow10(mantissa, exp - frac_digits);
    Ok(if negative { -value } else { value })
}
