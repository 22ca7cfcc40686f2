//! Identity and cross-oracle checks for the trigonometric kernels.
//!
//! Three independent routes produce sines and cosines here — the Taylor
//! kernel behind `sincos_pi_residue`/`sincos_small`, the half-angle descent
//! behind `cospi_frac`, and the big-integer series in `fixp` — and the
//! tests force them to agree. Identity tolerances are the contractual
//! 1e-26; route-vs-route comparisons run tighter because both sides claim
//! 1e-27 relative.

use extprec::{cospi_frac, one_minus_cos, pi_ext, sincos_pi_residue, sincos_small, ExtReal};
use fixp::Fx;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDENTITY_TOL: f64 = 1e-26;

fn pythagorean_defect(cos: ExtReal, sin: ExtReal) -> f64 {
    cos.sqr().add(sin.sqr()).sub_f64(1.0).abs().hi()
}

#[test]
fn descent_angles_satisfy_pythagoras() {
    for q in [1u32, 3] {
        for j in 0..=64u32 {
            let sc = cospi_frac(j, q).unwrap();
            let defect = pythagorean_defect(sc.cos, sc.sin);
            assert!(
                defect <= IDENTITY_TOL,
                "cos²+sin² defect {defect:.2e} at j={j}, q={q}"
            );
        }
    }
}

#[test]
fn residue_angles_satisfy_pythagoras() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7419_0001);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=(1u64 << 40));
        let r = rng.gen_range(0..2 * n);
        let sc = sincos_pi_residue(r, n);
        let defect = pythagorean_defect(sc.cos, sc.sin);
        assert!(defect <= IDENTITY_TOL, "defect {defect:.2e} at r={r}, n={n}");
        // The cancellation-free 1−cos must match an outright subtraction
        // at this absolute scale.
        let omc_direct = ExtReal::ONE.sub(sc.cos);
        let d = sc.one_minus_cos.sub(omc_direct).abs().hi();
        assert!(d <= IDENTITY_TOL, "one_minus_cos inconsistent at r={r}, n={n}");
    }
}

#[test]
fn folded_angles_satisfy_pythagoras() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7419_0002);
    for _ in 0..1000 {
        let x = ExtReal::from_f64(rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI));
        let sc = sincos_small(x).unwrap();
        let defect = pythagorean_defect(sc.cos, sc.sin);
        assert!(defect <= IDENTITY_TOL, "defect {defect:.2e} at x={}", x.hi());
    }
}

#[test]
fn half_angle_consistency_down_the_descent() {
    // cospi_frac(j+1,q).cos must equal sqrt((1+cospi_frac(j,q).cos)/2):
    // this is the defining recurrence, re-checked through the public API.
    for q in [1u32, 3] {
        for j in 0..=63u32 {
            let parent = cospi_frac(j, q).unwrap();
            let child = cospi_frac(j + 1, q).unwrap();
            let expected = parent.cos.add_f64(1.0).ldexp(-1).sqrt();
            let d = child.cos.sub(expected).abs().hi();
            assert!(d <= IDENTITY_TOL, "half-angle defect {d:.2e} at j={j}, q={q}");
        }
    }
}

#[test]
fn one_minus_cos_is_strictly_increasing_on_zero_pi() {
    let n = 1000;
    let mut prev = one_minus_cos(ExtReal::ZERO).unwrap();
    assert!(prev.is_zero());
    for i in 1..=n {
        let x = pi_ext().mul_f64(i as f64).div_f64(n as f64);
        let cur = one_minus_cos(x).unwrap();
        assert!(
            cur.cmp_ext(prev) == core::cmp::Ordering::Greater,
            "one_minus_cos not strictly increasing at sample {i}"
        );
        prev = cur;
    }
    // Endpoint: 1 − cos π = 2.
    assert!(prev.sub_f64(2.0).abs().hi() < 1e-26);
}

#[test]
fn residue_path_matches_big_integer_oracle() {
    // fixp sums the Taylor series in decimal fixed point with exact
    // integer angle reduction — a fully independent route to cos(π a/b).
    const SCALE: u32 = 45;
    let eps = Fx::eps(26, SCALE);
    for (a, b) in [
        (0u64, 1u64),
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 5),
        (3, 7),
        (5, 12),
        (7, 8),
        (123, 1024),
        (999, 1000),
        (12345, 99991),
        (99990, 99991),
    ] {
        let (oc, os) = fixp::cos_sin_pi_ratio(a, b, SCALE);
        let sc = sincos_pi_residue(a % (2 * b), b);
        let dc = fx_of_ext(sc.cos, SCALE).sub(&oc).abs();
        let ds = fx_of_ext(sc.sin, SCALE).sub(&os).abs();
        assert!(
            dc.cmp_fx(&eps) != std::cmp::Ordering::Greater,
            "cos(π·{a}/{b}) differs from oracle by {dc:?}"
        );
        assert!(
            ds.cmp_fx(&eps) != std::cmp::Ordering::Greater,
            "sin(π·{a}/{b}) differs from oracle by {ds:?}"
        );
    }
}

#[test]
fn descent_and_kernel_agree_at_dyadic_angles() {
    // Same angle π/(q·2^j) through both implementations. Relative
    // comparison: at j = 40 the sine is ~7e-13 and must still carry
    // 27 correct digits.
    for q in [1u64, 3] {
        for j in 0..=40u32 {
            let d = cospi_frac(j, q as u32).unwrap();
            let r = sincos_pi_residue(1, q << j);
            let dc = d.cos.sub(r.cos).abs().hi();
            assert!(dc <= 1e-26, "cos mismatch {dc:.2e} at j={j}, q={q}");
            if !d.sin.is_zero() {
                let rel = d.sin.sub(r.sin).div(d.sin).abs().hi();
                assert!(rel <= 1e-26, "sin rel mismatch {rel:.2e} at j={j}, q={q}");
            }
        }
    }
}

#[test]
fn point_values_from_the_contract() {
    // θ = π/2.
    let sc = cospi_frac(1, 1).unwrap();
    assert!(sc.cos.is_zero());
    assert_eq!(sc.sin.to_f64(), 1.0);

    // θ = π/4: both coordinates are √2/2.
    let sc = cospi_frac(2, 1).unwrap();
    let root_half = ExtReal::from_f64(2.0).sqrt().ldexp(-1);
    assert!(sc.cos.sub(root_half).abs().hi() < 1e-27);
    assert!(sc.sin.sub(root_half).abs().hi() < 1e-27);

    // θ = π/6: (√3/2, 1/2).
    let sc = cospi_frac(1, 3).unwrap();
    let root3_half = ExtReal::from_f64(3.0).sqrt().ldexp(-1);
    assert!(sc.cos.sub(root3_half).abs().hi() < 1e-27);
    assert!(sc.sin.sub(ExtReal::from_f64(0.5)).abs().hi() < 1e-27);

    // sincos_small(0) and at π/2 built by halving the stored π.
    let sc = sincos_small(ExtReal::ZERO).unwrap();
    assert_eq!(sc.cos.to_f64(), 1.0);
    assert!(sc.sin.is_zero());
    let sc = sincos_small(pi_ext().ldexp(-1)).unwrap();
    assert!(sc.cos.abs().hi() <= 1e-27);
    assert!(sc.sin.sub_f64(1.0).abs().hi() <= 1e-27);

    // sin at the stored π after the fold: ≤ 1e-27 in magnitude.
    let sc = sincos_small(pi_ext()).unwrap();
    assert!(sc.sin.abs().hi() <= 1e-27);
}

fn fx_of_ext(x: ExtReal, scale: u32) -> Fx {
    Fx::from_f64_exact(x.hi(), scale).add(&Fx::from_f64_exact(x.lo(), scale))
}
