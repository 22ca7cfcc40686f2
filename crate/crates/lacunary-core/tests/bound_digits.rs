//! The four envelope constants, re-derived in fixed point and frozen as
//! 20-digit decimal strings.
//!
//! `bound_constants` builds A₂ = 4 + π²/4, A₃ = 6 + π²/6 − π⁴/4536 and
//! their negative exponentials in double-double arithmetic. Here the same
//! four numbers are built from `fixp`'s integer-mantissa π and exponential
//! at scale 10^{-70}, and the two constructions are required to agree far
//! beyond double precision. The decimal strings pin the values against
//! silent regressions in either arithmetic layer.

use extprec::{to_decimal, ExtReal};
use fixp::{exp, pi, Fx};
use lacunary_core::bound_constants;

const SCALE: u32 = 70;

fn ext_to_fx(x: ExtReal) -> Fx {
    Fx::from_f64_exact(x.hi(), SCALE).add(&Fx::from_f64_exact(x.lo(), SCALE))
}

#[test]
fn constants_agree_with_a_fixed_point_rebuild() {
    let pi2 = pi(SCALE).mul(&pi(SCALE));
    let lower_exp = pi2.div_int(4).add(&Fx::int(4, SCALE));
    let upper_exp = pi2
        .div_int(6)
        .add(&Fx::int(6, SCALE))
        .sub(&pi2.mul(&pi2).div_int(4536));
    let lower_bound = exp(&lower_exp.neg());
    let upper_bound = exp(&upper_exp.neg());

    let c = bound_constants();
    assert!(lower_exp.agrees(&ext_to_fx(c.lower_exponent), 28));
    assert!(upper_exp.agrees(&ext_to_fx(c.upper_exponent), 28));
    assert!(lower_bound.agrees(&ext_to_fx(c.lower_bound), 28));
    assert!(upper_bound.agrees(&ext_to_fx(c.upper_bound), 28));
}

#[test]
fn constants_match_their_frozen_decimal_forms() {
    let c = bound_constants();
    assert_eq!(to_decimal(c.lower_exponent, 20), "6.4674011002723396547e0");
    assert_eq!(to_decimal(c.upper_exponent, 20), "7.6234593995126879803e0");
    assert_eq!(to_decimal(c.lower_bound, 20), "1.5532572517499630958e-3");
    assert_eq!(to_decimal(c.upper_bound, 20), "4.8884778282580699194e-4");
}
