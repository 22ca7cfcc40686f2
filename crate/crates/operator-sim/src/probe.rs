//! Numerical convergence/oscillation probe for the alternation iterates.

use crate::carrier::{Carrier, Semigroup};
use crate::projection::{rank_one_reduction, RankOneProjection};

/// What the probe concluded from the sampled iterates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    /// Successive-iterate differences fell below the threshold and kept
    /// shrinking over the last three schedule points.
    Converged,
    /// The two declared subsequences settled on iterate norms separated
    /// by at least the threshold.
    Oscillating,
    /// Neither pattern was visible on the given schedule.
    Inconclusive,
}

/// One row of the probe's difference table: `n` and `‖f_{2n} − f_n‖`.
#[derive(Clone, Copy, Debug)]
pub struct CauchyRow {
    pub n: u64,
    pub difference: f64,
}

/// One side of an oscillation witness: which subsequence, its deepest
/// sampled index, and the iterate norm observed there.
#[derive(Clone, Copy, Debug)]
pub struct SubsequenceWitness {
    pub label: &'static str,
    pub n: u64,
    pub norm_estimate: f64,
}

/// The probe's full report. A verdict is numerical evidence about the
/// sampled schedule, never a proof: the certified divergence statement
/// comes from the exact scalar analysis, not from here.
#[derive(Clone, Debug)]
pub struct ConvergenceVerdict {
    pub kind: VerdictKind,
    /// Norm of the deepest iterate; populated for converged verdicts.
    pub limit_norm_estimate: Option<f64>,
    /// The two separated subsequences; populated for oscillating verdicts.
    pub witness: Option<[SubsequenceWitness; 2]>,
    pub cauchy_table: Vec<CauchyRow>,
}

impl ConvergenceVerdict {
    fn inconclusive(cauchy_table: Vec<CauchyRow>) -> ConvergenceVerdict {
        ConvergenceVerdict {
            kind: VerdictKind::Inconclusive,
            limit_norm_estimate: None,
            witness: None,
            cauchy_table,
        }
    }
}

/// Sample the alternation `[S(t/n)P]^n f` along a schedule of n values
/// and classify the tail behavior.
///
/// Iterates are computed through [`rank_one_reduction`] — the projection
/// here is always rank one, so the closed form is available and makes
/// million-step indices as cheap as ten-step ones. For every scheduled n
/// the iterate at 2n is also computed, giving the difference table
/// `(n, ‖f_{2n} − f_n‖)`.
///
/// Classification order: convergence first (last three differences below
/// `threshold`, non-increasing), then oscillation (the schedule's entries
/// of shape `2^m` and `3·2^m` — the two subsequences along which the
/// scalar analysis certifies distinct limits — have deepest iterate norms
/// separated by at least `threshold`), else inconclusive.
///
/// Degenerate input never errors, it yields an inconclusive verdict:
/// schedules shorter than 4, not strictly increasing, containing 0, a
/// non-positive or non-finite threshold, or operands living on a
/// different discretization than the projection axis.
pub fn convergence_probe<C: Carrier>(
    semigroup: &impl Semigroup<C>,
    projection: &RankOneProjection<C>,
    t: f64,
    f: &C,
    schedule: &[u64],
    threshold: f64,
) -> ConvergenceVerdict {
    let well_formed = schedule.len() >= 4
        && schedule.windows(2).all(|w| w[0] < w[1])
        && schedule[0] >= 1
        && threshold > 0.0
        && threshold.is_finite();
    if !well_formed {
        return ConvergenceVerdict::inconclusive(Vec::new());
    }

    let axis = projection.axis();
    let mut cauchy_table = Vec::with_capacity(schedule.len());
    let mut norms = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let (near, doubled) = match (
            rank_one_reduction(semigroup, axis, t, n, f),
            rank_one_reduction(semigroup, axis, t, 2 * n, f),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return ConvergenceVerdict::inconclusive(cauchy_table),
        };
        let difference = match doubled.distance(&near) {
            Ok(d) => d,
            Err(_) => return ConvergenceVerdict::inconclusive(cauchy_table),
        };
        cauchy_table.push(CauchyRow { n, difference });
        norms.push(near.norm());
    }

    let tail: Vec<f64> = cauchy_table
        .iter()
        .rev()
        .take(3)
        .rev()
        .map(|row| row.difference)
        .collect();
    let settled = tail.iter().all(|&d| d <= threshold) && tail[0] >= tail[1] && tail[1] >= tail[2];
    if settled {
        return ConvergenceVerdict {
            kind: VerdictKind::Converged,
            limit_norm_estimate: norms.last().copied(),
            witness: None,
            cauchy_table,
        };
    }

    let deepest = |pick: fn(u64) -> bool, label: &'static str| {
        schedule
            .iter()
            .zip(&norms)
            .rev()
            .find(|(&n, _)| pick(n))
            .map(|(&n, &norm_estimate)| SubsequenceWitness {
                label,
                n,
                norm_estimate,
            })
    };
    let pow2 = deepest(|n| n.is_power_of_two(), "pow2");
    let three_pow2 = deepest(|n| n % 3 == 0 && (n / 3).is_power_of_two(), "3pow2");
    if let (Some(a), Some(b)) = (pow2, three_pow2) {
        if (a.norm_estimate - b.norm_estimate).abs() >= threshold {
            return ConvergenceVerdict {
                kind: VerdictKind::Oscillating,
                limit_norm_estimate: None,
                witness: Some([a, b]),
                cauchy_table,
            };
        }
    }

    ConvergenceVerdict::inconclusive(cauchy_table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{build_h, GridFunction};
    use num_complex::Complex64;

    fn one(depth: u32) -> GridFunction {
        GridFunction::constant(depth, Complex64::new(1.0, 0.0))
    }

    /// The full divergence schedule on a deep grid. The two subsequences
    /// have genuinely different scalar limits (≈ 1.67·10⁻³ along 2^m,
    /// ≈ 4.9–6.5·10⁻⁴ along 3·2^m once the grid's own 2·2^{-D} symbol
    /// truncation is folded into the n-th power), so the probe must call
    /// oscillation with a separation near 10⁻³.
    #[test]
    fn divergent_alternation_is_called_oscillating() {
        let depth = 22;
        let s = build_h(depth).unwrap();
        let u = one(depth);
        let p = RankOneProjection::new(u.clone()).unwrap();

        let mut schedule: Vec<u64> = (5..=20).map(|m| 1u64 << m).collect();
        schedule.extend((5..=18).map(|m| 3u64 << m));
        schedule.sort_unstable();

        let verdict = convergence_probe(&s, &p, 1.0, &u, &schedule, 5e-4);
        assert_eq!(verdict.kind, VerdictKind::Oscillating);
        let [a, b] = verdict.witness.expect("oscillating verdicts carry witnesses");
        assert_eq!((a.label, a.n), ("pow2", 1 << 20));
        assert_eq!((b.label, b.n), ("3pow2", 3 << 18));
        let separation = (a.norm_estimate - b.norm_estimate).abs();
        assert!(
            (8.5e-4..1.3e-3).contains(&separation),
            "separation {separation:.6e} drifted from the expected ≈ 10^-3 band"
        );
        assert_eq!(verdict.cauchy_table.len(), schedule.len());
    }

    #[test]
    fn start_orthogonal_to_the_axis_converges_to_zero() {
        let depth = 6;
        let s = build_h(depth).unwrap();
        let u = one(depth);
        let p = RankOneProjection::new(u.clone()).unwrap();
        let saw = GridFunction::from_values(
            depth,
            (0..64)
                .map(|j| Complex64::new(if j % 2 == 0 { 1.0 } else { -1.0 }, 0.0))
                .collect(),
        )
        .unwrap();
        let verdict = convergence_probe(&s, &p, 1.0, &saw, &[2, 4, 8, 16], 1e-9);
        assert_eq!(verdict.kind, VerdictKind::Converged);
        assert!(verdict.limit_norm_estimate.unwrap() <= 1e-14);
    }

    #[test]
    fn degenerate_schedules_are_inconclusive_not_errors() {
        let s = build_h(4).unwrap();
        let u = one(4);
        let p = RankOneProjection::new(u.clone()).unwrap();

        // Too short, not strictly increasing, containing zero, and a
        // useless threshold, respectively.
        for (schedule, threshold) in [
            (&[1u64, 2, 4][..], 1e-6),
            (&[1, 2, 2, 4][..], 1e-6),
            (&[0, 1, 2, 4][..], 1e-6),
            (&[1, 2, 4, 8][..], 0.0),
        ] {
            let verdict = convergence_probe(&s, &p, 1.0, &u, schedule, threshold);
            assert_eq!(verdict.kind, VerdictKind::Inconclusive, "{schedule:?}");
        }
    }
}
