//! Piecewise-constant functions on a dyadic grid over `[0,1]` and the
//! multiplication semigroup with the lacunary step symbol.

use num_complex::Complex64;

use crate::carrier::{Carrier, Semigroup};
use crate::sum::{Compensated, CompensatedComplex};
use crate::SimError;

/// Shallowest supported grid: 16 cells, enough to resolve the first four
/// plateaus of the step symbol.
pub const MIN_DEPTH: u32 = 4;
/// Deepest supported grid: 2^24 cells, past which vector workloads grow
/// without buying accuracy the scalar layer doesn't already have.
pub const MAX_DEPTH: u32 = 24;

/// A function on `[0,1]`, constant on each of `2^depth` equal cells.
///
/// `values[j]` is the sample on the j-th cell `[j·2^{-D}, (j+1)·2^{-D})`;
/// integrals over `[0,1]` are therefore plain cell sums scaled by
/// `2^{-D}`, which is exact for the piecewise-constant class.
#[derive(Clone, Debug)]
pub struct GridFunction {
    depth: u32,
    values: Vec<Complex64>,
}

impl GridFunction {
    /// The function constantly equal to `value`.
    ///
    /// Panics when `depth` is outside `[MIN_DEPTH, MAX_DEPTH]`; grid sizes
    /// are a construction-time choice, not runtime data.
    pub fn constant(depth: u32, value: Complex64) -> GridFunction {
        assert!(
            (MIN_DEPTH..=MAX_DEPTH).contains(&depth),
            "grid depth must lie in [{MIN_DEPTH}, {MAX_DEPTH}]"
        );
        GridFunction {
            depth,
            values: vec![value; 1 << depth],
        }
    }

    /// Wrap explicit cell samples; `values.len()` must equal `2^depth`.
    pub fn from_values(depth: u32, values: Vec<Complex64>) -> Result<GridFunction, SimError> {
        if !(MIN_DEPTH..=MAX_DEPTH).contains(&depth) {
            return Err(SimError::Argument("grid depth must lie in [4, 24]"));
        }
        if values.len() != 1usize << depth {
            return Err(SimError::Argument("cell count must equal 2^depth"));
        }
        Ok(GridFunction { depth, values })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    fn zip_with(
        &self,
        other: &GridFunction,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<GridFunction, SimError> {
        if self.depth != other.depth {
            return Err(SimError::Argument(
                "grid operands must share the same depth",
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(GridFunction {
            depth: self.depth,
            values,
        })
    }
}

impl Carrier for GridFunction {
    fn inner_product(&self, other: &GridFunction) -> Result<Complex64, SimError> {
        if self.depth != other.depth {
            return Err(SimError::Argument(
                "grid operands must share the same depth",
            ));
        }
        let mut acc = CompensatedComplex::default();
        for (&a, &b) in self.values.iter().zip(&other.values) {
            acc.add(a * b.conj());
        }
        Ok(acc.value() * (0.5f64).powi(self.depth as i32))
    }

    fn norm(&self) -> f64 {
        let mut acc = Compensated::default();
        for v in &self.values {
            acc.add(v.norm_sqr());
        }
        (acc.value() * (0.5f64).powi(self.depth as i32)).sqrt()
    }

    fn scale(&self, z: Complex64) -> GridFunction {
        GridFunction {
            depth: self.depth,
            values: self.values.iter().map(|&v| v * z).collect(),
        }
    }

    fn sub(&self, other: &GridFunction) -> Result<GridFunction, SimError> {
        self.zip_with(other, |a, b| a - b)
    }
}

/// Multiplication by `e^{ith_D}` where `h_D` is the lacunary step symbol
/// truncated at the grid's own resolution.
///
/// The exact symbol takes the value `2^kπ` on `(2^{-k}, 2^{-k+1}]`. On a
/// depth-D grid the plateaus for `k ≤ D` are unions of whole cells, so
/// the truncation error is confined to the single residual cell
/// `[0, 2^{-D})`, where the symbol is set to 0. Averaging `e^{ih_D/n}`
/// over the grid therefore reproduces the closed-form scalar `c_n` up to
/// the residual cell's own weight plus the discarded series tail —
/// `2·2^{-D}` in modulus, the bound the `simulate` checks assert.
#[derive(Clone, Debug)]
pub struct MultiplicationSemigroup {
    depth: u32,
    h_values: Vec<f64>,
}

impl MultiplicationSemigroup {
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// The truncated symbol, one sample per cell.
    pub fn h_values(&self) -> &[f64] {
        &self.h_values
    }
}

/// Build the truncated multiplication semigroup on a depth-D grid.
///
/// Cell j ≥ 1 spans dyadic coordinates where `⌊log2 j⌋` decides the
/// plateau: the symbol is `2^{D−⌊log2 j⌋}π`. Cell 0 is the residual cell
/// and gets 0.
pub fn build_h(depth: u32) -> Result<MultiplicationSemigroup, SimError> {
    if !(MIN_DEPTH..=MAX_DEPTH).contains(&depth) {
        return Err(SimError::Argument("grid depth must lie in [4, 24]"));
    }
    let h_values = (0u64..1 << depth)
        .map(|j| {
            if j == 0 {
                0.0
            } else {
                let k = depth - j.ilog2();
                (1u64 << k) as f64 * std::f64::consts::PI
            }
        })
        .collect();
    Ok(MultiplicationSemigroup { depth, h_values })
}

impl Semigroup<GridFunction> for MultiplicationSemigroup {
    /// Cellwise phase rotation `v_j ↦ e^{ith_j}v_j`.
    ///
    /// Every symbol value is `2^kπ`, so the phase is reduced exactly:
    /// `th_j/π = t·2^k` is computed first (one rounding, and none at all
    /// for dyadic t), folded modulo 2, and only then multiplied by π.
    /// This keeps phases O(1) for the trig evaluation no matter how large
    /// `t·h` grows, and makes dyadic-step rotations exactly periodic.
    fn apply(&self, t: f64, f: &GridFunction) -> GridFunction {
        assert!(t >= 0.0, "semigroup parameter must be nonnegative");
        assert_eq!(
            self.depth,
            f.depth(),
            "semigroup and argument must share the same grid"
        );
        let values = self
            .h_values
            .iter()
            .zip(f.values())
            .map(|(&h, &v)| {
                // h/π is exactly a power of two (or zero); see above.
                let doublings = t * (h / std::f64::consts::PI);
                let phase = std::f64::consts::PI * (doublings % 2.0);
                v * Complex64::cis(phase)
            })
            .collect();
        GridFunction {
            depth: self.depth,
            values,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU: f64 = std::f64::consts::TAU;

    #[test]
    fn symbol_plateaus_sit_on_the_documented_cells() {
        let s = build_h(4).unwrap();
        let h = s.h_values();
        // Residual cell [0, 1/16): truncated to zero.
        assert_eq!(h[0], 0.0);
        // (1/2, 1] ↔ cells 8..16: first plateau, 2π.
        for j in 8..16 {
            assert_eq!(h[j], TAU);
        }
        // (1/4, 1/2] ↔ cells 4..8: second plateau, 4π.
        for j in 4..8 {
            assert_eq!(h[j], 2.0 * TAU);
        }
        // Deepest resolved plateau is a single cell with 2^4 π.
        assert_eq!(h[1], 8.0 * TAU);
    }

    #[test]
    fn plateau_weights_are_exactly_the_series_weights() {
        // The cells carrying symbol value 2^kπ must have total measure
        // 2^{-k}, so the grid average of e^{ih/n} reproduces the series
        // term weights exactly for k ≤ D.
        let depth = 10;
        let s = build_h(depth).unwrap();
        for k in 1..=depth {
            let target = (1u64 << k) as f64 * std::f64::consts::PI;
            let cells = s.h_values().iter().filter(|&&h| h == target).count();
            assert_eq!(cells as u64, 1u64 << (depth - k), "plateau k={k}");
        }
    }

    #[test]
    fn whole_period_rotations_are_exact_identities() {
        // t = 1 turns every cell by a whole number of periods: with the
        // exact mod-2 reduction the result is bit-for-bit the input.
        let s = build_h(6).unwrap();
        let f = GridFunction::constant(6, Complex64::new(0.3, -1.7));
        let g = s.apply(1.0, &f);
        for (a, b) in f.values().iter().zip(g.values()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rotation_preserves_the_norm_to_machine_precision() {
        let s = build_h(8).unwrap();
        let f = GridFunction::from_values(
            8,
            (0..256)
                .map(|j| Complex64::new((j as f64).sin(), (j as f64 * 0.7).cos()))
                .collect(),
        )
        .unwrap();
        let before = f.norm();
        let after = s.apply(0.371, &f).norm();
        assert!((before - after).abs() <= 1e-13 * before);
    }

    #[test]
    fn mismatched_depths_are_rejected() {
        let f = GridFunction::constant(4, Complex64::new(1.0, 0.0));
        let g = GridFunction::constant(5, Complex64::new(1.0, 0.0));
        assert!(f.inner_product(&g).is_err());
        assert!(f.sub(&g).is_err());
        assert!(build_h(3).is_err());
        assert!(build_h(25).is_err());
        assert!(GridFunction::from_values(4, vec![Complex64::default(); 15]).is_err());
    }
}
