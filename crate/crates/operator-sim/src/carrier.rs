//! The two-trait surface the alternation drivers are generic over.

use num_complex::Complex64;

use crate::SimError;

/// A vector in one of the simulated Hilbert-space discretizations.
///
/// Implementations must make `inner_product` conjugate-linear in `other`
/// and `norm` consistent with it (`‖f‖² = ⟨f,f⟩` up to rounding), so that
/// `f ↦ ⟨f,u⟩·u` is the orthogonal projection onto the span of a unit
/// vector `u`. Operations never mutate in place: carriers are cheap to
/// clone relative to the transforms applied to them, and immutability
/// keeps the n-step drivers trivially re-entrant.
pub trait Carrier: Clone {
    /// Hermitian inner product `⟨self, other⟩`.
    ///
    /// Fails with an argument error when the operands live on different
    /// discretizations (grids of unequal depth).
    fn inner_product(&self, other: &Self) -> Result<Complex64, SimError>;

    /// Hilbert-space norm, accumulated with compensated summation.
    fn norm(&self) -> f64;

    /// Scalar multiple `z·self`.
    fn scale(&self, z: Complex64) -> Self;

    /// Componentwise difference `self − other`; same compatibility
    /// requirement as [`Carrier::inner_product`].
    fn sub(&self, other: &Self) -> Result<Self, SimError>;

    /// `‖self − other‖`, the metric every cross-path comparison uses.
    fn distance(&self, other: &Self) -> Result<f64, SimError> {
        Ok(self.sub(other)?.norm())
    }
}

/// A strongly continuous one-parameter family `S(t)` acting on a carrier.
///
/// Only the properties the alternation needs are demanded: `S(0) = I`,
/// the group/semigroup law in `t`, and contractivity (`‖S(t)f‖ ≤ ‖f‖`;
/// the two concrete simulated families are in fact unitary resp.
/// self-adjoint contractive).
pub trait Semigroup<C: Carrier> {
    /// Apply `S(t)` to `f`. Requires `t ≥ 0` (asserted): the families
    /// simulated here are semigroups, not groups, as far as the contracts
    /// are concerned.
    fn apply(&self, t: f64, f: &C) -> C;
}
