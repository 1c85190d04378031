//! Order ideals `A_u`, the open orbit `X₀` and the strict order relative to `i(a)`.

use super::action::act;
use super::point::{BoundaryPoint, CompactifiedPoint};
use super::transform::{cayley, embed, represent};
use crate::algebra::{cone_classify, identity, quad, ConeClass, Element};
use crate::error::{Error, Result};
use crate::spectral::{spectral_decompose, spectrum_contains};

/// `a ∈ A_u ⟺ x + P(e⊥)a ≥ 0` where `(e, x)` represents `u`.
pub fn a_set_member(u: &CompactifiedPoint, a: &Element) -> Result<bool> {
    u.element().check_same(a)?;
    let p = represent(u)?;
    Ok(cone_classify(&(p.x() + &quad(&p.e_perp()).apply(a)))?.in_cone())
}

/// Data exhibiting `a ∈ A_u`: `a = a1 − a2` with `a1, a2 ∈ Ω` and `u ⊞ a1 = v ⊞ a2`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderWitness {
    pub a1: Element,
    pub a2: Element,
    pub v: CompactifiedPoint,
}

/// Builds the witness with `a2 = (1 + ρ(a))·1`, `ρ` the spectral radius,
/// so that `a1 = a + a2` has spectrum in `[1, ∞)`.
pub fn a_set_witness(u: &CompactifiedPoint, a: &Element) -> Result<OrderWitness> {
    if !a_set_member(u, a)? {
        return Err(Error::NotMember);
    }
    let radius = spectral_decompose(a)?.eigenvalues().iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let a2 = identity(a.algebra()).scale(1.0 + radius);
    let a1 = a + &a2;
    if cone_classify(&a1)? != ConeClass::Interior {
        return Err(Error::InvariantViolated("a + c is not in the open cone".into()));
    }
    let p = represent(u)?;
    let y = p.x() + &quad(&p.e_perp()).apply(a);
    let (e, _) = p.into_parts();
    let v = embed(&BoundaryPoint::from_parts_unchecked(e, y))?;
    Ok(OrderWitness { a1, a2, v })
}

/// Checks `u ⊞ a1 = v ⊞ a2` for a witness, returning the distance.
pub fn witness_residual(u: &CompactifiedPoint, w: &OrderWitness) -> Result<f64> {
    Ok(act(u, &w.a1)?.distance(&act(&w.v, &w.a2)?))
}

/// `u ∈ X₀ ⟺ −1 ∉ σ(u)`.
pub fn interior_membership(u: &CompactifiedPoint) -> Result<bool> {
    Ok(!spectrum_contains(u.element(), -1.0)?)
}

/// `u > i(a)`, i.e. `u − i(a) ∈ Ω`.
pub fn dominates(u: &CompactifiedPoint, a: &Element) -> Result<bool> {
    let ia = cayley(a)?;
    Ok(cone_classify(&(u.element() - ia.element()))? == ConeClass::Interior)
}
