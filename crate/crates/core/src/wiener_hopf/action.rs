//! The action `u ⊞ a` of the cone on `[−1, 1]`, by two independent routes.

use super::point::{BoundaryPoint, CompactifiedPoint};
use super::transform::{embed, represent};
use crate::algebra::{cone_classify, identity, inverse, min_eigenvalue, quad, ConeClass, Element};
use crate::error::{Error, Result};

fn require_cone(a: &Element) -> Result<()> {
    if cone_classify(a)? == ConeClass::Outside {
        return Err(Error::NotInCone { min_eigenvalue: min_eigenvalue(a)? });
    }
    Ok(())
}

/// `u ⊞ a = 1 − 2ũ + 2P(ũ)(ũ + a⁻¹)⁻¹` with `ũ = (1 − u)/2`, for `a ∈ Ω`.
pub fn act_direct(u: &CompactifiedPoint, a: &Element) -> Result<CompactifiedPoint> {
    u.element().check_same(a)?;
    if cone_classify(a)? != ConeClass::Interior {
        return Err(Error::NotInteriorCone { min_eigenvalue: min_eigenvalue(a)? });
    }
    let one = identity(a.algebra());
    let ut = (&one - u.element()).scale(0.5);
    let inner = inverse(&(&ut + &inverse(a)?))?;
    let r = &(&one - &ut.scale(2.0)) + &quad(&ut).apply(&inner).scale(2.0);
    Ok(CompactifiedPoint::from_element_unchecked(r))
}

/// `i(e, x) ⊞ a = i(e, x + P(e⊥)a)`, valid for every `a ∈ Q`.
pub fn act(u: &CompactifiedPoint, a: &Element) -> Result<CompactifiedPoint> {
    u.element().check_same(a)?;
    require_cone(a)?;
    let p = represent(u)?;
    let y = p.x() + &quad(&p.e_perp()).apply(a);
    let (e, _) = p.into_parts();
    embed(&BoundaryPoint::from_parts_unchecked(e, y))
}

/// Some `v` with `v ⊞ a = u`, when `x − P(e⊥)a ∈ Q` for `(e, x)` representing `u`.
pub fn preimage(u: &CompactifiedPoint, a: &Element) -> Result<Option<CompactifiedPoint>> {
    u.element().check_same(a)?;
    require_cone(a)?;
    let p = represent(u)?;
    let y = p.x() - &quad(&p.e_perp()).apply(a);
    if !cone_classify(&y)?.in_cone() {
        return Ok(None);
    }
    let (e, _) = p.into_parts();
    embed(&BoundaryPoint::from_parts_unchecked(e, y)).map(Some)
}
