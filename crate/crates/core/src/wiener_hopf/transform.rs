//! The transform `x ↦ (x − 1)/(x + 1)` and the bijection between boundary
//! pairs `(e, x)` and points of `[−1, 1]`.

use super::point::{BoundaryPoint, CompactifiedPoint};
use crate::algebra::{identity, jordan_product, Element};
use crate::error::{Error, Result};
use crate::spectral::{spectral_decompose, subalgebra_inverse};
use crate::tol::{EPS_CONE, EPS_GROUP};

/// `i(x) = (x − 1)/(x + 1)` for `x ∈ Q`.
pub fn cayley(x: &Element) -> Result<CompactifiedPoint> {
    let sd = spectral_decompose(x)?;
    let min = sd.eigenvalues()[0];
    if min < -EPS_CONE * x.norm().max(1.0) {
        return Err(Error::NotInCone { min_eigenvalue: min });
    }
    // Tolerance-level negative eigenvalues are projected onto Q.
    let u = sd.map(|l| {
        let l = l.max(0.0);
        (l - 1.0) / (l + 1.0)
    });
    Ok(CompactifiedPoint::from_element_unchecked(u))
}

/// `i(e, x) = e + ₑ⊥(x + e⊥)⁻¹ ∘ (x − e⊥)`, the inverse taken in `V₁(e⊥)`.
pub fn embed(p: &BoundaryPoint) -> Result<CompactifiedPoint> {
    let e_perp = p.e_perp();
    let w = subalgebra_inverse(&(p.x() + &e_perp), &e_perp)?;
    let v = jordan_product(&w, &(p.x() - &e_perp))?;
    Ok(CompactifiedPoint::from_element_unchecked(p.e() + &v))
}

/// Inverse of [`embed`]: `e` is the spectral projection of `u` at the
/// eigenvalue 1 and `x = Σ (1 + μ)/(1 − μ) fᵢ` over the remaining frame.
pub fn represent(u: &CompactifiedPoint) -> Result<BoundaryPoint> {
    let el = u.element();
    let sd = spectral_decompose(el)?;
    let scale = el.norm().max(1.0);
    let slack = EPS_CONE * scale;
    if sd.eigenvalues()[0] < -1.0 - slack || sd.eigenvalues()[sd.len() - 1] > 1.0 + slack {
        return Err(Error::OutOfInterval);
    }
    let at_one = |mu: f64| (mu - 1.0).abs() <= EPS_GROUP * scale;
    let e = sd.projection(at_one);
    let x = sd.map(|mu| {
        if at_one(mu) {
            0.0
        } else {
            let mu = mu.max(-1.0);
            (1.0 + mu) / (1.0 - mu)
        }
    });
    Ok(BoundaryPoint::from_parts_unchecked(e, x))
}

/// `i(x)` through the defining formula `1 − 2(x + 1)⁻¹`.
pub fn cayley_by_inverse(x: &Element) -> Result<CompactifiedPoint> {
    let one = identity(x.algebra());
    let inv = crate::algebra::inverse(&(x + &one))?;
    Ok(CompactifiedPoint::from_element_unchecked(&one - &inv.scale(2.0)))
}
