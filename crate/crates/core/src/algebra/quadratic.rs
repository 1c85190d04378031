//! Quadratic representation, inversion, mutations, Hua's identity and
//! cone membership.

use super::{l_operator, jordan_product, Element, LinearOperator};
use crate::error::{Error, Result};
use crate::spectral::spectral_decompose;
use crate::tol::{EPS_CONE, EPS_INV};

/// `P(x, y) = L(x)L(y) + L(y)L(x) − L(x∘y)`.
pub fn quad_bilinear(x: &Element, y: &Element) -> Result<LinearOperator> {
    let xy = jordan_product(x, y)?;
    let (lx, ly) = (l_operator(x), l_operator(y));
    Ok(&(&(&lx * &ly) + &(&ly * &lx)) - &l_operator(&xy))
}

/// `P(x) = 2L(x)² − L(x²)`.
pub fn quad(x: &Element) -> LinearOperator {
    let lx = l_operator(x);
    let x2 = jordan_product(x, x).expect("same algebra");
    &(&lx * &lx).scale(2.0) - &l_operator(&x2)
}

/// Inverse through the spectral decomposition, `Σ λᵢ⁻¹ cᵢ`.
pub fn inverse(x: &Element) -> Result<Element> {
    let sd = spectral_decompose(x)?;
    let smallest = sd.eigenvalues().iter().fold(f64::INFINITY, |m, l| m.min(l.abs()));
    if smallest <= EPS_INV * x.norm() {
        return Err(Error::Singular { smallest });
    }
    Ok(sd.map(|l| 1.0 / l))
}

/// The mutation product `a ⋆_u b = P(a, b)u`.
pub fn mutation_product(a: &Element, b: &Element, u: &Element) -> Result<Element> {
    a.check_same(u)?;
    Ok(quad_bilinear(a, b)?.apply(u))
}

/// The inverse of `x` in the mutation `V_u`, `P(u⁻¹)x⁻¹`.
pub fn mutation_inverse(x: &Element, u: &Element) -> Result<Element> {
    x.check_same(u)?;
    let u_inv = inverse(u)?;
    let x_inv = inverse(x)?;
    Ok(quad(&u_inv).apply(&x_inv))
}

/// Relative residual of Hua's identity
/// `(a+b)⁻¹ + (a + P(a)b⁻¹)⁻¹ = a⁻¹`.
///
/// Singular `a`, `b` or `a+b` are input errors. A singular `a + P(a)b⁻¹`
/// cannot happen in exact arithmetic and is reported as
/// [`Error::InvariantViolated`].
pub fn hua_residual(a: &Element, b: &Element) -> Result<f64> {
    a.check_same(b)?;
    let a_inv = inverse(a)?;
    let b_inv = inverse(b)?;
    let sum_inv = inverse(&(a + b))?;
    let twisted = a + &quad(a).apply(&b_inv);
    let twisted_inv = inverse(&twisted).map_err(|e| match e {
        Error::Singular { smallest } => {
            Error::InvariantViolated(format!("a + P(a)b⁻¹ flagged singular (|λ| = {smallest:e})"))
        }
        other => other,
    })?;
    let residual = &(&sum_inv + &twisted_inv) - &a_inv;
    Ok(residual.norm() / a_inv.norm())
}

/// Position of an element relative to the cone of squares `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeClass {
    Interior,
    Boundary,
    Outside,
}

impl ConeClass {
    /// `true` for `Interior` and `Boundary`, i.e. membership in `Q`.
    pub fn in_cone(self) -> bool {
        self != ConeClass::Outside
    }
}

pub fn min_eigenvalue(x: &Element) -> Result<f64> {
    Ok(spectral_decompose(x)?.eigenvalues()[0])
}

/// Classifies by the smallest eigenvalue against `EPS_CONE · max(1, ‖x‖)`.
pub fn cone_classify(x: &Element) -> Result<ConeClass> {
    let lambda = min_eigenvalue(x)?;
    let threshold = EPS_CONE * x.norm().max(1.0);
    Ok(if lambda > threshold {
        ConeClass::Interior
    } else if lambda.abs() <= threshold {
        ConeClass::Boundary
    } else {
        ConeClass::Outside
    })
}

/// `max|λ| / min|λ|`, infinite for singular elements.
pub fn condition_number(x: &Element) -> Result<f64> {
    let sd = spectral_decompose(x)?;
    let (lo, hi) = sd
        .eigenvalues()
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), l| (lo.min(l.abs()), hi.max(l.abs())));
    Ok(if lo == 0.0 { f64::INFINITY } else { hi / lo })
}
