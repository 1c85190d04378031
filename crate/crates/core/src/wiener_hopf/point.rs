use crate::algebra::{cone_classify, identity, quad, Algebra, Element};
use crate::error::{Error, Result};
use crate::spectral::check_idempotent;
use crate::tol::EPS_SUBSPACE;

/// A point of the order interval `X = {u : −1 ≤ u ≤ 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactifiedPoint {
    u: Element,
}

impl CompactifiedPoint {
    /// Checks `1 − u ∈ Q` and `u + 1 ∈ Q` up to the cone tolerance.
    pub fn new(u: Element) -> Result<Self> {
        if in_interval(&u)? {
            Ok(Self { u })
        } else {
            Err(Error::OutOfInterval)
        }
    }

    pub(crate) fn from_element_unchecked(u: Element) -> Self {
        Self { u }
    }

    /// `−1`, the base point `i(0)` of the compactification.
    pub fn minus_one(algebra: &Algebra) -> Self {
        Self { u: identity(algebra).scale(-1.0) }
    }

    pub fn plus_one(algebra: &Algebra) -> Self {
        Self { u: identity(algebra) }
    }

    pub fn element(&self) -> &Element {
        &self.u
    }

    pub fn into_element(self) -> Element {
        self.u
    }

    pub fn algebra(&self) -> &Algebra {
        self.u.algebra()
    }

    pub fn distance(&self, other: &CompactifiedPoint) -> f64 {
        self.u.distance(&other.u)
    }
}

/// `−1 ≤ u ≤ 1` in the cone order, with the cone tolerance.
pub fn in_interval(u: &Element) -> Result<bool> {
    let one = identity(u.algebra());
    Ok(cone_classify(&(&one - u))?.in_cone() && cone_classify(&(&one + u))?.in_cone())
}

/// A pair `(e, x)` with `e` idempotent and `x ∈ V₀(e) ∩ Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPoint {
    e: Element,
    x: Element,
}

impl BoundaryPoint {
    pub fn new(e: Element, x: Element) -> Result<Self> {
        let invalid = |m: String| Error::InvalidBoundaryPoint(m);
        e.check_same(&x)?;
        check_idempotent(&e).map_err(|err| invalid(err.to_string()))?;
        let e_perp = &identity(e.algebra()) - &e;
        let leak = (&quad(&e_perp).apply(&x) - &x).norm();
        if leak > EPS_SUBSPACE * x.norm().max(1.0) {
            return Err(invalid(format!("x is not in V₀(e) (residual {leak:e})")));
        }
        if !cone_classify(&x)?.in_cone() {
            return Err(invalid("x is not in the cone of squares".into()));
        }
        Ok(Self { e, x })
    }

    pub(crate) fn from_parts_unchecked(e: Element, x: Element) -> Self {
        Self { e, x }
    }

    pub fn e(&self) -> &Element {
        &self.e
    }

    pub fn x(&self) -> &Element {
        &self.x
    }

    /// `e⊥ = 1 − e`.
    pub fn e_perp(&self) -> Element {
        &identity(self.e.algebra()) - &self.e
    }

    pub fn into_parts(self) -> (Element, Element) {
        (self.e, self.x)
    }
}
