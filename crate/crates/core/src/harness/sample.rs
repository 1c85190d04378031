//! Random inputs for the property checks.

use rand::Rng;

use crate::algebra::{identity, quad, square, Algebra, Element};
use crate::error::{Error, Result};
use crate::spectral::random_idempotent;
use crate::wiener_hopf::{cayley, embed, BoundaryPoint, CompactifiedPoint};

const MAX_RETRIES: usize = 100;

/// Shift keeping [`sample_interior`] away from the cone boundary.
pub const INTERIOR_SHIFT: f64 = 1e-3;

fn retry<T, R: Rng + ?Sized>(rng: &mut R, mut f: impl FnMut(&mut R) -> Result<T>) -> Result<T> {
    for _ in 0..MAX_RETRIES {
        if let Ok(v) = f(rng) {
            return Ok(v);
        }
    }
    Err(Error::RetryExhausted(MAX_RETRIES))
}

pub fn sample_element<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    Element::gaussian(alg, rng)
}

/// `g²` for Gaussian `g`.
pub fn sample_cone<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    square(&Element::gaussian(alg, rng))
}

/// `g² + δ·1` with `δ = 1e−3`.
pub fn sample_interior<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    &sample_cone(alg, rng) + &identity(alg).scale(INTERIOR_SHIFT)
}

/// `(P(e)g)²` for a random idempotent `e ∉ {0, 1}`: a nonzero point of `∂Q`.
pub fn sample_cone_boundary<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Result<Element> {
    let e = random_idempotent(alg, rng, false)?;
    Ok(square(&quad(&e).apply(&Element::gaussian(alg, rng))))
}

/// A random idempotent `e` and `x = z²` with `z` a Gaussian projected onto
/// `V₁(e⊥)`, so that `x ∈ V₀(e) ∩ Q`. With `allow_trivial = false`, `e ∉ {0, 1}`.
pub fn sample_boundary_stratum<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R, allow_trivial: bool) -> Result<BoundaryPoint> {
    retry(rng, |rng| {
        let e = random_idempotent(alg, rng, allow_trivial)?;
        let e_perp = &identity(alg) - &e;
        let z = quad(&e_perp).apply(&Element::gaussian(alg, rng));
        BoundaryPoint::new(e, square(&z))
    })
}

pub fn sample_boundary<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Result<BoundaryPoint> {
    sample_boundary_stratum(alg, rng, true)
}

/// One of the corners `−1`, `0`, `1`.
pub fn sample_corner<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> CompactifiedPoint {
    match rng.random_range(0..3) {
        0 => CompactifiedPoint::minus_one(alg),
        1 => cayley(&identity(alg)).expect("1 is in the cone"),
        _ => CompactifiedPoint::plus_one(alg),
    }
}

/// Points of `X`: corners with probability 1/10, otherwise an even mix of
/// `cayley(g²)` and `embed(sample_boundary)`.
pub fn sample_x<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Result<CompactifiedPoint> {
    let r: f64 = rng.random();
    if r < 0.1 {
        Ok(sample_corner(alg, rng))
    } else if r < 0.55 {
        cayley(&sample_cone(alg, rng))
    } else {
        retry(rng, |rng| embed(&sample_boundary(alg, rng)?))
    }
}
