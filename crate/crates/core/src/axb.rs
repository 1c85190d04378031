//! The ax+b group `G = ℝ ⋊ (0,∞)`, its subsemigroup
//! `P = {a ≥ 1, b ≥ 0}`, the right action on `Y = [−∞,∞) × [0,∞]` and the
//! compact piece `X = [−∞,0] × [0,1]`.
//!
//! Extended reals are tagged. Arithmetic on tags is total:
//!
//! | operation            | result |
//! |----------------------|--------|
//! | `(−∞ − b) / a`       | `−∞`   |
//! | `∞ / a`              | `∞`    |
//! | `exp(−∞)`            | `0`    |
//! | `log(0 + c)`, `c > 0` | `log c` |
//! | `log(0 + 0)`         | `−∞`   |
//!
//! Raw `f64` infinities never reach the finite paths; constructors reject them.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    fn rank(self) -> (i8, f64) {
        match self {
            ExtReal::NegInf => (-1, 0.0),
            ExtReal::Finite(v) => (0, v),
            ExtReal::PosInf => (1, 0.0),
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, x) = self.rank();
        let (b, y) = other.rank();
        match a.cmp(&b) {
            Ordering::Equal => x.partial_cmp(&y),
            o => Some(o),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::PosInf => write!(f, "inf"),
        }
    }
}

/// A point of `Y = [−∞,∞) × [0,∞]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    x: ExtReal,
    y: ExtReal,
}

impl PlanePoint {
    pub fn new(x: ExtReal, y: ExtReal) -> Result<Self> {
        let x_ok = match x {
            ExtReal::NegInf => true,
            ExtReal::Finite(v) => v.is_finite(),
            ExtReal::PosInf => false,
        };
        let y_ok = match y {
            ExtReal::NegInf => false,
            ExtReal::Finite(v) => v.is_finite() && v >= 0.0,
            ExtReal::PosInf => true,
        };
        if !x_ok || !y_ok {
            return Err(Error::InvalidElement(format!("({x}, {y}) is not a point of [-inf,inf) x [0,inf]")));
        }
        Ok(Self { x, y })
    }

    pub fn finite(x: f64, y: f64) -> Result<Self> {
        Self::new(ExtReal::Finite(x), ExtReal::Finite(y))
    }

    pub fn x(&self) -> ExtReal {
        self.x
    }

    pub fn y(&self) -> ExtReal {
        self.y
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// The matrix `(a b; 0 1)` with `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineElement {
    a: f64,
    b: f64,
}

impl AffineElement {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0 && b.is_finite()) {
            return Err(Error::InvalidElement(format!("({a}, {b}) is not in the ax+b group")));
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self { a: 1.0, b: 0.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn inverse(&self) -> Self {
        Self { a: 1.0 / self.a, b: -self.b / self.a }
    }
}

/// Matrix product `g·h`; acting by it equals acting by `g`, then by `h`.
pub fn compose(g: &AffineElement, h: &AffineElement) -> AffineElement {
    AffineElement { a: g.a * h.a, b: g.b + g.a * h.b }
}

/// `(x, y)·(a b; 0 1) = ((x − b)/a, y/a)`.
pub fn act_plane(p: &PlanePoint, g: &AffineElement) -> PlanePoint {
    let x = match p.x {
        ExtReal::Finite(v) => ExtReal::Finite((v - g.b) / g.a),
        other => other,
    };
    let y = match p.y {
        ExtReal::Finite(v) => ExtReal::Finite(v / g.a),
        other => other,
    };
    PlanePoint { x, y }
}

pub fn in_semigroup(g: &AffineElement, interior: bool) -> bool {
    if interior {
        g.a > 1.0 && g.b > 0.0
    } else {
        g.a >= 1.0 && g.b >= 0.0
    }
}

/// Membership in `X = [−∞,0]×[0,1]`, or in `X₀ = [−∞,0)×[0,1)` with `interior_orbit`.
pub fn in_x(p: &PlanePoint, interior_orbit: bool) -> bool {
    let zero = ExtReal::Finite(0.0);
    let one = ExtReal::Finite(1.0);
    if interior_orbit {
        p.x < zero && p.y < one
    } else {
        p.x <= zero && p.y <= one
    }
}

fn log_add_exp(x: ExtReal, log_c: Option<f64>) -> ExtReal {
    match (x, log_c) {
        (x, None) => x,
        (ExtReal::NegInf, Some(lc)) => ExtReal::Finite(lc),
        (ExtReal::Finite(v), Some(lc)) => {
            let m = v.max(lc);
            ExtReal::Finite(m + ((v - m).exp() + (lc - m).exp()).ln())
        }
        (ExtReal::PosInf, _) => unreachable!("plane points exclude +inf in x"),
    }
}

/// `(x, y) ↦ (log(eˣ + s/(1−s)), y)` for `s ∈ [0, 1)`.
pub fn escape_homotopy(s: f64, p: &PlanePoint) -> Result<PlanePoint> {
    if !(0.0..1.0).contains(&s) {
        return Err(Error::ParameterOutOfRange { value: s, range: "[0, 1)" });
    }
    let log_c = (s > 0.0).then(|| s.ln() - (-s).ln_1p());
    Ok(PlanePoint { x: log_add_exp(p.x, log_c), y: p.y })
}

/// [`escape_homotopy`] parametrized by `r = 1 − s ∈ (0, 1]`, which keeps
/// full precision when `s` is too close to 1 to be represented.
pub fn escape_homotopy_complement(r: f64, p: &PlanePoint) -> Result<PlanePoint> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::ParameterOutOfRange { value: r, range: "(0, 1]" });
    }
    let log_c = (r < 1.0).then(|| (-r).ln_1p() - r.ln());
    Ok(PlanePoint { x: log_add_exp(p.x, log_c), y: p.y })
}

/// The escape threshold for level `m` as `(s*, 1 − s*)`, where
/// `s* = eᵐ/(1 + eᵐ)`. Every `s > s*` pushes all first coordinates above `m`.
pub fn escape_threshold(m: f64) -> (f64, f64) {
    let r = 1.0 / (1.0 + m.exp());
    let s = 1.0 / (1.0 + (-m).exp());
    (s, r)
}

/// An element `g ∈ Int(P)` and a point `p ∈ X` with `p·g = q`, for `q ∈ X₀`.
pub fn orbit_preimage(q: &PlanePoint) -> Option<(PlanePoint, AffineElement)> {
    if !in_x(q, true) {
        return None;
    }
    let a = match q.y {
        ExtReal::Finite(y) if y > 0.0 => (0.5 * (1.0 + 1.0 / y)).min(2.0),
        _ => 2.0,
    };
    let b = match q.x {
        ExtReal::Finite(x) => -0.5 * a * x,
        _ => 1.0,
    };
    let g = AffineElement::new(a, b).ok()?;
    let x = match q.x {
        ExtReal::Finite(x) => ExtReal::Finite(a * x + b),
        other => other,
    };
    let y = match q.y {
        ExtReal::Finite(y) => ExtReal::Finite(a * y),
        other => other,
    };
    let p = PlanePoint::new(x, y).ok()?;
    (in_x(&p, false) && in_semigroup(&g, true)).then_some((p, g))
}

/// Largest coordinate gap between two plane points. Tag mismatches give `∞`.
pub fn plane_distance(p: &PlanePoint, q: &PlanePoint) -> f64 {
    fn gap(a: ExtReal, b: ExtReal) -> f64 {
        match (a, b) {
            (ExtReal::Finite(u), ExtReal::Finite(v)) => (u - v).abs() / u.abs().max(v.abs()).max(1.0),
            (a, b) if a == b => 0.0,
            _ => f64::INFINITY,
        }
    }
    gap(p.x, q.x).max(gap(p.y, q.y))
}

/// Samples `Y` through the chart `(x, y) ↦ (eˣ, y/(1+y))`: uniform on
/// `[0, width] × [0, 1]` in chart coordinates, with the chart boundary lines
/// `eˣ = 0` and `y/(1+y) = 1` each hit with probability `edge`.
pub fn sample_plane<R: Rng + ?Sized>(rng: &mut R, width: f64, edge: f64) -> PlanePoint {
    let xi: f64 = rng.random_range(0.0..width);
    let eta: f64 = rng.random::<f64>();
    let x = if rng.random_bool(edge) || xi == 0.0 { ExtReal::NegInf } else { ExtReal::Finite(xi.ln()) };
    let y = if rng.random_bool(edge) || eta >= 1.0 { ExtReal::PosInf } else { ExtReal::Finite(eta / (1.0 - eta)) };
    PlanePoint { x, y }
}

/// Samples `X` through the same chart, where it is `[0,1] × [0,1/2]`. Each
/// of the four edges `x = −∞`, `x = 0`, `y = 0`, `y = 1` is hit with
/// probability `edge`.
pub fn sample_x_plane<R: Rng + ?Sized>(rng: &mut R, edge: f64) -> PlanePoint {
    let mut xi: f64 = rng.random();
    let mut eta: f64 = rng.random_range(0.0..0.5);
    if rng.random_bool(edge) {
        xi = 0.0;
    } else if rng.random_bool(edge) {
        xi = 1.0;
    }
    if rng.random_bool(edge) {
        eta = 0.0;
    } else if rng.random_bool(edge) {
        eta = 0.5;
    }
    let x = if xi == 0.0 { ExtReal::NegInf } else { ExtReal::Finite(xi.ln()) };
    PlanePoint { x, y: ExtReal::Finite(eta / (1.0 - eta)) }
}

/// Samples `P`, or `Int(P)` when `interior`. Without `interior` the edges
/// `a = 1` and `b = 0` are each hit with probability 1/10.
pub fn sample_semigroup<R: Rng + ?Sized>(rng: &mut R, interior: bool) -> AffineElement {
    let mut a = 1.0 + rng.random_range(0.0..3.0f64);
    let mut b = rng.random_range(0.0..3.0f64);
    if interior {
        a = a.max(1.0 + f64::EPSILON * 4.0);
        b = b.max(f64::MIN_POSITIVE);
    } else {
        if rng.random_bool(0.1) {
            a = 1.0;
        }
        if rng.random_bool(0.1) {
            b = 0.0;
        }
    }
    AffineElement { a, b }
}

/// Any group element: `log a` uniform in `[−2, 2]`, `b` uniform in `[−3, 3]`.
pub fn sample_group<R: Rng + ?Sized>(rng: &mut R) -> AffineElement {
    AffineElement { a: rng.random_range(-2.0..2.0f64).exp(), b: rng.random_range(-3.0..3.0) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp(x: f64, y: f64) -> PlanePoint {
        PlanePoint::finite(x, y).unwrap()
    }

    fn g(a: f64, b: f64) -> AffineElement {
        AffineElement::new(a, b).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PlanePoint::new(ExtReal::PosInf, ExtReal::Finite(0.0)).is_err());
        assert!(PlanePoint::new(ExtReal::Finite(0.0), ExtReal::Finite(-1.0)).is_err());
        assert!(PlanePoint::new(ExtReal::Finite(f64::NEG_INFINITY), ExtReal::Finite(0.0)).is_err());
        assert!(AffineElement::new(0.0, 1.0).is_err());
        assert!(AffineElement::new(1.0, f64::NAN).is_err());
    }

    #[test]
    fn act_plane_examples() {
        let p = fp(0.3, 2.0);
        assert_eq!(act_plane(&p, &AffineElement::identity()), p);
        assert_eq!(act_plane(&fp(0.0, 1.0), &g(2.0, 4.0)), fp(-2.0, 0.5));
        let corner = PlanePoint::new(ExtReal::NegInf, ExtReal::PosInf).unwrap();
        assert_eq!(act_plane(&corner, &g(0.1, -7.0)), corner);
    }

    #[test]
    fn compose_examples() {
        let h = g(1.5, -2.0);
        assert_eq!(compose(&AffineElement::identity(), &h), h);
        let x = g(2.5, 0.7);
        let id = compose(&x, &x.inverse());
        assert!((id.a() - 1.0).abs() < 1e-15 && id.b().abs() < 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (g1, h1) = (g(2.0, 0.0), g(1.0, 3.0));
        for _ in 0..100 {
            let p = sample_plane(&mut rng, 3.0, 0.1);
            let lhs = act_plane(&p, &compose(&g1, &h1));
            let rhs = act_plane(&act_plane(&p, &g1), &h1);
            assert!(plane_distance(&lhs, &rhs) < 1e-15);
        }
    }

    #[test]
    fn semigroup_and_x_membership() {
        assert!(in_semigroup(&g(1.0, 0.0), false));
        assert!(!in_semigroup(&g(1.0, 0.0), true));
        assert!(in_semigroup(&g(2.0, 1.0), false) && in_semigroup(&g(2.0, 1.0), true));
        assert!(!in_semigroup(&g(0.5, 3.0), false));

        assert!(in_x(&fp(0.0, 1.0), false));
        assert!(!in_x(&fp(0.0, 1.0), true));
        let p = PlanePoint::new(ExtReal::NegInf, ExtReal::Finite(0.0)).unwrap();
        assert!(in_x(&p, false) && in_x(&p, true));
        assert!(!in_x(&fp(-1.0, 1.5), false));
        assert!(!in_x(&PlanePoint::new(ExtReal::NegInf, ExtReal::PosInf).unwrap(), false));
    }

    #[test]
    fn escape_examples() {
        let p = fp(-0.4, 2.0);
        assert_eq!(escape_homotopy(0.0, &p).unwrap(), p);
        let q = escape_homotopy(0.5, &PlanePoint::new(ExtReal::NegInf, ExtReal::Finite(2.0)).unwrap()).unwrap();
        assert_eq!(q, fp(0.0, 2.0));
        let bound = 99f64.ln();
        for x in [-50.0, -1.0, 0.0, 3.0] {
            let r = escape_homotopy(0.99, &fp(x, 0.0)).unwrap();
            assert!(r.x().finite().unwrap() >= bound - 1e-12);
        }
        assert!(escape_homotopy(1.0, &p).is_err());
        assert!(escape_homotopy(-0.1, &p).is_err());
    }

    #[test]
    fn complement_parametrization_agrees() {
        let p = fp(1.3, 0.0);
        for s in [0.1, 0.5, 0.9, 0.999] {
            let a = escape_homotopy(s, &p).unwrap().x().finite().unwrap();
            let b = escape_homotopy_complement(1.0 - s, &p).unwrap().x().finite().unwrap();
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(escape_homotopy_complement(1.0, &p).unwrap(), p);
    }

    #[test]
    fn escape_beyond_threshold() {
        for m in [10.0, 100.0] {
            let (_, r_star) = escape_threshold(m);
            let p = PlanePoint::new(ExtReal::NegInf, ExtReal::Finite(0.0)).unwrap();
            let at = escape_homotopy_complement(r_star * 0.5, &p).unwrap().x().finite().unwrap();
            assert!(at > m);
        }
        let (s_star, _) = escape_threshold(10.0);
        assert!((s_star.ln() - (-s_star).ln_1p() - 10.0).abs() < 1e-9);
    }

    #[test]
    fn orbit_preimage_lands_on_target() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut hits = 0;
        for _ in 0..500 {
            let q = sample_plane(&mut rng, 2.0, 0.1);
            match orbit_preimage(&q) {
                Some((p, h)) => {
                    hits += 1;
                    assert!(in_x(&p, false) && in_semigroup(&h, true));
                    assert!(plane_distance(&act_plane(&p, &h), &q) < 1e-15);
                }
                None => assert!(!in_x(&q, true)),
            }
        }
        assert!(hits > 0);
    }
}
