use std::sync::Arc;

use approx::assert_abs_diff_eq;

use super::*;
use crate::algebra::{identity, Algebra, Element};
use crate::error::Error;

fn alg(s: &str) -> Algebra {
    Arc::new(s.parse().unwrap())
}

fn el(a: &Algebra, c: &[f64]) -> Element {
    Element::new(a.clone(), c.to_vec()).unwrap()
}

fn pt(a: &Algebra, c: &[f64]) -> CompactifiedPoint {
    CompactifiedPoint::new(el(a, c)).unwrap()
}

fn assert_close(u: &CompactifiedPoint, expected: &[f64], eps: f64) {
    assert_abs_diff_eq!(u.element().coords().as_slice(), expected, epsilon = eps);
}

#[test]
fn cayley_examples() {
    let a = alg("sym:2");
    assert_close(&cayley(&Element::zeros(&a)).unwrap(), &[-1.0, -1.0, 0.0], 0.0);
    assert_close(&cayley(&identity(&a)).unwrap(), &[0.0, 0.0, 0.0], 0.0);
    let r = alg("rn:2");
    assert_close(&cayley(&el(&r, &[0.0, 3.0])).unwrap(), &[-1.0, 0.5], 1e-15);
    assert!(matches!(cayley(&el(&r, &[-1.0, 3.0])), Err(Error::NotInCone { .. })));
}

#[test]
fn cayley_routes_agree() {
    let a = alg("sym:3");
    let x = el(&a, &[2.0, 1.0, 3.0, 0.2, -0.4, 0.1]);
    assert!(cayley(&x).unwrap().distance(&cayley_by_inverse(&x).unwrap()) < 1e-14);
}

#[test]
fn cayley_stays_strictly_below_one() {
    let a = alg("spin:3");
    let u = cayley(&el(&a, &[50.0, 10.0, 0.0])).unwrap();
    assert!(!crate::spectral::spectrum_contains(u.element(), 1.0).unwrap());
}

#[test]
fn embed_examples() {
    let a = alg("spin:4");
    let zero = Element::zeros(&a);
    let one = identity(&a);
    let p = BoundaryPoint::new(zero.clone(), zero.clone()).unwrap();
    assert_close(&embed(&p).unwrap(), CompactifiedPoint::minus_one(&a).element().coords().as_slice(), 1e-15);
    let p = BoundaryPoint::new(one.clone(), zero).unwrap();
    assert_close(&embed(&p).unwrap(), one.coords().as_slice(), 1e-15);

    // Oracle: blockwise scalar transform, e-block ↦ 1, free block 3 ↦ 1/2.
    let r = alg("rn:2");
    let p = BoundaryPoint::new(el(&r, &[1.0, 0.0]), el(&r, &[0.0, 3.0])).unwrap();
    assert_close(&embed(&p).unwrap(), &[1.0, 0.5], 1e-15);
}

#[test]
fn embed_of_unsplit_pair_is_cayley() {
    let a = alg("sym:3");
    let x = el(&a, &[2.0, 1.0, 3.0, 0.2, -0.4, 0.1]);
    let p = BoundaryPoint::new(Element::zeros(&a), x.clone()).unwrap();
    assert!(embed(&p).unwrap().distance(&cayley(&x).unwrap()) < 1e-13);
}

#[test]
fn embed_matches_spectral_form() {
    // e = E11 in sym:3, x supported on the lower 2×2 corner.
    let a = alg("sym:3");
    let e = el(&a, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let x = el(&a, &[0.0, 2.0, 5.0, 0.0, 0.0, 1.5]);
    let u = embed(&BoundaryPoint::new(e.clone(), x.clone()).unwrap()).unwrap();
    let sd = crate::spectral::spectral_decompose(&x).unwrap();
    let mut oracle = e.clone();
    for (l, f) in sd.iter() {
        let f_perp = crate::algebra::quad(&(&identity(&a) - &e)).apply(f);
        oracle = &oracle + &f_perp.scale((l - 1.0) / (l + 1.0));
    }
    assert!(u.distance(&CompactifiedPoint::from_element_unchecked(oracle)) < 1e-13);
}

#[test]
fn boundary_point_validation() {
    let r = alg("rn:2");
    assert!(matches!(
        BoundaryPoint::new(el(&r, &[2.0, 0.0]), el(&r, &[0.0, 1.0])),
        Err(Error::InvalidBoundaryPoint(_))
    ));
    assert!(matches!(
        BoundaryPoint::new(el(&r, &[1.0, 0.0]), el(&r, &[1.0, 1.0])),
        Err(Error::InvalidBoundaryPoint(_))
    ));
    assert!(matches!(
        BoundaryPoint::new(el(&r, &[1.0, 0.0]), el(&r, &[0.0, -1.0])),
        Err(Error::InvalidBoundaryPoint(_))
    ));
}

#[test]
fn represent_examples() {
    let a = alg("sym:2");
    let p = represent(&CompactifiedPoint::minus_one(&a)).unwrap();
    assert_eq!((p.e().norm(), p.x().norm()), (0.0, 0.0));
    let p = represent(&CompactifiedPoint::plus_one(&a)).unwrap();
    assert_abs_diff_eq!(p.e().coords(), identity(&a).coords(), epsilon = 1e-15);
    assert_eq!(p.x().norm(), 0.0);
    let p = represent(&pt(&a, &[0.0, 0.0, 0.0])).unwrap();
    assert_eq!(p.e().norm(), 0.0);
    assert_abs_diff_eq!(p.x().coords(), identity(&a).coords(), epsilon = 1e-15);
    assert!(CompactifiedPoint::new(el(&a, &[1.5, 0.0, 0.0])).is_err());
}

#[test]
fn represent_then_embed_round_trips() {
    let a = alg("sum(sym:2,spin:3)");
    let u = pt(&a, &[1.0, -0.2, 0.0, 0.1, 0.5, -0.3]);
    let back = embed(&represent(&u).unwrap()).unwrap();
    assert!(back.distance(&u) < 1e-13);
}

#[test]
fn act_direct_examples() {
    let r = alg("rn:1");
    // Oracle: 1 − 1 + 2·(1/4)/(3/2) = 1/3.
    assert_close(&act_direct(&pt(&r, &[0.0]), &el(&r, &[1.0])).unwrap(), &[1.0 / 3.0], 1e-15);

    let a = alg("sym:3");
    let b = el(&a, &[2.0, 1.0, 3.0, 0.2, -0.4, 0.1]);
    let from_base = act_direct(&CompactifiedPoint::minus_one(&a), &b).unwrap();
    assert!(from_base.distance(&cayley(&b).unwrap()) < 1e-14);

    let top = act_direct(&CompactifiedPoint::plus_one(&a), &b).unwrap();
    assert!(top.distance(&CompactifiedPoint::plus_one(&a)) < 1e-15);

    let boundary = el(&a, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    assert!(matches!(act_direct(&top, &boundary), Err(Error::NotInteriorCone { .. })));
}

#[test]
fn act_examples() {
    let a = alg("spin:4");
    let u = pt(&a, &[0.1, 0.3, -0.2, 0.4]);
    assert!(act(&u, &Element::zeros(&a)).unwrap().distance(&u) < 1e-14);

    // Oracle: e-block absorbs its share of a; the free block moves 1 ↦ 1 + 1 = 2,
    // whose transform is (2 − 1)/(2 + 1) = 1/3.
    let r = alg("rn:2");
    assert_close(&act(&pt(&r, &[1.0, 0.0]), &el(&r, &[5.0, 1.0])).unwrap(), &[1.0, 1.0 / 3.0], 1e-15);
    assert_close(&act_direct(&pt(&r, &[1.0, 0.0]), &el(&r, &[5.0, 1.0])).unwrap(), &[1.0, 1.0 / 3.0], 1e-15);

    let s = alg("sym:2");
    let x = el(&s, &[1.0, 2.0, 0.5]);
    let b = el(&s, &[3.0, 1.0, -0.4]);
    let lhs = act(&cayley(&x).unwrap(), &b).unwrap();
    assert!(lhs.distance(&cayley(&(&x + &b)).unwrap()) < 1e-14);

    assert!(matches!(act(&u, &el(&a, &[-1.0, 0.0, 0.0, 0.0])), Err(Error::NotInCone { .. })));
}

#[test]
fn act_accepts_boundary_cone_elements() {
    let a = alg("sym:2");
    let u = pt(&a, &[0.2, -0.5, 0.1]);
    let b = el(&a, &[1.0, 0.0, 0.0]);
    let c = el(&a, &[0.0, 2.0, 0.0]);
    let two_step = act(&act(&u, &b).unwrap(), &c).unwrap();
    assert!(two_step.distance(&act(&u, &(&b + &c)).unwrap()) < 1e-13);
}

#[test]
fn preimage_examples() {
    let a = alg("spin:3");
    let u = pt(&a, &[0.1, 0.3, -0.2]);
    assert!(preimage(&u, &Element::zeros(&a)).unwrap().unwrap().distance(&u) < 1e-14);

    let b = el(&a, &[2.0, 0.5, 0.5]);
    let v = preimage(&cayley(&b).unwrap(), &b).unwrap().unwrap();
    assert!(v.distance(&CompactifiedPoint::minus_one(&a)) < 1e-12);

    let r = alg("rn:1");
    assert!(preimage(&pt(&r, &[0.0]), &el(&r, &[2.0])).unwrap().is_none());
}

#[test]
fn a_set_examples() {
    let a = alg("sym:2");
    let minus_one = CompactifiedPoint::minus_one(&a);
    assert!(a_set_member(&minus_one, &el(&a, &[1.0, 0.0, 0.0])).unwrap());
    assert!(!a_set_member(&minus_one, &el(&a, &[1.0, -0.1, 0.0])).unwrap());

    // u = (1, 0) has e = (1, 0), x = (0, 1); oracle: 1 + a₂ ≥ 0.
    let r = alg("rn:2");
    let u = pt(&r, &[1.0, 0.0]);
    assert!(a_set_member(&u, &el(&r, &[-9.0, -1.0])).unwrap());
    assert!(!a_set_member(&u, &el(&r, &[0.0, -2.0])).unwrap());
    assert!(a_set_member(&u, &el(&r, &[0.0, -1.0])).unwrap());
}

#[test]
fn a_set_witness_examples() {
    let a = alg("sym:2");
    let minus_one = CompactifiedPoint::minus_one(&a);
    let one = identity(&a);
    let w = a_set_witness(&minus_one, &one).unwrap();
    assert!(w.v.distance(&cayley(&one).unwrap()) < 1e-14);
    // Oracle: both sides equal cayley(1 + c).
    let rhs = cayley(&(&one + &w.a2)).unwrap();
    assert!(act(&minus_one, &w.a1).unwrap().distance(&rhs) < 1e-13);
    assert!(witness_residual(&minus_one, &w).unwrap() < 1e-13);

    let u = pt(&a, &[0.3, -0.1, 0.2]);
    let w = a_set_witness(&u, &Element::zeros(&a)).unwrap();
    assert!(w.v.distance(&u) < 1e-13);

    let r = alg("rn:2");
    let u = pt(&r, &[1.0, 0.0]);
    let w = a_set_witness(&u, &el(&r, &[-9.0, -1.0])).unwrap();
    assert!(witness_residual(&u, &w).unwrap() < 1e-13);
    assert!(matches!(a_set_witness(&u, &el(&r, &[0.0, -2.0])), Err(Error::NotMember)));
}

#[test]
fn interior_membership_examples() {
    let a = alg("spin:3");
    assert!(!interior_membership(&CompactifiedPoint::minus_one(&a)).unwrap());
    assert!(interior_membership(&CompactifiedPoint::plus_one(&a)).unwrap());
    assert!(interior_membership(&cayley(&el(&a, &[1.0, 0.5, 0.2])).unwrap()).unwrap());
}

#[test]
fn dominates_examples() {
    let a = alg("sym:2");
    let b = el(&a, &[1.0, 2.0, 0.3]);
    assert!(dominates(&CompactifiedPoint::plus_one(&a), &b).unwrap());
    assert!(!dominates(&cayley(&b).unwrap(), &b).unwrap());
    let r = alg("rn:1");
    assert!(dominates(&pt(&r, &[0.9]), &el(&r, &[1.0])).unwrap());
}

#[test]
fn homotopy_examples() {
    let a = alg("sym:2");
    let u = pt(&a, &[0.3, -0.2, 0.1]);
    assert_eq!(homotopy_point(1.0, &u).unwrap(), u);
    assert_eq!(homotopy_point(0.0, &u).unwrap(), CompactifiedPoint::minus_one(&a));
    let r = alg("rn:2");
    assert_close(&homotopy_point(0.5, &pt(&r, &[0.0, 1.0])).unwrap(), &[-0.5, 0.0], 0.0);
    assert!(matches!(homotopy_point(1.5, &u), Err(Error::ParameterOutOfRange { .. })));
    assert!(matches!(homotopy_point(-0.1, &u), Err(Error::ParameterOutOfRange { .. })));
}
