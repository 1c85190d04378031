//! The registered property checks. Each check maps one seeded sample to a
//! residual; the report aggregates residuals by maximum or, for
//! count-based checks, by the number of failing samples.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::config::Suite;
use super::sample::{
    sample_boundary, sample_boundary_stratum, sample_cone, sample_cone_boundary, sample_corner, sample_element,
    sample_interior, sample_x,
};
use crate::algebra::{
    cone_classify, condition_number, hua_residual, identity, inverse, jordan_product, l_operator, min_eigenvalue,
    mutation_inverse, mutation_product, quad, quad_bilinear, square, Algebra, Element,
};
use crate::axb;
use crate::error::{Error, Result};
use crate::spectral::{
    peirce, random_idempotent, range_basis, spectral_decompose, spectrum_contains, subalgebra_inverse,
    symmetric_eigen, symmetric_operator_norm,
};
use crate::tol::{CONDITION_GUARD, EPS_ACTION, EPS_GROUP, EPS_ROUNDTRIP};
use crate::wiener_hopf::{
    a_set_member, act, act_direct, cayley, dominates, embed, homotopy_point, in_interval, preimage, represent,
    BoundaryPoint, CompactifiedPoint,
};

/// Result of one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    Residual(f64),
    /// Dropped by the conditioning guard.
    Rejected,
}

impl Outcome {
    fn fail_if(bad: bool) -> Self {
        Outcome::Residual(if bad { 1.0 } else { 0.0 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregate {
    Max,
    /// Residual is the number of failing samples; tolerance is 0.
    Count,
}

pub type AlgebraRunner = fn(&Algebra, usize, &mut ChaCha8Rng) -> Result<Outcome>;
pub type PlaneRunner = fn(usize, &mut ChaCha8Rng) -> Result<Outcome>;

#[derive(Clone, Copy)]
pub enum Runner {
    Algebra(AlgebraRunner),
    /// Checks on the ax+b example; they ignore the algebra.
    Plane(PlaneRunner),
}

#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub tolerance: f64,
    pub aggregate: Aggregate,
    /// Samples drawn for a run of `n`.
    pub samples: fn(usize) -> usize,
    pub runner: Runner,
}

fn all(n: usize) -> usize {
    n
}

fn fifth(n: usize) -> usize {
    (n / 5).max(1)
}

fn three_tenths(n: usize) -> usize {
    (3 * n / 10).max(1)
}

macro_rules! check {
    ($id:literal, $suite:ident, $tol:expr, $agg:ident, $n:ident, $kind:ident($f:path)) => {
        CheckSpec {
            id: $id,
            suite: Suite::$suite,
            tolerance: $tol,
            aggregate: Aggregate::$agg,
            samples: $n,
            runner: Runner::$kind($f),
        }
    };
}

static REGISTRY: &[CheckSpec] = &[
    check!("alg.jordan-identity", Alg, 1e-10, Max, all, Algebra(jordan_identity)),
    check!("alg.l-symmetry", Alg, 1e-10, Max, all, Algebra(l_symmetry)),
    check!("alg.quad.unit-and-inverse", Alg, 1e-8, Max, all, Algebra(quad_unit_and_inverse)),
    check!("alg.quad.bilinear-consistency", Alg, 1e-12, Max, all, Algebra(quad_bilinear_consistency)),
    check!("alg.mutation.unit", Alg, 1e-8, Max, all, Algebra(mutation_unit)),
    check!("alg.mutation.inverse", Alg, 1e-7, Max, all, Algebra(mutation_inverse_routes)),
    check!("alg.cone.squares", Alg, 0.0, Count, all, Algebra(cone_squares)),
    check!("hua.residual", Hua, 1e-8, Max, all, Algebra(hua)),
    check!("spec.reconstruction", Spec, 1e-9, Max, all, Algebra(reconstruction)),
    check!("spec.orthogonality", Spec, 1e-9, Max, all, Algebra(orthogonality)),
    check!("spec.completeness", Spec, 1e-9, Max, all, Algebra(completeness)),
    check!("spec.peirce.projection", Spec, 1e-9, Max, three_tenths, Algebra(peirce_projection)),
    check!("spec.peirce.spectrum", Spec, 1e-9, Max, three_tenths, Algebra(peirce_spectrum)),
    check!("spec.crucial-lemma", Spec, 1e-7, Max, all, Algebra(crucial_lemma)),
    check!("wh.act.interval", Wh, EPS_ACTION, Max, all, Algebra(act_interval)),
    check!("wh.act.oracle-agreement", Wh, EPS_ACTION, Max, all, Algebra(act_oracle_agreement)),
    check!("wh.act.semigroup", Wh, EPS_ACTION, Max, all, Algebra(act_semigroup)),
    check!("wh.act.equivariance", Wh, EPS_ACTION, Max, all, Algebra(act_equivariance)),
    check!("wh.act.injectivity", Wh, 0.0, Count, all, Algebra(act_injectivity)),
    check!("wh.roundtrip", Wh, EPS_ROUNDTRIP, Max, all, Algebra(roundtrip)),
    check!("wh.axiom.c1.forward", Wh, 0.0, Count, all, Algebra(c1_forward)),
    check!("wh.axiom.c1.converse", Wh, 0.0, Count, all, Algebra(c1_converse)),
    check!("wh.axiom.c2.membership", Wh, 0.0, Count, all, Algebra(c2_membership)),
    check!("wh.axiom.c2.density", Wh, EPS_ACTION, Max, all, Algebra(c2_density)),
    check!("wh.axiom.c3.separation", Wh, 0.0, Count, fifth, Algebra(c3_separation)),
    check!("wh.homotopy.endpoints", Wh, 0.0, Count, fifth, Algebra(homotopy_endpoints)),
    check!("wh.homotopy.interval", Wh, 0.0, Count, fifth, Algebra(homotopy_interval)),
    check!("wh.homotopy.spectrum", Wh, 0.0, Count, fifth, Algebra(homotopy_spectrum)),
    check!("axb.action.law", Axb, 1e-12, Max, all, Plane(axb_action_law)),
    check!("axb.invariance", Axb, 0.0, Count, all, Plane(axb_invariance)),
    check!("axb.orbit", Axb, 0.0, Count, all, Plane(axb_orbit)),
    check!("axb.escape", Axb, 0.0, Count, all, Plane(axb_escape)),
];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.max(1.0)
}

fn ill_conditioned(xs: &[&Element]) -> Result<bool> {
    for x in xs {
        if condition_number(x)? > CONDITION_GUARD {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Guard for the action at `(u, a)`: `x + 1` for `(e, x) = represent(u)`,
/// `a`, and `ũ + a⁻¹` with `ũ = (1 − u)/2`.
fn action_ill_conditioned(u: &CompactifiedPoint, a: &Element) -> Result<bool> {
    let one = identity(a.algebra());
    let p = represent(u)?;
    if ill_conditioned(&[&(p.x() + &one), a])? {
        return Ok(true);
    }
    let u_tilde = (&one - u.element()).scale(0.5);
    ill_conditioned(&[&(&u_tilde + &inverse(a)?)])
}

/// A cone element that lies on `∂Q` with probability 1/4.
fn sample_mixed_cone(alg: &Algebra, rng: &mut ChaCha8Rng) -> Result<Element> {
    if rng.random_bool(0.25) {
        sample_cone_boundary(alg, rng)
    } else {
        Ok(sample_cone(alg, rng))
    }
}

fn jordan_identity(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let y = sample_element(alg, rng);
    let x2 = square(&x);
    let lhs = jordan_product(&x, &jordan_product(&x2, &y)?)?;
    let rhs = jordan_product(&x2, &jordan_product(&x, &y)?)?;
    Ok(Outcome::Residual(lhs.distance(&rhs) / (x.norm().powi(3) * y.norm())))
}

fn l_symmetry(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let [x, y, z] = [(); 3].map(|_| sample_element(alg, rng));
    let l = l_operator(&x);
    let pairing = (l.apply(&y).dot(&z) - y.dot(&l.apply(&z))).abs() / (x.norm() * y.norm() * z.norm());
    let bilinear = quad_bilinear(&x, &y)?.asymmetry() / (x.norm() * y.norm()).max(1.0);
    Ok(Outcome::Residual(pairing.max(l.asymmetry()).max(bilinear)))
}

fn quad_unit_and_inverse(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    if ill_conditioned(&[&x])? {
        return Ok(Outcome::Rejected);
    }
    let p = quad(&x);
    let x2 = square(&x);
    let unit = rel(p.apply(&identity(alg)).distance(&x2), x2.norm());
    let inv = rel(p.apply(&inverse(&x)?).distance(&x), x.norm());
    Ok(Outcome::Residual(unit.max(inv)))
}

fn quad_bilinear_consistency(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let p = quad(&x);
    let diff = (&p - &quad_bilinear(&x, &x)?).frobenius_norm();
    Ok(Outcome::Residual(rel(diff, p.frobenius_norm())))
}

fn mutation_unit(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_element(alg, rng);
    let a = sample_element(alg, rng);
    if ill_conditioned(&[&u])? {
        return Ok(Outcome::Rejected);
    }
    let prod = mutation_product(&a, &inverse(&u)?, &u)?;
    Ok(Outcome::Residual(rel(prod.distance(&a), a.norm())))
}

/// Matrix of `y ↦ x ⋆_u y = P(x, y)u`.
fn mutation_l(x: &Element, u: &Element) -> Result<DMatrix<f64>> {
    let alg = x.algebra();
    let mut m = DMatrix::zeros(alg.dim(), alg.dim());
    for j in 0..alg.dim() {
        m.set_column(j, mutation_product(x, &Element::basis(alg, j), u)?.coords());
    }
    Ok(m)
}

fn mutation_inverse_routes(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let u = sample_interior(alg, rng);
    let (cx, cu) = (condition_number(&x)?, condition_number(&u)?);
    // The mutation's quadratic map is P(x)P(u), whose condition is at most (κx·κu)².
    if (cx * cu).powi(2) > CONDITION_GUARD {
        return Ok(Outcome::Rejected);
    }
    let direct = mutation_inverse(&x, &u)?;
    let lx = mutation_l(&x, &u)?;
    let lxx = mutation_l(&mutation_product(&x, &x, &u)?, &u)?;
    let pu = &lx * &lx * 2.0 - lxx;
    let w = pu.lu().solve(x.coords()).ok_or(Error::Singular { smallest: 0.0 })?;
    let solved = Element::from_vector(alg.clone(), w)?;
    Ok(Outcome::Residual(rel(direct.distance(&solved), direct.norm())))
}

fn cone_squares(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    Ok(Outcome::fail_if(!cone_classify(&square(&x))?.in_cone()))
}

fn hua(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = sample_interior(alg, rng);
    let b = sample_interior(alg, rng);
    Ok(Outcome::Residual(hua_residual(&a, &b)?))
}

fn reconstruction(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let sd = spectral_decompose(&x)?;
    Ok(Outcome::Residual(sd.map(|l| l).distance(&x) / x.norm()))
}

fn orthogonality(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let sd = spectral_decompose(&x)?;
    let cs = sd.idempotents();
    let mut worst = 0.0f64;
    for (i, ci) in cs.iter().enumerate() {
        worst = worst.max(square(ci).distance(ci));
        for cj in &cs[i + 1..] {
            worst = worst.max(jordan_product(ci, cj)?.norm());
        }
    }
    Ok(Outcome::Residual(worst))
}

fn completeness(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_element(alg, rng);
    let sd = spectral_decompose(&x)?;
    Ok(Outcome::Residual(sd.map(|_| 1.0).distance(&identity(alg))))
}

fn peirce_projection(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let e = random_idempotent(alg, rng, true)?;
    let pd = peirce(&e)?;
    let dim = alg.dim();
    let id = DMatrix::<f64>::identity(dim, dim);
    let mut worst = symmetric_operator_norm(&(pd.p1.matrix() - quad(&e).matrix()))?;
    let sum = pd.p0.matrix() + pd.p_half.matrix() + pd.p1.matrix();
    worst = worst.max((sum - &id).norm());
    for p in [&pd.p0, &pd.p_half, &pd.p1] {
        let m = p.matrix();
        worst = worst.max((m - m.transpose()).norm()).max((m * m - m).norm());
    }
    Ok(Outcome::Residual(worst))
}

fn peirce_spectrum(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let e = random_idempotent(alg, rng, true)?;
    let (values, _) = symmetric_eigen(l_operator(&e).matrix())?;
    let worst = values
        .iter()
        .map(|l| [0.0, 0.5, 1.0].iter().map(|t| (l - t).abs()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    Ok(Outcome::Residual(worst))
}

fn crucial_lemma(alg: &Algebra, index: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let e = match index % 10 {
        0 => Element::zeros(alg),
        1 => identity(alg),
        _ => random_idempotent(alg, rng, true)?,
    };
    let pe = quad(&e);
    let a = sample_interior(alg, rng);
    let u = square(&pe.apply(&sample_element(alg, rng)));
    let lhs = pe.apply(&inverse(&(&u + &inverse(&a)?))?);
    let a0 = pe.apply(&a);
    let a0_inv = subalgebra_inverse(&a0, &e).map_err(|err| match err {
        Error::SingularInSubalgebra => Error::InvariantViolated("P(e)a is singular in V₁(e)".into()),
        other => other,
    })?;
    let rhs = subalgebra_inverse(&(&u + &a0_inv), &e)?;
    Ok(Outcome::Residual(rel(lhs.distance(&rhs), lhs.norm())))
}

fn act_interval(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let a = sample_interior(alg, rng);
    if action_ill_conditioned(&u, &a)? {
        return Ok(Outcome::Rejected);
    }
    let v = act_direct(&u, &a)?;
    let one = identity(alg);
    let below = min_eigenvalue(&(&one - v.element()))?;
    let above = min_eigenvalue(&(&one + v.element()))?;
    Ok(Outcome::Residual((-below).max(-above).max(0.0)))
}

fn act_oracle_agreement(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let a = sample_interior(alg, rng);
    if action_ill_conditioned(&u, &a)? {
        return Ok(Outcome::Rejected);
    }
    let direct = act_direct(&u, &a)?;
    let via_representation = act(&u, &a)?;
    Ok(Outcome::Residual(rel(direct.distance(&via_representation), direct.element().norm())))
}

fn act_semigroup(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let a = sample_mixed_cone(alg, rng)?;
    let b = sample_mixed_cone(alg, rng)?;
    let step = act(&u, &a)?;
    let one = identity(alg);
    for w in [&u, &step] {
        if ill_conditioned(&[&(represent(w)?.x() + &one)])? {
            return Ok(Outcome::Rejected);
        }
    }
    let two_steps = act(&step, &b)?;
    let one_step = act(&u, &(&a + &b))?;
    Ok(Outcome::Residual(rel(two_steps.distance(&one_step), one_step.element().norm())))
}

fn act_equivariance(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = sample_mixed_cone(alg, rng)?;
    let a = sample_interior(alg, rng);
    let lhs = act(&cayley(&x)?, &a)?;
    let rhs = cayley(&(&x + &a))?;
    Ok(Outcome::Residual(rel(lhs.distance(&rhs), rhs.element().norm())))
}

fn act_injectivity(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = sample_boundary(alg, rng)?;
    let q = sample_boundary(alg, rng)?;
    let a = sample_interior(alg, rng);
    let (u, v) = (embed(&p)?, embed(&q)?);
    if u.distance(&v) < 1e-3 {
        return Ok(Outcome::Residual(0.0));
    }
    let moved = |b: &BoundaryPoint| b.x() + &quad(&b.e_perp()).apply(&a);
    let rep_gap = p.e().distance(q.e()) + moved(&p).distance(&moved(&q));
    let point_gap = act(&u, &a)?.distance(&act(&v, &a)?);
    Ok(Outcome::fail_if(!(rep_gap > 0.0 && point_gap > 0.0)))
}

fn roundtrip(alg: &Algebra, index: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = match index % 4 {
        0 => BoundaryPoint::new(Element::zeros(alg), sample_cone(alg, rng))?,
        1 => sample_boundary_stratum(alg, rng, false)?,
        2 => sample_boundary(alg, rng)?,
        _ => represent(&sample_corner(alg, rng))?,
    };
    if ill_conditioned(&[&(p.x() + &identity(alg))])? {
        return Ok(Outcome::Rejected);
    }
    let u = embed(&p)?;
    let back = represent(&u)?;
    let u_again = embed(&back)?;
    let point = rel(u_again.distance(&u), u.element().norm());
    let pair = back.e().distance(p.e()) + rel(back.x().distance(p.x()), p.x().norm());
    Ok(Outcome::Residual(point.max(pair)))
}

fn c1_forward(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let b = sample_interior(alg, rng);
    let a = sample_mixed_cone(alg, rng)?;
    let v = act(&u, &(&b + &a))?;
    Ok(Outcome::fail_if(!dominates(&v, &a)?))
}

fn c1_converse(alg: &Algebra, index: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (u, a) = if index.is_multiple_of(2) {
        let w = sample_x(alg, rng)?;
        let b = sample_interior(alg, rng);
        let a = sample_mixed_cone(alg, rng)?;
        (act(&w, &(&b + &a))?, a)
    } else {
        (sample_x(alg, rng)?, sample_mixed_cone(alg, rng)?.scale(0.1))
    };
    if !dominates(&u, &a)? {
        return Ok(Outcome::Residual(0.0));
    }
    let one = identity(alg);
    let mut eps = 1e-2;
    for _ in 0..40 {
        let shifted = &a + &one.scale(eps);
        if let Some(v) = preimage(&u, &shifted)? {
            let back = act(&v, &shifted)?;
            return Ok(Outcome::fail_if(rel(back.distance(&u), u.element().norm()) > EPS_ACTION));
        }
        eps *= 0.5;
    }
    Ok(Outcome::fail_if(true))
}

fn c2_membership(alg: &Algebra, index: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let a = match index % 10 {
        0 => sample_cone_boundary(alg, rng)?,
        1..=3 => sample_cone(alg, rng),
        _ => sample_element(alg, rng),
    };
    let member = a_set_member(&CompactifiedPoint::minus_one(alg), &a)?;
    Ok(Outcome::fail_if(member != cone_classify(&a)?.in_cone()))
}

/// Approximates `u` by `i(x + M·e)` with `(e, x) = represent(u)`. The exact
/// distance is `2‖e‖/(M + 1)`; the residual is the deviation from it over
/// `M ∈ {10, 100, 1000}`, infinite if the distances fail to shrink.
///
/// `M` stays moderate: eigenvalue grouping is relative to the norm, so a
/// huge `M` would merge the remaining eigenvalues of `x`.
fn c2_density(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let p = represent(&u)?;
    let mut worst = 0.0f64;
    let mut last = f64::INFINITY;
    for m in [10.0, 100.0, 1000.0] {
        let d = cayley(&(p.x() + &p.e().scale(m)))?.distance(&u);
        if d > last {
            return Ok(Outcome::Residual(f64::INFINITY));
        }
        last = d;
        worst = worst.max((d - 2.0 * p.e().norm() / (m + 1.0)).abs());
    }
    Ok(Outcome::Residual(worst))
}

/// Basis of `V₁(e) ⊕ V_{1/2}(e)`, the kernel of `P(e⊥)`.
fn upper_peirce_basis(p: &BoundaryPoint) -> Result<Vec<Element>> {
    let pd = peirce(p.e())?;
    let m = pd.p1.matrix() + pd.p_half.matrix();
    let b = range_basis(&m);
    let alg = p.e().algebra();
    b.column_iter().map(|c| Element::from_vector(alg.clone(), c.clone_owned())).collect()
}

fn c3_separation(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = sample_boundary(alg, rng)?;
    let q = sample_boundary(alg, rng)?;
    if p.e().distance(q.e()) + p.x().distance(q.x()) < 1e-6 {
        return Ok(Outcome::Residual(0.0));
    }
    let (u, v) = (embed(&p)?, embed(&q)?);
    let mut probes = vec![-p.x(), -q.x()];
    for w in upper_peirce_basis(&p)?.into_iter().chain(upper_peirce_basis(&q)?) {
        for t in [1.0, 10.0, 100.0] {
            probes.push(w.scale(t));
            probes.push(w.scale(-t));
        }
    }
    for a in &probes {
        if a_set_member(&u, a)? != a_set_member(&v, a)? {
            return Ok(Outcome::Residual(0.0));
        }
    }
    Ok(Outcome::fail_if(true))
}

fn homotopy_endpoints(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let ok = homotopy_point(1.0, &u)? == u && homotopy_point(0.0, &u)? == CompactifiedPoint::minus_one(alg);
    Ok(Outcome::fail_if(!ok))
}

const HOMOTOPY_TIMES: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

fn homotopy_interval(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    for t in HOMOTOPY_TIMES {
        if !in_interval(homotopy_point(t, &u)?.element())? {
            return Ok(Outcome::fail_if(true));
        }
    }
    Ok(Outcome::Residual(0.0))
}

/// Samples with an eigenvalue `μ` where `|μ + 1|` falls between the grouping
/// thresholds of `u` and of `h_t(u)` are rejected: there the two spectrum
/// tests disagree by tolerance, not by mathematics.
fn homotopy_spectrum(alg: &Algebra, _: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let u = sample_x(alg, rng)?;
    let base = spectrum_contains(u.element(), -1.0)?;
    let gaps: Vec<f64> = spectral_decompose(u.element())?.eigenvalues().iter().map(|m| (m + 1.0).abs()).collect();
    let u_threshold = EPS_GROUP * u.element().norm().max(1.0);
    let mut failed = !spectrum_contains(homotopy_point(0.0, &u)?.element(), -1.0)?;
    for t in &HOMOTOPY_TIMES[1..] {
        let h = homotopy_point(*t, &u)?;
        let h_threshold = EPS_GROUP * h.element().norm().max(1.0) / t;
        let (lo, hi) = (u_threshold.min(h_threshold), u_threshold.max(h_threshold));
        if gaps.iter().any(|g| *g > lo && *g <= hi) {
            return Ok(Outcome::Rejected);
        }
        failed |= spectrum_contains(h.element(), -1.0)? != base;
    }
    Ok(Outcome::fail_if(failed))
}

fn axb_action_law(_: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = axb::sample_plane(rng, 3.0, 0.2);
    let g = axb::sample_group(rng);
    let h = axb::sample_group(rng);
    let lhs = axb::act_plane(&p, &axb::compose(&g, &h));
    let rhs = axb::act_plane(&axb::act_plane(&p, &g), &h);
    Ok(Outcome::Residual(axb::plane_distance(&lhs, &rhs)))
}

fn axb_invariance(index: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = axb::sample_x_plane(rng, 0.1);
    let interior = index % 2 == 1;
    let g = axb::sample_semigroup(rng, interior);
    let ok = axb::in_x(&p, false)
        && axb::in_semigroup(&g, interior)
        && axb::in_x(&axb::act_plane(&p, &g), interior);
    Ok(Outcome::fail_if(!ok))
}

fn axb_orbit(_: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let q = axb::sample_x_plane(rng, 0.1);
    if !axb::in_x(&q, true) {
        return Ok(Outcome::Residual(0.0));
    }
    let ok = match axb::orbit_preimage(&q) {
        Some((p, g)) => {
            axb::in_x(&p, false)
                && axb::in_semigroup(&g, true)
                && axb::plane_distance(&axb::act_plane(&p, &g), &q) <= 1e-12
        }
        None => false,
    };
    Ok(Outcome::fail_if(!ok))
}

/// For `M ∈ {10, 100}`, every sampled point leaves `{x ≤ M}` beyond the
/// explicit threshold `s*`, monotonically in `s`.
fn axb_escape(_: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let p = axb::sample_plane(rng, 3.0, 0.2);
    let first = |q: axb::PlanePoint| q.x().finite().unwrap_or(f64::NEG_INFINITY);
    let mut ok = true;
    for m in [10.0, 100.0] {
        let (s_star, r_star) = axb::escape_threshold(m);
        let mut last = f64::NEG_INFINITY;
        for k in [0.5, 0.1, 1e-3, 1e-6] {
            let x = first(axb::escape_homotopy_complement(r_star * k, &p)?);
            ok &= x > m && x >= last;
            last = x;
        }
        if s_star < 1.0 {
            let s = s_star + 0.5 * (1.0 - s_star);
            ok &= first(axb::escape_homotopy(s, &p)?) > m;
        }
    }
    let mut last = f64::NEG_INFINITY;
    for s in [0.0, 0.1, 0.5, 0.9, 0.99] {
        let x = first(axb::escape_homotopy(s, &p)?);
        ok &= x >= last;
        last = x;
    }
    Ok(Outcome::fail_if(!ok))
}
