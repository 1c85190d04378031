use nalgebra::{DMatrix, DVector};

use super::decomposition::spectral_decompose;
use super::peirce::check_idempotent;
use crate::algebra::{identity, quad, Element};
use crate::error::{Error, Result};
use crate::tol::{DROP_TOL, EPS_INV, EPS_SUBSPACE};

/// Orthonormal basis (as columns) of the column space of `m`, by
/// Gram–Schmidt with column pivoting. Columns whose residual norm falls to
/// `DROP_TOL` or below are dropped.
pub fn range_basis(m: &DMatrix<f64>) -> DMatrix<f64> {
    let mut residual = m.clone();
    let mut basis: Vec<DVector<f64>> = Vec::new();
    loop {
        let (best, norm) = residual
            .column_iter()
            .enumerate()
            .map(|(j, c)| (j, c.norm()))
            .fold((0, 0.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if norm <= DROP_TOL {
            break;
        }
        let mut q = residual.column(best).clone_owned();
        // Second pass against the accepted basis keeps q orthogonal to it.
        for b in &basis {
            q -= b * b.dot(&q);
        }
        let qn = q.norm();
        if qn <= DROP_TOL {
            residual.column_mut(best).fill(0.0);
            continue;
        }
        q /= qn;
        for mut col in residual.column_iter_mut() {
            let proj = q.dot(&col);
            col.axpy(-proj, &q, 1.0);
        }
        basis.push(q);
    }
    if basis.is_empty() {
        DMatrix::zeros(m.nrows(), 0)
    } else {
        DMatrix::from_columns(&basis)
    }
}

/// The inverse `ₑx⁻¹` of `x` inside the Jordan subalgebra `V₁(e)`, whose unit is `e`.
///
/// Solves `P(x) w = x` restricted to an orthonormal basis of `range P(e)`.
pub fn subalgebra_inverse(x: &Element, e: &Element) -> Result<Element> {
    x.check_same(e)?;
    check_idempotent(e)?;
    let p1 = quad(e);
    let residual = (&p1.apply(x) - x).norm();
    if residual > EPS_SUBSPACE * x.norm().max(1.0) {
        return Err(Error::NotInSubalgebra { residual });
    }
    let basis = range_basis(p1.matrix());
    if basis.ncols() == 0 {
        // V₁(0) = {0}, whose unit and inverse are both 0.
        return Ok(Element::zeros(x.algebra()));
    }

    // Spectrum of x inside V₁(e): shift the complementary block away from 0.
    let scale = x.norm();
    if scale == 0.0 {
        return Err(Error::SingularInSubalgebra);
    }
    let e_perp = &identity(x.algebra()) - e;
    let shifted = x + &e_perp.scale(scale);
    let smallest = spectral_decompose(&shifted)?.eigenvalues().iter().fold(f64::INFINITY, |m, l| m.min(l.abs()));
    if smallest <= EPS_INV * scale {
        return Err(Error::SingularInSubalgebra);
    }

    let restricted = basis.transpose() * quad(x).matrix() * &basis;
    let rhs = basis.transpose() * x.coords();
    let c = restricted.lu().solve(&rhs).ok_or(Error::SingularInSubalgebra)?;
    Ok(Element::from_parts(x.algebra().clone(), &basis * c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inverse, jordan_product, Algebra};
    use approx::assert_abs_diff_eq;
    use std::sync::Arc;

    fn alg(s: &str) -> Algebra {
        Arc::new(s.parse().unwrap())
    }

    fn el(a: &Algebra, c: &[f64]) -> Element {
        Element::new(a.clone(), c.to_vec()).unwrap()
    }

    #[test]
    fn range_basis_of_projector() {
        let m = DMatrix::from_row_slice(3, 3, &[0.5, 0.5, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 1.0]);
        let b = range_basis(&m);
        assert_eq!(b.ncols(), 2);
        assert_abs_diff_eq!(b.transpose() * &b, DMatrix::identity(2, 2), epsilon = 1e-15);
        assert_eq!(range_basis(&DMatrix::zeros(3, 3)).ncols(), 0);
    }

    #[test]
    fn unit_idempotent_gives_ordinary_inverse() {
        let a = alg("sym:3");
        let x = el(&a, &[3.0, 1.0, 2.0, 0.4, -0.3, 0.2]);
        let w = subalgebra_inverse(&x, &identity(&a)).unwrap();
        assert_abs_diff_eq!(w.coords(), inverse(&x).unwrap().coords(), epsilon = 1e-13);
    }

    #[test]
    fn idempotent_is_its_own_inverse() {
        let a = alg("spin:3");
        let e = el(&a, &[0.5, 0.3, 0.4]);
        assert_abs_diff_eq!(subalgebra_inverse(&e, &e).unwrap().coords(), e.coords(), epsilon = 1e-14);
    }

    #[test]
    fn one_dimensional_subalgebra() {
        // Oracle: scalar inversion in span{E11}.
        let a = alg("sym:2");
        let e11 = el(&a, &[1.0, 0.0, 0.0]);
        let w = subalgebra_inverse(&el(&a, &[2.0, 0.0, 0.0]), &e11).unwrap();
        assert_abs_diff_eq!(w.coords().as_slice(), &[0.5, 0.0, 0.0][..], epsilon = 1e-15);
    }

    #[test]
    fn product_with_inverse_is_the_local_unit() {
        let a = alg("sym:3");
        // e projects onto the first two coordinates; x lives in that 2×2 corner.
        let e = el(&a, &[1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let x = el(&a, &[2.0, -1.0, 0.0, 0.7, 0.0, 0.0]);
        let w = subalgebra_inverse(&x, &e).unwrap();
        assert_abs_diff_eq!(jordan_product(&x, &w).unwrap().coords(), e.coords(), epsilon = 1e-14);
    }

    #[test]
    fn error_paths() {
        let a = alg("sym:2");
        let e11 = el(&a, &[1.0, 0.0, 0.0]);
        assert!(matches!(subalgebra_inverse(&e11, &el(&a, &[2.0, 0.0, 0.0])), Err(Error::NotIdempotent { .. })));
        assert!(matches!(subalgebra_inverse(&el(&a, &[1.0, 1.0, 0.0]), &e11), Err(Error::NotInSubalgebra { .. })));
        assert!(matches!(subalgebra_inverse(&Element::zeros(&a), &e11), Err(Error::SingularInSubalgebra)));
        let e = identity(&a);
        assert!(matches!(subalgebra_inverse(&e11, &e), Err(Error::SingularInSubalgebra)));
        assert_eq!(subalgebra_inverse(&Element::zeros(&a), &Element::zeros(&a)).unwrap().norm(), 0.0);
    }
}
