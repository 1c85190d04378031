use nalgebra::DMatrix;

use super::jacobi::symmetric_eigen;
use crate::algebra::{jordan_product, l_operator, Element, LinearOperator};
use crate::error::{Error, Result};
use crate::tol::EPS_IDEMPOTENT;

/// Orthogonal projectors onto `V₀(e)`, `V_{1/2}(e)` and `V₁(e)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeirceDecomposition {
    pub e: Element,
    pub p0: LinearOperator,
    pub p_half: LinearOperator,
    pub p1: LinearOperator,
}

/// Fails with `NotIdempotent` unless `‖e² − e‖ ≤ EPS_IDEMPOTENT · max(1, ‖e‖)`.
pub fn check_idempotent(e: &Element) -> Result<()> {
    let residual = (&jordan_product(e, e)? - e).norm();
    if residual > EPS_IDEMPOTENT * e.norm().max(1.0) {
        return Err(Error::NotIdempotent { residual });
    }
    Ok(())
}

/// Peirce projectors, built from the eigenvectors of `L(e)` sorted into the
/// eigenvalues `0`, `1/2` and `1`.
pub fn peirce(e: &Element) -> Result<PeirceDecomposition> {
    check_idempotent(e)?;
    let alg = e.algebra();
    let d = alg.dim();
    let (values, vectors) = symmetric_eigen(l_operator(e).matrix())?;
    let mut projectors = [DMatrix::zeros(d, d), DMatrix::zeros(d, d), DMatrix::zeros(d, d)];
    for (k, l) in values.iter().enumerate() {
        let slot = [0.0, 0.5, 1.0]
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - l).abs().total_cmp(&(b.1 - l).abs()))
            .map(|(i, _)| i)
            .expect("three targets");
        let v = vectors.column(k);
        projectors[slot] += v * v.transpose();
    }
    let [p0, p_half, p1] = projectors.map(|m| LinearOperator::from_parts(alg.clone(), m));
    Ok(PeirceDecomposition { e: e.clone(), p0, p_half, p1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{identity, quad, Algebra};
    use approx::assert_abs_diff_eq;
    use std::sync::Arc;

    fn alg(s: &str) -> Algebra {
        Arc::new(s.parse().unwrap())
    }

    #[test]
    fn trivial_idempotents() {
        let a = alg("sym:3");
        let id = LinearOperator::identity(&a);
        let pd = peirce(&identity(&a)).unwrap();
        assert_abs_diff_eq!(pd.p1.matrix(), id.matrix(), epsilon = 1e-14);
        assert!(pd.p0.frobenius_norm() < 1e-14 && pd.p_half.frobenius_norm() < 1e-14);
        let pd = peirce(&Element::zeros(&a)).unwrap();
        assert_abs_diff_eq!(pd.p0.matrix(), id.matrix(), epsilon = 1e-14);
    }

    #[test]
    fn diagonal_matrix_unit() {
        // Oracle: eigenspaces of the 3×3 matrix of L(E11) = diag(1, 0, 1/2).
        let a = alg("sym:2");
        let e11 = Element::new(a.clone(), vec![1.0, 0.0, 0.0]).unwrap();
        let pd = peirce(&e11).unwrap();
        assert_abs_diff_eq!(pd.p1.matrix(), &DMatrix::from_diagonal(&nalgebra::dvector![1.0, 0.0, 0.0]), epsilon = 1e-15);
        assert_abs_diff_eq!(pd.p0.matrix(), &DMatrix::from_diagonal(&nalgebra::dvector![0.0, 1.0, 0.0]), epsilon = 1e-15);
        assert_abs_diff_eq!(pd.p_half.matrix(), &DMatrix::from_diagonal(&nalgebra::dvector![0.0, 0.0, 1.0]), epsilon = 1e-15);
    }

    #[test]
    fn projectors_agree_with_lagrange_polynomials_and_quad() {
        // Oracle: L(e) satisfies L(L − 1/2)(L − 1) = 0, so
        // Π₁ = L(2L − 1), Π_{1/2} = 4L(1 − L), Π₀ = (2L − 1)(L − 1).
        let a = alg("spin:4");
        let e = Element::new(a.clone(), vec![0.5, 0.3, -0.4, 0.0]).unwrap();
        let pd = peirce(&e).unwrap();
        let l = l_operator(&e);
        let id = LinearOperator::identity(&a);
        let two_l_minus = &l.scale(2.0) - &id;
        assert_abs_diff_eq!(pd.p1.matrix(), (&l * &two_l_minus).matrix(), epsilon = 1e-14);
        assert_abs_diff_eq!(pd.p_half.matrix(), (&l * &(&id - &l)).scale(4.0).matrix(), epsilon = 1e-14);
        assert_abs_diff_eq!(pd.p0.matrix(), (&two_l_minus * &(&l - &id)).matrix(), epsilon = 1e-14);
        assert_abs_diff_eq!(pd.p1.matrix(), quad(&e).matrix(), epsilon = 1e-14);
    }

    #[test]
    fn rejects_non_idempotent() {
        let a = alg("rn:2");
        let x = Element::new(a, vec![2.0, 0.0]).unwrap();
        assert!(matches!(peirce(&x), Err(Error::NotIdempotent { .. })));
    }
}
