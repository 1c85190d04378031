use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;

use super::{Algebra, Element};

/// A linear map `V → V` acting on coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator {
    algebra: Algebra,
    matrix: DMatrix<f64>,
}

impl LinearOperator {
    pub(crate) fn from_parts(algebra: Algebra, matrix: DMatrix<f64>) -> Self {
        debug_assert_eq!(matrix.shape(), (algebra.dim(), algebra.dim()));
        Self { algebra, matrix }
    }

    pub fn identity(algebra: &Algebra) -> Self {
        let d = algebra.dim();
        Self::from_parts(algebra.clone(), DMatrix::identity(d, d))
    }

    pub fn zeros(algebra: &Algebra) -> Self {
        let d = algebra.dim();
        Self::from_parts(algebra.clone(), DMatrix::zeros(d, d))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert_eq!(x.dim(), self.matrix.ncols(), "operator applied across algebras");
        Element::from_parts(self.algebra.clone(), &self.matrix * x.coords())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_parts(self.algebra.clone(), &self.matrix * s)
    }

    /// `‖M − Mᵀ‖_F / max(1, ‖M‖_F)`.
    pub fn asymmetry(&self) -> f64 {
        (&self.matrix - self.matrix.transpose()).norm() / self.matrix.norm().max(1.0)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.norm()
    }
}

impl Add for &LinearOperator {
    type Output = LinearOperator;
    fn add(self, rhs: &LinearOperator) -> LinearOperator {
        LinearOperator::from_parts(self.algebra.clone(), &self.matrix + &rhs.matrix)
    }
}

impl Sub for &LinearOperator {
    type Output = LinearOperator;
    fn sub(self, rhs: &LinearOperator) -> LinearOperator {
        LinearOperator::from_parts(self.algebra.clone(), &self.matrix - &rhs.matrix)
    }
}

/// Composition: `(A * B)(x) = A(B(x))`.
impl Mul for &LinearOperator {
    type Output = LinearOperator;
    fn mul(self, rhs: &LinearOperator) -> LinearOperator {
        LinearOperator::from_parts(self.algebra.clone(), &self.matrix * &rhs.matrix)
    }
}
