use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::DVector;
use rand::Rng;
use rand_distr::StandardNormal;

use super::AlgebraDescriptor;
use crate::error::{Error, Result};

/// Shared handle to an algebra descriptor.
pub type Algebra = Arc<AlgebraDescriptor>;

/// A point of `V`, stored as coordinates in the algebra's orthonormal basis.
///
/// Every inner product in this crate is the plain dot product of coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    algebra: Algebra,
    coords: DVector<f64>,
}

impl Element {
    pub fn new(algebra: Algebra, coords: Vec<f64>) -> Result<Self> {
        Self::from_vector(algebra, DVector::from_vec(coords))
    }

    pub fn from_vector(algebra: Algebra, coords: DVector<f64>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::InvalidElement(format!(
                "{} expects {} coordinates, got {}",
                algebra,
                algebra.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidElement("non-finite coordinate".into()));
        }
        Ok(Self { algebra, coords })
    }

    /// Skips validation; callers guarantee the length.
    pub(crate) fn from_parts(algebra: Algebra, coords: DVector<f64>) -> Self {
        debug_assert_eq!(coords.len(), algebra.dim());
        Self { algebra, coords }
    }

    pub fn zeros(algebra: &Algebra) -> Self {
        let dim = algebra.dim();
        Self::from_parts(algebra.clone(), DVector::zeros(dim))
    }

    /// Coordinates drawn i.i.d. from the standard normal distribution.
    pub fn gaussian<R: Rng + ?Sized>(algebra: &Algebra, rng: &mut R) -> Self {
        let coords = DVector::from_fn(algebra.dim(), |_, _| rng.sample::<f64, _>(StandardNormal));
        Self::from_parts(algebra.clone(), coords)
    }

    /// The `j`-th orthonormal basis vector.
    pub fn basis(algebra: &Algebra, j: usize) -> Self {
        let mut e = Self::zeros(algebra);
        e.coords[j] = 1.0;
        e
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        self.coords.norm()
    }

    pub fn dot(&self, other: &Element) -> f64 {
        self.coords.dot(&other.coords)
    }

    pub fn distance(&self, other: &Element) -> f64 {
        (&self.coords - &other.coords).norm()
    }

    pub fn scale(&self, s: f64) -> Element {
        Self::from_parts(self.algebra.clone(), &self.coords * s)
    }

    /// `Ok` when both operands live in the same algebra.
    pub fn check_same(&self, other: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch { left: self.algebra.to_string(), right: other.algebra.to_string() })
        }
    }

    fn zip(&self, other: &Element, f: impl Fn(&DVector<f64>, &DVector<f64>) -> DVector<f64>) -> Element {
        assert!(self.check_same(other).is_ok(), "element arithmetic across algebras {} and {}", self.algebra, other.algebra);
        Self::from_parts(self.algebra.clone(), f(&self.coords, &other.coords))
    }
}

// Vector-space arithmetic panics on mismatched algebras, like shape
// mismatches in matrix libraries. Jordan operations return `AlgebraMismatch`.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

impl Mul<&Element> for f64 {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_length_and_non_finite() {
        let alg: Algebra = Arc::new(AlgebraDescriptor::RealSymmetric(2));
        assert!(Element::new(alg.clone(), vec![1.0, 2.0]).is_err());
        assert!(Element::new(alg.clone(), vec![1.0, f64::NAN, 0.0]).is_err());
        assert!(Element::new(alg, vec![1.0, 2.0, 3.0]).is_ok());
    }

    #[test]
    fn structural_equality_counts_as_same_algebra() {
        let a = Element::zeros(&Arc::new(AlgebraDescriptor::Componentwise(2)));
        let b = Element::zeros(&Arc::new(AlgebraDescriptor::Componentwise(2)));
        let c = Element::zeros(&Arc::new(AlgebraDescriptor::SpinFactor(2)));
        assert!(a.check_same(&b).is_ok());
        assert!(matches!(a.check_same(&c), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    #[should_panic(expected = "across algebras")]
    fn arithmetic_across_algebras_panics() {
        let a = Element::zeros(&Arc::new(AlgebraDescriptor::Componentwise(2)));
        let c = Element::zeros(&Arc::new(AlgebraDescriptor::SpinFactor(2)));
        let _ = &a + &c;
    }
}
