//! Finite-dimensional Euclidean Jordan algebras, their cones of squares, and
//! the order interval `[-1, 1]` as the Wiener–Hopf compactification of the
//! cone, together with the ax+b semigroup example and a seeded property
//! harness that verifies all of it numerically.

pub mod algebra;
pub mod axb;
pub mod error;
pub mod harness;
pub mod spectral;
pub mod tol;
pub mod wiener_hopf;

pub use algebra::{Algebra, AlgebraDescriptor, ConeClass, Element, LinearOperator};
pub use error::{Error, Result};
pub use spectral::{PeirceDecomposition, SpectralDecomposition};
pub use wiener_hopf::{BoundaryPoint, CompactifiedPoint};
