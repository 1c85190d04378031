//! Euclidean Jordan algebra instances and their fundamental operations.

mod descriptor;
mod element;
mod operator;
mod product;
mod quadratic;

pub use descriptor::{parse_descriptor, AlgebraDescriptor, Block};
pub use element::{Algebra, Element};
pub use operator::LinearOperator;
pub use product::{identity, jordan_product, l_operator, matrix_to_sym, square, sym_to_matrix};
pub use quadratic::{
    condition_number, cone_classify, hua_residual, inverse, min_eigenvalue, mutation_inverse, mutation_product,
    quad, quad_bilinear, ConeClass,
};
