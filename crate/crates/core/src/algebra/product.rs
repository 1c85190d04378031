//! The Jordan product and multiplication operators, block by block.

use nalgebra::{DMatrix, DVector, DVectorView};

use super::{Algebra, AlgebraDescriptor, Element, LinearOperator};
use crate::error::Result;

/// Converts `sym:n` coordinates to the symmetric matrix they represent.
///
/// Basis order: `E_ii` for `i = 0..n`, then `(E_ij + E_ji)/√2` for `i < j`
/// in row-major order.
pub fn sym_to_matrix(coords: DVectorView<'_, f64>, n: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = coords[i];
    }
    let mut k = n;
    for i in 0..n {
        for j in (i + 1)..n {
            let v = coords[k] * std::f64::consts::FRAC_1_SQRT_2;
            m[(i, j)] = v;
            m[(j, i)] = v;
            k += 1;
        }
    }
    m
}

/// Inverse of [`sym_to_matrix`]; the upper and lower triangles are averaged.
pub fn matrix_to_sym(m: &DMatrix<f64>) -> DVector<f64> {
    let n = m.nrows();
    let mut c = DVector::zeros(n * (n + 1) / 2);
    for i in 0..n {
        c[i] = m[(i, i)];
    }
    let mut k = n;
    for i in 0..n {
        for j in (i + 1)..n {
            c[k] = (m[(i, j)] + m[(j, i)]) * std::f64::consts::FRAC_1_SQRT_2;
            k += 1;
        }
    }
    c
}

pub fn identity(algebra: &Algebra) -> Element {
    let mut c = DVector::zeros(algebra.dim());
    for block in algebra.blocks() {
        match block.kind {
            AlgebraDescriptor::Componentwise(_) => c.rows_mut(block.offset, block.dim).fill(1.0),
            AlgebraDescriptor::RealSymmetric(n) => c.rows_mut(block.offset, *n).fill(1.0),
            AlgebraDescriptor::SpinFactor(_) => c[block.offset] = 1.0,
            AlgebraDescriptor::DirectSum(_) => unreachable!("blocks are simple"),
        }
    }
    Element::from_parts(algebra.clone(), c)
}

pub fn jordan_product(x: &Element, y: &Element) -> Result<Element> {
    x.check_same(y)?;
    let alg = x.algebra();
    let mut out = DVector::zeros(alg.dim());
    for block in alg.blocks() {
        let xs = x.coords().rows(block.offset, block.dim);
        let ys = y.coords().rows(block.offset, block.dim);
        let mut dst = out.rows_mut(block.offset, block.dim);
        match block.kind {
            AlgebraDescriptor::Componentwise(_) => dst.copy_from(&xs.component_mul(&ys)),
            AlgebraDescriptor::RealSymmetric(n) => {
                let a = sym_to_matrix(xs, *n);
                let b = sym_to_matrix(ys, *n);
                let ab = &a * &b;
                let jordan = (&ab + ab.transpose()) * 0.5;
                dst.copy_from(&matrix_to_sym(&jordan));
            }
            AlgebraDescriptor::SpinFactor(_) => {
                let (s, t) = (xs[0], ys[0]);
                let u = xs.rows(1, block.dim - 1);
                let v = ys.rows(1, block.dim - 1);
                dst[0] = s * t + u.dot(&v);
                dst.rows_mut(1, block.dim - 1).copy_from(&(v * s + u * t));
            }
            AlgebraDescriptor::DirectSum(_) => unreachable!("blocks are simple"),
        }
    }
    Ok(Element::from_parts(alg.clone(), out))
}

/// `x∘x`.
pub fn square(x: &Element) -> Element {
    jordan_product(x, x).expect("same algebra")
}

/// The multiplication operator `L(x): y ↦ x∘y`.
pub fn l_operator(x: &Element) -> LinearOperator {
    let alg = x.algebra();
    let mut m = DMatrix::zeros(alg.dim(), alg.dim());
    for block in alg.blocks() {
        let (o, d) = (block.offset, block.dim);
        let xs = x.coords().rows(o, d);
        let mut dst = m.view_mut((o, o), (d, d));
        match block.kind {
            AlgebraDescriptor::Componentwise(_) => dst.set_diagonal(&xs.clone_owned()),
            AlgebraDescriptor::SpinFactor(_) => {
                let s = xs[0];
                dst.fill_diagonal(s);
                for k in 1..d {
                    dst[(0, k)] = xs[k];
                    dst[(k, 0)] = xs[k];
                }
            }
            AlgebraDescriptor::RealSymmetric(n) => {
                // Column j is x∘b_j for the j-th basis vector of the block.
                let a = sym_to_matrix(xs, *n);
                for j in 0..d {
                    let mut unit = DVector::zeros(d);
                    unit[j] = 1.0;
                    let b = sym_to_matrix(unit.rows(0, d), *n);
                    let ab = &a * &b;
                    let col = matrix_to_sym(&((&ab + ab.transpose()) * 0.5));
                    dst.set_column(j, &col);
                }
            }
            AlgebraDescriptor::DirectSum(_) => unreachable!("blocks are simple"),
        }
    }
    LinearOperator::from_parts(alg.clone(), m)
}
