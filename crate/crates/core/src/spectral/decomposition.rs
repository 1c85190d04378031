use nalgebra::DVector;

use super::jacobi::symmetric_eigen;
use crate::algebra::{matrix_to_sym, sym_to_matrix, Algebra, AlgebraDescriptor, Element};
use crate::error::{Error, Result};
use crate::tol::EPS_GROUP;

/// `x = Σ λᵢ cᵢ` with sorted distinct eigenvalues and a complete system of
/// orthogonal idempotents.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    idempotents: Vec<Element>,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &Element)> {
        self.eigenvalues.iter().copied().zip(&self.idempotents)
    }

    /// `Σ f(λᵢ) cᵢ` without checking the values of `f`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Element {
        let alg = self.idempotents[0].algebra().clone();
        let mut acc = DVector::zeros(alg.dim());
        for (l, c) in self.iter() {
            acc.axpy(f(l), c.coords(), 1.0);
        }
        Element::from_parts(alg, acc)
    }

    /// Like [`map`](Self::map) but fails with `DomainError` when `f` is not
    /// finite at some eigenvalue.
    pub fn try_map(&self, f: impl Fn(f64) -> f64) -> Result<Element> {
        if let Some(&bad) = self.eigenvalues.iter().find(|&&l| !f(l).is_finite()) {
            return Err(Error::DomainError { eigenvalue: bad });
        }
        Ok(self.map(f))
    }

    /// Sum of the idempotents whose eigenvalue satisfies `keep`.
    pub fn projection(&self, keep: impl Fn(f64) -> bool) -> Element {
        self.map(|l| if keep(l) { 1.0 } else { 0.0 })
    }
}

struct Piece {
    value: f64,
    rank: usize,
    idempotent: DVector<f64>,
}

pub fn spectral_decompose(x: &Element) -> Result<SpectralDecomposition> {
    let alg = x.algebra();
    let dim = alg.dim();
    let mut pieces = Vec::with_capacity(alg.rank());

    for block in alg.blocks() {
        let (o, d) = (block.offset, block.dim);
        let xs = x.coords().rows(o, d);
        let embed = |local: DVector<f64>| {
            let mut full = DVector::zeros(dim);
            full.rows_mut(o, d).copy_from(&local);
            full
        };
        match block.kind {
            AlgebraDescriptor::Componentwise(_) => {
                for k in 0..d {
                    let mut c = DVector::zeros(dim);
                    c[o + k] = 1.0;
                    pieces.push(Piece { value: xs[k], rank: 1, idempotent: c });
                }
            }
            AlgebraDescriptor::SpinFactor(_) => {
                let s = xs[0];
                let u = xs.rows(1, d - 1).clone_owned();
                let r = u.norm();
                if r == 0.0 {
                    let mut c = DVector::zeros(d);
                    c[0] = 1.0;
                    pieces.push(Piece { value: s, rank: 2, idempotent: embed(c) });
                } else {
                    for sign in [-1.0, 1.0] {
                        let mut c = DVector::zeros(d);
                        c[0] = 0.5;
                        c.rows_mut(1, d - 1).copy_from(&(&u * (sign * 0.5 / r)));
                        pieces.push(Piece { value: s + sign * r, rank: 1, idempotent: embed(c) });
                    }
                }
            }
            AlgebraDescriptor::RealSymmetric(n) => {
                let (values, vectors) = symmetric_eigen(&sym_to_matrix(xs, *n))?;
                for (k, value) in values.into_iter().enumerate() {
                    let v = vectors.column(k);
                    let proj = v * v.transpose();
                    pieces.push(Piece { value, rank: 1, idempotent: embed(matrix_to_sym(&proj)) });
                }
            }
            AlgebraDescriptor::DirectSum(_) => unreachable!("blocks are simple"),
        }
    }

    pieces.sort_by(|a, b| a.value.total_cmp(&b.value));
    let gap = EPS_GROUP * x.norm().max(1.0);
    Ok(group(alg, pieces, gap))
}

// Greedy left-to-right merge: a piece joins the current group while it is
// within `gap` of the group's first eigenvalue.
fn group(alg: &Algebra, pieces: Vec<Piece>, gap: f64) -> SpectralDecomposition {
    let mut eigenvalues = Vec::new();
    let mut idempotents: Vec<Element> = Vec::new();
    let mut start = f64::NAN;
    let mut weighted = 0.0;
    let mut rank = 0usize;
    let mut acc = DVector::zeros(alg.dim());

    let mut flush = |weighted: f64, rank: usize, acc: &mut DVector<f64>| {
        eigenvalues.push(weighted / rank as f64);
        idempotents.push(Element::from_parts(alg.clone(), std::mem::replace(acc, DVector::zeros(alg.dim()))));
    };

    for p in pieces {
        if rank > 0 && p.value - start > gap {
            flush(weighted, rank, &mut acc);
            rank = 0;
            weighted = 0.0;
        }
        if rank == 0 {
            start = p.value;
        }
        weighted += p.value * p.rank as f64;
        rank += p.rank;
        acc += &p.idempotent;
    }
    flush(weighted, rank, &mut acc);
    SpectralDecomposition { eigenvalues, idempotents }
}

/// Functional calculus `Σ f(λᵢ) cᵢ`.
pub fn apply_scalar(x: &Element, f: impl Fn(f64) -> f64) -> Result<Element> {
    spectral_decompose(x)?.try_map(f)
}

/// `true` iff some eigenvalue is within `EPS_GROUP · max(1, ‖x‖)` of `lambda0`.
pub fn spectrum_contains(x: &Element, lambda0: f64) -> Result<bool> {
    let sd = spectral_decompose(x)?;
    let threshold = EPS_GROUP * x.norm().max(1.0);
    Ok(sd.eigenvalues().iter().any(|l| (l - lambda0).abs() <= threshold))
}
