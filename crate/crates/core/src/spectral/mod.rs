//! Spectral theorem, functional calculus, Peirce decomposition and
//! inversion inside the subalgebras `V₁(e)`.

mod decomposition;
mod jacobi;
mod peirce;
mod subalgebra;

pub use decomposition::{apply_scalar, spectral_decompose, spectrum_contains, SpectralDecomposition};
pub use jacobi::{symmetric_eigen, symmetric_operator_norm};
pub use peirce::{check_idempotent, peirce, PeirceDecomposition};
pub use subalgebra::{range_basis, subalgebra_inverse};

use rand::Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};

const MAX_RETRIES: usize = 100;

/// Sum of a random subset of the spectral frame of a Gaussian element.
///
/// With `allow_trivial = false` the subsets giving `0` and `1` are rejected,
/// which needs an algebra of rank at least 2.
pub fn random_idempotent<R: Rng + ?Sized>(algebra: &Algebra, rng: &mut R, allow_trivial: bool) -> Result<Element> {
    for _ in 0..MAX_RETRIES {
        let sd = spectral_decompose(&Element::gaussian(algebra, rng))?;
        let k = sd.len();
        if !allow_trivial && k < 2 {
            continue;
        }
        let mask: Vec<bool> = loop {
            let m: Vec<bool> = (0..k).map(|_| rng.random_bool(0.5)).collect();
            let picked = m.iter().filter(|&&b| b).count();
            if allow_trivial || (picked != 0 && picked != k) {
                break m;
            }
        };
        let mut e = Element::zeros(algebra);
        for (c, _) in sd.idempotents().iter().zip(&mask).filter(|(_, &b)| b) {
            e = &e + c;
        }
        return Ok(e);
    }
    Err(Error::RetryExhausted(MAX_RETRIES))
}
