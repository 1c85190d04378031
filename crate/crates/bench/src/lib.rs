//! Seeded inputs shared by the benchmarks.

use std::sync::Arc;

use symcone::harness::{sample_element, sample_interior, sample_rng, sample_x};
use symcone::{Algebra, CompactifiedPoint, Element};

pub const ALGEBRAS: [&str; 4] = ["rn:5", "sym:4", "spin:4", "sum(sym:2,spin:3)"];

pub fn algebra(descriptor: &str) -> Algebra {
    Arc::new(descriptor.parse().expect("valid descriptor"))
}

pub struct Fixture {
    pub x: Element,
    pub a: Element,
    pub b: Element,
    pub u: CompactifiedPoint,
}

pub fn fixture(alg: &Algebra, seed: u64) -> Fixture {
    let mut rng = sample_rng(seed, "bench", 0);
    Fixture {
        x: sample_element(alg, &mut rng),
        a: sample_interior(alg, &mut rng),
        b: sample_interior(alg, &mut rng),
        u: sample_x(alg, &mut rng).expect("sampler succeeds"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        for d in ALGEBRAS {
            let alg = algebra(d);
            assert_eq!(fixture(&alg, 1).x, fixture(&alg, 1).x);
        }
    }
}
