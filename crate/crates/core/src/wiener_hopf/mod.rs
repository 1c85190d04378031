//! The order interval `X = [−1, 1]` as the Wiener–Hopf compactification of
//! the cone of squares `Q`.
//!
//! Points of `X` correspond bijectively to pairs `(e, x)` with `e` an
//! idempotent and `x ∈ V₀(e) ∩ Q` ([`embed`], [`represent`]). The action of
//! `a ∈ Ω` is available both through its closed formula ([`act_direct`]) and
//! through the boundary parametrization, where it becomes the translation
//! `x ↦ x + P(e⊥)a` ([`act`]); the latter extends to all of `Q`.

mod action;
mod homotopy;
mod order;
mod point;
mod transform;

pub use action::{act, act_direct, preimage};
pub use homotopy::homotopy_point;
pub use order::{a_set_member, a_set_witness, dominates, interior_membership, witness_residual, OrderWitness};
pub use point::{in_interval, BoundaryPoint, CompactifiedPoint};
pub use transform::{cayley, cayley_by_inverse, embed, represent};

#[cfg(test)]
mod tests;
