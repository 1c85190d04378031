use super::point::CompactifiedPoint;
use crate::algebra::identity;
use crate::error::{Error, Result};

/// `h_t(u) = t·u + (t − 1)·1`, contracting `[−1, 1]` onto `−1` as `t → 0`.
pub fn homotopy_point(t: f64, u: &CompactifiedPoint) -> Result<CompactifiedPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange { value: t, range: "[0, 1]" });
    }
    let one = identity(u.algebra());
    Ok(CompactifiedPoint::from_element_unchecked(&u.element().scale(t) + &one.scale(t - 1.0)))
}
