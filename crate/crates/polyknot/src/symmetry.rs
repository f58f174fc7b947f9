//! Dihedral relabeling actions on polygons (label reversal and rotation)
//! plus mirror reflection.
//!
//! All three are pure vertex-list permutations or reflections with no
//! renormalization, so they preserve embeddedness status and clearance
//! exactly; mirror is an isometry conjugate to any other reflection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::Polygon;

/// A relabeling or reflection to apply to a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelAction {
    /// Keep the first vertex, reverse the order of the rest.
    Reverse,
    /// Cyclic shift of the labels by k places.
    Rotate(usize),
    /// Reflect every vertex through the plane z = 0.
    Mirror,
}

/// Apply a [`LabelAction`].
pub fn apply(polygon: &Polygon, action: LabelAction) -> Result<Polygon> {
    match action {
        LabelAction::Reverse => Ok(reverse(polygon)),
        LabelAction::Rotate(k) => rotate_labels(polygon, k),
        LabelAction::Mirror => Ok(mirror(polygon)),
    }
}

/// `<v1, v2, ..., vn>  ->  <v1, vn, ..., v2>`: orientation reversal keeping
/// the first vertex. An involution.
pub fn reverse(polygon: &Polygon) -> Polygon {
    let v = polygon.vertices();
    let mut out = Vec::with_capacity(v.len());
    out.push(v[0]);
    out.extend(v[1..].iter().rev().copied());
    Polygon::from_vertices_unchecked(out)
}

/// `<v1, ..., vn>  ->  <v_{k+1}, ..., vn, v1, ..., v_k>`: cyclic label shift.
pub fn rotate_labels(polygon: &Polygon, k: usize) -> Result<Polygon> {
    let n = polygon.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let v = polygon.vertices();
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&v[k..]);
    out.extend_from_slice(&v[..k]);
    Ok(Polygon::from_vertices_unchecked(out))
}

/// Reflect every vertex through the plane z = 0.
pub fn mirror(polygon: &Polygon) -> Polygon {
    polygon.map_vertices(|v| v.mirror_z())
}
