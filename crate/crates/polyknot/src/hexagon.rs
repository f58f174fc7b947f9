//! Hexagon isotopy invariants: the signed triangle intersection numbers,
//! chirality, curl, the joint chirality-curl class, and region codes.
//!
//! For an embedded hexagon `<v1, ..., v6>`, each even-indexed vertex spans a
//! triangular disc with its neighbors; the disc can only be pierced by the
//! two edges not incident to it, and if both pierce they cancel. The product
//! of the three intersection numbers (chirality) together with the curl sign
//! separates the five geometric classes: unknots, two trefoil chiralities
//! crossed with two curl signs.

use std::fmt;

use serde::Serialize;

use crate::axis::{region_word, RegionCode};
use crate::error::{Error, Result};
use crate::geom::{orient, segment_triangle_crossing, Sign, Tolerance};
use crate::polygon::Polygon;

/// The invariant pair `(chirality, chirality^2 * curl)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JointClass {
    pub chirality: i8,
    pub curl_part: i8,
}

impl JointClass {
    pub fn as_pair(self) -> (i8, i8) {
        (self.chirality, self.curl_part)
    }

    /// Human-readable class name.
    pub fn name(self) -> &'static str {
        match (self.chirality, self.curl_part) {
            (0, 0) => "unknot",
            (1, 1) => "right-trefoil-up",
            (1, -1) => "right-trefoil-down",
            (-1, 1) => "left-trefoil-up",
            (-1, -1) => "left-trefoil-down",
            _ => "invalid",
        }
    }
}

impl fmt::Display for JointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+}, {:+})", self.chirality, self.curl_part)
    }
}

fn require_hexagon(h: &Polygon) -> Result<()> {
    if h.len() != 6 {
        return Err(Error::WrongVertexCount {
            n: h.len(),
            expected: 6,
        });
    }
    Ok(())
}

/// Triangle vertex indices and the two candidate piercing edges for each
/// invariant index i in {2, 4, 6}: the disc spanned by v_{i-1}, v_i, v_{i+1}
/// can only be pierced by the two edges not incident to it.
fn delta_layout(i: usize) -> Result<([usize; 3], [usize; 2])> {
    match i {
        2 => Ok(([0, 1, 2], [3, 4])),
        4 => Ok(([2, 3, 4], [5, 0])),
        6 => Ok(([4, 5, 0], [1, 2])),
        _ => Err(Error::DegenerateConfiguration(
            "delta index must be 2, 4, or 6",
        )),
    }
}

/// Signed intersection number of the hexagon with the open triangular disc
/// `v_{i-1} v_i v_{i+1}`, for i in {2, 4, 6}.
pub fn triangle_delta(h: &Polygon, i: usize, tol: Tolerance) -> Result<Sign> {
    require_hexagon(h)?;
    let (tri, edges) = delta_layout(i)?;
    let (t0, t1, t2) = (h.vertex(tri[0]), h.vertex(tri[1]), h.vertex(tri[2]));
    let mut total = 0i8;
    for e in edges {
        let (a, b) = h.edge(e);
        let s = segment_triangle_crossing(a, b, t0, t1, t2, tol)
            .map_err(|_| Error::DegenerateConfiguration("triangle crossing within tolerance"))?;
        total += s.value();
    }
    if total.abs() > 1 {
        // Both candidate edges pierced in the same direction: impossible for
        // an embedded hexagon.
        return Err(Error::DegenerateConfiguration(
            "inconsistent piercing pattern",
        ));
    }
    #[cfg(debug_assertions)]
    verify_other_edges_miss(h, tri, edges, tol);
    Ok(Sign::from_value(total))
}

/// Debug check: every edge other than the two candidates contributes zero.
/// Edges incident to the triangle are shrunk slightly off their endpoints so
/// the shared-vertex contact does not register.
#[cfg(debug_assertions)]
fn verify_other_edges_miss(h: &Polygon, tri: [usize; 3], candidates: [usize; 2], tol: Tolerance) {
    let (t0, t1, t2) = (h.vertex(tri[0]), h.vertex(tri[1]), h.vertex(tri[2]));
    for e in 0..6 {
        if candidates.contains(&e) {
            continue;
        }
        let (a, b) = h.edge(e);
        let shrink = 1e-7;
        let (a, b) = (a.lerp(b, shrink), b.lerp(a, shrink));
        if let Ok(s) = segment_triangle_crossing(a, b, t0, t1, t2, tol) {
            debug_assert_eq!(s, Sign::Zero, "incident edge {e} pierces triangle {tri:?}");
        }
    }
}

/// All three triangle intersection numbers `(delta_2, delta_4, delta_6)`.
pub fn deltas(h: &Polygon, tol: Tolerance) -> Result<[Sign; 3]> {
    Ok([
        triangle_delta(h, 2, tol)?,
        triangle_delta(h, 4, tol)?,
        triangle_delta(h, 6, tol)?,
    ])
}

/// Chirality: the product `delta_2 * delta_4 * delta_6`.
pub fn chirality(h: &Polygon, tol: Tolerance) -> Result<Sign> {
    let d = deltas(h, tol)?;
    Ok(d[0] * d[1] * d[2])
}

/// Curl: the sign of `(v3 - v1) x (v5 - v1) . (v2 - v1)`.
///
/// Zero exactly when v1, v2, v3, v5 are coplanar within tolerance.
pub fn curl(h: &Polygon, tol: Tolerance) -> Result<Sign> {
    require_hexagon(h)?;
    Ok(orient(
        h.vertex(0),
        h.vertex(2),
        h.vertex(4),
        h.vertex(1),
        tol,
    ))
}

/// The joint chirality-curl class `(delta, delta^2 * curl)`.
pub fn joint_class(h: &Polygon, tol: Tolerance) -> Result<JointClass> {
    let chi = chirality(h, tol)?;
    let curl_part = chi * chi * curl(h, tol)?;
    Ok(JointClass {
        chirality: chi.value(),
        curl_part: curl_part.value(),
    })
}

/// Region code of a hexagon: the half-plane reading order of its base
/// pentagon (the hexagon with the last vertex forgotten) about the axis
/// through v1 and v5.
pub fn region_code_hex(h: &Polygon, tol: Tolerance) -> Result<RegionCode> {
    require_hexagon(h)?;
    region_word(&h.forget_last()?, tol)
}
