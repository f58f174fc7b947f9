//! Angular order of half-planes about a chord axis: the machinery behind
//! region codes.
//!
//! For a base polygon `<v1, ..., vm>` the axis L runs through v1 and vm (so
//! the closing edge lies on L). Each interior vertex v_i spans a half-plane
//! bounded by L; rotating right-handedly about L (counterclockwise viewed
//! from the +L direction, L oriented v1 -> vm) starting inside the empty
//! angular sector — the open sector swept by no edge — reads off the region
//! word.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::geom::{Tolerance, Vec3};
use crate::polygon::Polygon;

/// A region label: the half-plane indices in reading order, e.g. `2-4-3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionCode(Vec<u8>);

impl RegionCode {
    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub(crate) fn new(indices: Vec<u8>) -> RegionCode {
        RegionCode(indices)
    }

    /// Parse a word like "2-4-3".
    pub fn parse(text: &str) -> Result<RegionCode> {
        let indices: Vec<u8> = text
            .split('-')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<_>>()?;
        if indices.is_empty() {
            return Err(Error::Parse("empty region code".into()));
        }
        Ok(RegionCode(indices))
    }
}

impl fmt::Display for RegionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, idx) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{idx}")?;
        }
        Ok(())
    }
}

/// Orthonormal frame about the axis through two points, oriented a -> b.
/// Angles increase right-handedly about the axis direction.
struct AxisFrame {
    origin: Vec3,
    dir: Vec3,
    e1: Vec3,
    e2: Vec3,
}

impl AxisFrame {
    fn new(a: Vec3, b: Vec3, tol: Tolerance) -> Result<AxisFrame> {
        let dir = (b - a)
            .normalized(tol.eps() * (1.0 + a.norm() + b.norm()))
            .ok_or(Error::DegenerateAxis)?;
        // Any unit vector orthogonal to dir; pick against the smallest
        // component for conditioning.
        let helper = if dir.x.abs() <= dir.y.abs() && dir.x.abs() <= dir.z.abs() {
            Vec3::new(1.0, 0.0, 0.0)
        } else if dir.y.abs() <= dir.z.abs() {
            Vec3::new(0.0, 1.0, 0.0)
        } else {
            Vec3::new(0.0, 0.0, 1.0)
        };
        let e1 = dir
            .cross(helper)
            .normalized(0.0)
            .ok_or(Error::DegenerateAxis)?;
        // e1 x e2 = dir makes the angle increase right-handed about dir.
        let e2 = dir.cross(e1);
        Ok(AxisFrame {
            origin: a,
            dir,
            e1,
            e2,
        })
    }

    /// Projection of a point into the plane quotient: (angle, radius).
    fn polar(&self, p: Vec3) -> (f64, f64) {
        let w = p - self.origin;
        let x = w.dot(self.e1);
        let y = w.dot(self.e2);
        (y.atan2(x), (x * x + y * y).sqrt())
    }

    fn axial_extent(&self, p: Vec3) -> f64 {
        (p - self.origin).dot(self.dir).abs()
    }
}

fn wrap(a: f64) -> f64 {
    // Wrap to (-pi, pi].
    let mut a = a % (2.0 * PI);
    if a <= -PI {
        a += 2.0 * PI;
    } else if a > PI {
        a -= 2.0 * PI;
    }
    a
}

const WINDING: &str = "polygon winds around the axis";

/// Whether an error reports a polygon winding all the way around its axis.
///
/// Winding is an open condition: unlike the other non-generic cases it
/// cannot be removed by a small perturbation, and the region code is
/// genuinely undefined. Hexagon bases never wind (two minor arcs cannot
/// cover the circle); heptagon bases can.
pub fn is_axis_winding(e: &Error) -> bool {
    matches!(e, Error::NonGeneric(m) if *m == WINDING)
}

/// Read the half-plane order of a base polygon about the axis through its
/// first and last vertices.
///
/// Genericity requirements, rejected with [`Error::NonGeneric`]:
/// the interior vertices stay off the axis, their half-planes are pairwise
/// distinct, no interior edge crosses the axis, and the polygon does not
/// wind all the way around the axis (there must be an empty sector).
pub fn region_word(base: &Polygon, tol: Tolerance) -> Result<RegionCode> {
    let m = base.len();
    if m < 4 {
        return Err(Error::PolygonTooSmall { n: m, min: 4 });
    }
    let v = base.vertices();
    let frame = AxisFrame::new(v[0], v[m - 1], tol)?;

    // Interior vertices v2 .. v_{m-1} (indices 1 .. m-2).
    let mut angles = Vec::with_capacity(m - 2);
    for &p in &v[1..m - 1] {
        let (theta, radius) = frame.polar(p);
        let scale = 1.0 + frame.axial_extent(p);
        if radius <= tol.eps() * scale {
            return Err(Error::NonGeneric("interior vertex lies on the axis"));
        }
        angles.push(theta);
    }

    // Pairwise distinct half-planes.
    for i in 0..angles.len() {
        for j in (i + 1)..angles.len() {
            if wrap(angles[i] - angles[j]).abs() <= tol.eps() {
                return Err(Error::NonGeneric("coincident half-planes"));
            }
        }
    }

    // No interior edge may cross or graze the axis: an edge between
    // consecutive interior vertices subtends the minor arc between their
    // angles, which is undefined at separation pi.
    for i in 0..angles.len() - 1 {
        let delta = wrap(angles[i + 1] - angles[i]);
        if (PI - delta.abs()).abs() <= tol.eps() {
            return Err(Error::NonGeneric("edge crosses the axis"));
        }
        // Transversal crossing: projected segment passes through the origin.
        let p = frame.polar(v[i + 1]);
        let q = frame.polar(v[i + 2]);
        let (px, py) = (p.1 * p.0.cos(), p.1 * p.0.sin());
        let (qx, qy) = (q.1 * q.0.cos(), q.1 * q.0.sin());
        let cross = px * qy - py * qx;
        let dot = px * qx + py * qy;
        if cross.abs() <= tol.eps() * p.1 * q.1 && dot < 0.0 {
            return Err(Error::NonGeneric("edge crosses the axis"));
        }
    }

    // Union of the swept minor arcs along the interior chain, in unrolled
    // coordinates. The chain is connected, so the union is the interval
    // between the running extremes.
    let mut unrolled = vec![angles[0]];
    for i in 1..angles.len() {
        let prev = *unrolled.last().unwrap();
        unrolled.push(prev + wrap(angles[i] - angles[i - 1]));
    }
    let lo = unrolled.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = unrolled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo >= 2.0 * PI - tol.eps() {
        return Err(Error::NonGeneric(WINDING));
    }

    // Empty sector: (hi, lo + 2 pi); read the half-planes right-handedly
    // from its midpoint.
    let gap_mid = (hi + lo + 2.0 * PI) / 2.0;
    let mut order: Vec<usize> = (0..angles.len()).collect();
    let from_gap = |theta: f64| {
        let mut d = (theta - gap_mid) % (2.0 * PI);
        if d < 0.0 {
            d += 2.0 * PI;
        }
        d
    };
    order.sort_by(|&a, &b| from_gap(angles[a]).total_cmp(&from_gap(angles[b])));
    Ok(RegionCode::new(
        order.iter().map(|&i| (i + 2) as u8).collect(),
    ))
}
