//! Tolerance-guarded floating-point geometric predicates and segment /
//! triangle primitives.
//!
//! Every sign predicate normalizes its determinant by the product of the
//! constituent vector norms before comparing against the tolerance, so
//! polygons of any scale behave identically. Predicates never tie-break:
//! a determinant inside the tolerance band is reported as [`Sign::Zero`]
//! or as a degenerate-contact error.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A point or vector in 3-space.
///
/// Arithmetic is unchecked; finiteness is validated where values enter the
/// system (polygon construction and file parsing).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    #[inline]
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    #[inline]
    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in this direction, or `None` if the norm is below `floor`.
    pub fn normalized(self, floor: f64) -> Option<Vec3> {
        let n = self.norm();
        if n <= floor {
            None
        } else {
            Some(self / n)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Linear interpolation `self + t (other - self)`.
    #[inline]
    pub fn lerp(self, other: Vec3, t: f64) -> Vec3 {
        self + (other - self) * t
    }

    /// Reflection through the plane z = 0.
    #[inline]
    pub fn mirror_z(self) -> Vec3 {
        Vec3::new(self.x, self.y, -self.z)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// The sign of a tolerance-guarded determinant: -1, 0, or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Classify `value` against a scale-proportional threshold.
    ///
    /// Returns `Zero` when `|value| <= eps * scale`.
    #[inline]
    pub fn classify(value: f64, scale: f64, tol: Tolerance) -> Sign {
        if value.abs() <= tol.eps() * scale {
            Sign::Zero
        } else if value > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    #[inline]
    pub fn value(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    #[inline]
    pub fn from_value(v: i8) -> Sign {
        match v.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    #[inline]
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    #[inline]
    fn mul(self, o: Sign) -> Sign {
        Sign::from_value(self.value() * o.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Relative tolerance applied to normalized determinants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    /// The default relative tolerance, 1e-9.
    pub const DEFAULT: Tolerance = Tolerance { eps: 1e-9 };

    /// A new tolerance; `eps` must lie strictly between 0 and 1.
    pub fn new(eps: f64) -> Result<Tolerance> {
        if eps > 0.0 && eps < 1.0 {
            Ok(Tolerance { eps })
        } else {
            Err(Error::Parse(format!(
                "tolerance must be in (0, 1), got {eps}"
            )))
        }
    }

    #[inline]
    pub fn eps(self) -> f64 {
        self.eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

/// Sign of the triple product `(b - a) x (c - a) . (d - a)`.
///
/// Positive when `d` lies on the side of the oriented plane through
/// `a, b, c` pointed to by the right-hand normal; zero when the normalized
/// determinant falls inside the tolerance band.
pub fn orient(a: Vec3, b: Vec3, c: Vec3, d: Vec3, tol: Tolerance) -> Sign {
    let u = b - a;
    let v = c - a;
    let w = d - a;
    let det = u.cross(v).dot(w);
    let scale = u.norm() * v.norm() * w.norm();
    Sign::classify(det, scale, tol)
}

/// How two segments in 3-space relate to one another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    /// No contact.
    Disjoint,
    /// Transversal interior crossing: the four endpoints are coplanar and
    /// each segment's supporting line strictly separates the other's
    /// endpoints.
    Crossing,
    /// Some predicate fell inside the tolerance band (touching, collinear
    /// overlap, endpoint contact).
    Degenerate,
}

/// Classify the intersection of segments `p1 p2` and `q1 q2`.
///
/// Implements the three-condition system: coplanarity of the four points
/// plus two strict line-separation tests.
pub fn segments_intersect(
    p1: Vec3,
    p2: Vec3,
    q1: Vec3,
    q2: Vec3,
    tol: Tolerance,
) -> Result<SegmentRelation> {
    let scale_p = 1.0 + p1.norm() + p2.norm();
    let scale_q = 1.0 + q1.norm() + q2.norm();
    if (p2 - p1).norm() <= tol.eps() * scale_p || (q2 - q1).norm() <= tol.eps() * scale_q {
        return Err(Error::ZeroLengthSegment);
    }

    if orient(p1, p2, q1, q2, tol) != Sign::Zero {
        return Ok(SegmentRelation::Disjoint);
    }

    let sep_p = line_separation(p1, p2, q1, q2, tol);
    let sep_q = line_separation(q1, q2, p1, p2, tol);
    match (sep_p, sep_q) {
        (Sign::Negative, Sign::Negative) => Ok(SegmentRelation::Crossing),
        (Sign::Zero, _) | (_, Sign::Zero) => Ok(SegmentRelation::Degenerate),
        _ => Ok(SegmentRelation::Disjoint),
    }
}

/// Sign of `(b-a) x (c-a) . (b-a) x (d-a)`: negative iff the line through
/// `a, b` separates `c` from `d` within their common plane.
fn line_separation(a: Vec3, b: Vec3, c: Vec3, d: Vec3, tol: Tolerance) -> Sign {
    let u = b - a;
    let m = u.cross(c - a);
    let n = u.cross(d - a);
    // A point collinear with the line makes its cross product vanish along
    // with the normalization scale; classify that case as Zero explicitly.
    if m.norm() <= tol.eps() * u.norm() * (c - a).norm()
        || n.norm() <= tol.eps() * u.norm() * (d - a).norm()
    {
        return Sign::Zero;
    }
    Sign::classify(m.dot(n), m.norm() * n.norm(), tol)
}

/// Signed transversal crossing of the open segment `e0 e1` through the open
/// triangular disc `t0 t1 t2`.
///
/// Returns +1 when the segment pierces along the right-hand-rule normal of
/// `(t0, t1, t2)`, -1 against it, 0 when there is no interior crossing.
/// Contacts with the triangle boundary or its plane inside tolerance are
/// reported as [`Error::DegenerateContact`].
pub fn segment_triangle_crossing(
    e0: Vec3,
    e1: Vec3,
    t0: Vec3,
    t1: Vec3,
    t2: Vec3,
    tol: Tolerance,
) -> Result<Sign> {
    let n = (t1 - t0).cross(t2 - t0);
    if n.norm() <= tol.eps() * (t1 - t0).norm() * (t2 - t0).norm() {
        return Err(Error::DegenerateTriangle);
    }

    let s0 = orient(t0, t1, t2, e0, tol);
    let s1 = orient(t0, t1, t2, e1, tol);

    if s0 == Sign::Zero && s1 == Sign::Zero {
        // Segment lies in the triangle's plane within tolerance.
        let d = segment_triangle_distance(e0, e1, t0, t1, t2);
        let scale = contact_scale(e0, e1, t0, t1, t2);
        if d <= tol.eps().sqrt() * scale {
            return Err(Error::DegenerateContact);
        }
        return Ok(Sign::Zero);
    }
    if s0 == Sign::Zero || s1 == Sign::Zero {
        // One endpoint on the plane: the only possible contact is at (or
        // near) that endpoint.
        let p = if s0 == Sign::Zero { e0 } else { e1 };
        let d = (p - closest_point_on_triangle(p, t0, t1, t2)).norm();
        let scale = contact_scale(e0, e1, t0, t1, t2);
        if d <= tol.eps().sqrt() * scale {
            return Err(Error::DegenerateContact);
        }
        return Ok(Sign::Zero);
    }
    if s0 == s1 {
        return Ok(Sign::Zero);
    }

    // Endpoints on strict opposite sides: decide whether the supporting line
    // passes through the triangle interior.
    let f01 = orient(e0, t0, t1, e1, tol);
    let f12 = orient(e0, t1, t2, e1, tol);
    let f20 = orient(e0, t2, t0, e1, tol);
    if f01 == Sign::Zero || f12 == Sign::Zero || f20 == Sign::Zero {
        return Err(Error::DegenerateContact);
    }
    if f01 == f12 && f12 == f20 {
        Ok(s1)
    } else {
        Ok(Sign::Zero)
    }
}

fn contact_scale(e0: Vec3, e1: Vec3, t0: Vec3, t1: Vec3, t2: Vec3) -> f64 {
    let c = (t0 + t1 + t2) / 3.0;
    1.0 + (e0 - c).norm().max((e1 - c).norm()) + (t0 - c).norm() + (t1 - c).norm() + (t2 - c).norm()
}

/// Rodrigues rotation of `v` about the unit `axis` by `angle`.
pub fn rotate_about(v: Vec3, axis: Vec3, angle: f64) -> Vec3 {
    let (sin, cos) = angle.sin_cos();
    v * cos + axis.cross(v) * sin + axis * (axis.dot(v) * (1.0 - cos))
}

/// Euclidean distance between two segments.
///
/// Closest-point computation with clamped parameters; handles parallel and
/// degenerate segments.
pub fn segment_segment_distance(p1: Vec3, p2: Vec3, q1: Vec3, q2: Vec3) -> f64 {
    let d1 = p2 - p1;
    let d2 = q2 - q1;
    let r = p1 - q1;
    let a = d1.norm_squared();
    let e = d2.norm_squared();
    let f = d2.dot(r);

    let (s, t);
    if a <= f64::MIN_POSITIVE && e <= f64::MIN_POSITIVE {
        return r.norm();
    }
    if a <= f64::MIN_POSITIVE {
        s = 0.0;
        t = (f / e).clamp(0.0, 1.0);
    } else {
        let c = d1.dot(r);
        if e <= f64::MIN_POSITIVE {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            let mut s_ = if denom > 0.0 {
                ((b * f - c * e) / denom).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let mut t_ = (b * s_ + f) / e;
            if t_ < 0.0 {
                t_ = 0.0;
                s_ = (-c / a).clamp(0.0, 1.0);
            } else if t_ > 1.0 {
                t_ = 1.0;
                s_ = ((b - c) / a).clamp(0.0, 1.0);
            }
            s = s_;
            t = t_;
        }
    }
    ((p1 + d1 * s) - (q1 + d2 * t)).norm()
}

/// Closest point to `p` on the closed triangle `a b c` (Ericson's method).
pub fn closest_point_on_triangle(p: Vec3, a: Vec3, b: Vec3, c: Vec3) -> Vec3 {
    let ab = b - a;
    let ac = c - a;
    let ap = p - a;
    let d1 = ab.dot(ap);
    let d2 = ac.dot(ap);
    if d1 <= 0.0 && d2 <= 0.0 {
        return a;
    }

    let bp = p - b;
    let d3 = ab.dot(bp);
    let d4 = ac.dot(bp);
    if d3 >= 0.0 && d4 <= d3 {
        return b;
    }

    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        let t = d1 / (d1 - d3);
        return a + ab * t;
    }

    let cp = p - c;
    let d5 = ab.dot(cp);
    let d6 = ac.dot(cp);
    if d6 >= 0.0 && d5 <= d6 {
        return c;
    }

    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        let t = d2 / (d2 - d6);
        return a + ac * t;
    }

    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
        let t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + (c - b) * t;
    }

    let denom = 1.0 / (va + vb + vc);
    a + ab * (vb * denom) + ac * (vc * denom)
}

fn segment_triangle_distance(e0: Vec3, e1: Vec3, t0: Vec3, t1: Vec3, t2: Vec3) -> f64 {
    let mut d = (e0 - closest_point_on_triangle(e0, t0, t1, t2)).norm();
    d = d.min((e1 - closest_point_on_triangle(e1, t0, t1, t2)).norm());
    for (a, b) in [(t0, t1), (t1, t2), (t2, t0)] {
        d = d.min(segment_segment_distance(e0, e1, a, b));
    }
    d
}
