//! Projections of embedded polygons to knot diagrams.
//!
//! Two constructions:
//! - [`radial_diagram`]: relabel so the first vertex is a strict convex-hull
//!   vertex, radially project the rest onto a sphere around it, extend the
//!   two extreme arcs down to the equator cut by the supporting plane, and
//!   close with a crossing-free equatorial arc. An n-gon yields n-1
//!   spherical arcs and at most (n-3)(n-4)/2 crossings.
//! - [`orthogonal_diagram`]: the classical edge-on projection along the
//!   first edge, an (n-1)-sided planar diagram with at most (n-1)(n-4)/2
//!   crossings.
//!
//! Over/under is resolved by distance from the eye: the nearer strand
//! occludes. For the radial projection the eye sits at the hull vertex, so
//! the two extended arc tails (which stand in for strands hugging a small
//! ball around the eye) lie under nothing: the tail of the last arc is
//! nearest, then the tail of the first, then every real strand.

use crate::diagram::{assemble, Diagram};
use crate::embedding::is_embedded;
use crate::error::{Error, Result};
use crate::geom::{closest_point_on_triangle, Sign, Tolerance, Vec3};
use crate::polygon::Polygon;
use crate::symmetry::rotate_labels;

/// Which vertex became first and the plane that certifies it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullRelabeling {
    /// Index (in the original labeling) of the vertex moved to position 1.
    pub pivot_index: usize,
    /// Outward unit normal: every other vertex lies strictly on the
    /// negative side of the plane through the pivot.
    pub supporting_plane_normal: Vec3,
}

/// Maximum crossing count of a radial diagram of an n-gon: (n-3)(n-4)/2.
pub fn crossing_bound(n: usize) -> usize {
    if n < 4 {
        return 0;
    }
    (n - 3) * (n - 4) / 2
}

/// Maximum crossing count of an edge-on projection of an n-gon:
/// (n-1)(n-4)/2.
pub fn orthogonal_crossing_bound(n: usize) -> usize {
    if n < 4 {
        return 0;
    }
    (n - 1) * (n - 4) / 2
}

/// Rotate the labels so the first vertex is a convex-hull vertex with a
/// strict supporting plane, preferring the lowest qualifying index.
pub fn hull_relabel(polygon: &Polygon, tol: Tolerance) -> Result<(Polygon, HullRelabeling)> {
    let n = polygon.len();
    let scale = polygon
        .vertices()
        .iter()
        .map(|v| v.norm())
        .fold(0.0f64, f64::max)
        + 1.0;

    for k in 0..n {
        if let Some(normal) = strict_support_normal(polygon, k, scale, tol) {
            let rotated = rotate_labels(polygon, k)?;
            return Ok((
                rotated,
                HullRelabeling {
                    pivot_index: k,
                    supporting_plane_normal: normal,
                },
            ));
        }
    }
    Err(Error::NonGeneric(
        "no vertex admits a strict supporting plane",
    ))
}

/// Max-margin separating direction for vertex `k` against the hull of the
/// others, if one exists beyond tolerance.
///
/// The closest point of a convex hull to an exterior point lies on a face
/// spanned by at most three of its vertices, so scanning all simplices of
/// size one to three finds the optimal direction exactly.
fn strict_support_normal(polygon: &Polygon, k: usize, scale: f64, tol: Tolerance) -> Option<Vec3> {
    let p = polygon.vertex(k);
    let others: Vec<Vec3> = (0..polygon.len())
        .filter(|&i| i != k)
        .map(|i| polygon.vertex(i))
        .collect();
    let m = others.len();

    let mut best: Option<(f64, Vec3)> = None;
    let mut consider = |candidate: Vec3| {
        let d = p - candidate;
        let Some(u) = d.normalized(tol.eps() * scale) else {
            return;
        };
        let sup = others
            .iter()
            .map(|&q| q.dot(u))
            .fold(f64::NEG_INFINITY, f64::max);
        let margin = p.dot(u) - sup;
        if best.is_none_or(|(bm, _)| margin > bm) {
            best = Some((margin, u));
        }
    };

    for i in 0..m {
        consider(closest_on_segment(p, others[i], others[i]));
        for j in (i + 1)..m {
            consider(closest_on_segment(p, others[i], others[j]));
            for l in (j + 1)..m {
                consider(closest_point_on_triangle(
                    p, others[i], others[j], others[l],
                ));
            }
        }
    }

    match best {
        Some((margin, u)) if margin > tol.eps() * scale => Some(u),
        _ => None,
    }
}

fn closest_on_segment(p: Vec3, a: Vec3, b: Vec3) -> Vec3 {
    let ab = b - a;
    let denom = ab.norm_squared();
    if denom <= f64::MIN_POSITIVE {
        return a;
    }
    let t = ((p - a).dot(ab) / denom).clamp(0.0, 1.0);
    a + ab * t
}

// ---------------------------------------------------------------------------
// Radial (spherical) diagrams
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
enum ArcKind {
    /// Extended tail from the equator, then the projected second edge.
    First,
    Core,
    /// Projected second-to-last edge, then the extended tail to the equator.
    Last,
    Equator,
}

/// A directed great-circle arc: points are `rotate(start, normal, s)` for
/// `s` in `[0, theta]`.
struct SphericalArc {
    start: Vec3,
    normal: Vec3,
    theta: f64,
    kind: ArcKind,
    /// Parameter of the junction between tail and projected edge
    /// (`First`/`Last` only).
    junction: f64,
    /// Endpoints of the projecting 3-space edge, relative to the eye.
    chord: Option<(Vec3, Vec3)>,
}

impl SphericalArc {
    /// Angle of `x` from the arc start, in [0, 2 pi). `x` must lie on the
    /// arc's great circle.
    fn param_of(&self, x: Vec3) -> f64 {
        let s = self
            .normal
            .dot(self.start.cross(x))
            .atan2(self.start.dot(x));
        if s < 0.0 {
            s + 2.0 * std::f64::consts::PI
        } else {
            s
        }
    }

    fn tangent_at(&self, x: Vec3) -> Vec3 {
        self.normal.cross(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Depth {
    /// Tail of the last arc: nearest to the eye.
    TailLast,
    /// Tail of the first arc: next nearest.
    TailFirst,
    /// A real strand point at this distance from the eye.
    Real(f64),
}

impl Depth {
    fn rank(self) -> u8 {
        match self {
            Depth::TailLast => 0,
            Depth::TailFirst => 1,
            Depth::Real(_) => 2,
        }
    }

    /// Whether `self` is strictly nearer the eye than `other`; `None` when
    /// the comparison is inside tolerance.
    fn nearer_than(self, other: Depth, tol: Tolerance) -> Option<bool> {
        if self.rank() != other.rank() {
            return Some(self.rank() < other.rank());
        }
        match (self, other) {
            (Depth::Real(a), Depth::Real(b)) => {
                if (a - b).abs() <= tol.eps() * (a.abs() + b.abs()) {
                    None
                } else {
                    Some(a < b)
                }
            }
            _ => None,
        }
    }
}

enum Classify {
    Inside,
    Boundary,
    Outside,
}

fn classify_param(s: f64, theta: f64, eps: f64) -> Classify {
    let two_pi = 2.0 * std::f64::consts::PI;
    if s <= eps || s >= two_pi - eps || (s - theta).abs() <= eps {
        Classify::Boundary
    } else if s < theta {
        Classify::Inside
    } else {
        Classify::Outside
    }
}

fn angle_between(a: Vec3, b: Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Radial projection diagram from a strict hull vertex.
///
/// The polygon must be embedded; hull relabeling happens internally.
/// Non-generic coincidences (tangencies, crossings at arc junctions,
/// depth ties) are reported as [`Error::NonGeneric`]; callers perturb and
/// retry.
pub fn radial_diagram(polygon: &Polygon, tol: Tolerance) -> Result<Diagram> {
    if !is_embedded(polygon, tol).is_embedded() {
        return Err(Error::NotEmbedded);
    }
    let (p, relabel) = hull_relabel(polygon, tol)?;
    let n = p.len();
    let eye = p.vertex(0);
    let inward = -relabel.supporting_plane_normal;

    // Unit directions of v2 .. vn from the eye.
    let mut u = Vec::with_capacity(n);
    u.push(Vec3::ZERO); // placeholder for the eye itself
    for i in 1..n {
        let d = (p.vertex(i) - eye)
            .normalized(tol.eps() * (1.0 + eye.norm() + p.vertex(i).norm()))
            .ok_or(Error::NonGeneric("vertex coincides with the eye"))?;
        if d.dot(inward) <= tol.eps() {
            return Err(Error::NonGeneric("vertex sits on the supporting plane"));
        }
        u.push(d);
    }

    let circle_normal = |a: Vec3, b: Vec3| -> Result<Vec3> {
        a.cross(b)
            .normalized(tol.eps())
            .ok_or(Error::NonGeneric("eye collinear with an edge"))
    };

    // Equator endpoints of the two extended tails.
    let q2 = equator_point(u[1], u[2], inward, tol)?;
    let q3 = equator_point(u[n - 1], u[n - 2], inward, tol)?;

    let mut arcs: Vec<SphericalArc> = Vec::with_capacity(n - 1);

    // First arc: q2 -> u2 -> u3, in the plane of the second edge.
    {
        let normal = circle_normal(u[1], u[2])?;
        if q2.cross(u[1]).dot(normal) <= tol.eps() {
            return Err(Error::NonGeneric("tail of first arc reverses direction"));
        }
        let junction = angle_between(q2, u[1]);
        let theta = junction + angle_between(u[1], u[2]);
        arcs.push(SphericalArc {
            start: q2,
            normal,
            theta,
            kind: ArcKind::First,
            junction,
            chord: Some((p.vertex(1) - eye, p.vertex(2) - eye)),
        });
    }
    // Core arcs: u3 -> u4, ..., u_{n-2} -> u_{n-1}.
    for i in 2..n - 2 {
        let normal = circle_normal(u[i], u[i + 1])?;
        arcs.push(SphericalArc {
            start: u[i],
            normal,
            theta: angle_between(u[i], u[i + 1]),
            kind: ArcKind::Core,
            junction: 0.0,
            chord: Some((p.vertex(i) - eye, p.vertex(i + 1) - eye)),
        });
    }
    // Last arc: u_{n-1} -> un -> q3.
    {
        let normal = circle_normal(u[n - 2], u[n - 1])?;
        if u[n - 1].cross(q3).dot(normal) <= tol.eps() {
            return Err(Error::NonGeneric("tail of last arc reverses direction"));
        }
        let junction = angle_between(u[n - 2], u[n - 1]);
        let theta = junction + angle_between(u[n - 1], q3);
        arcs.push(SphericalArc {
            start: u[n - 2],
            normal,
            theta,
            kind: ArcKind::Last,
            junction,
            chord: Some((p.vertex(n - 2) - eye, p.vertex(n - 1) - eye)),
        });
    }
    // Equatorial closing arc: q3 -> q2, the minor side.
    {
        let cross = q3.cross(q2);
        let normal = if cross.dot(inward) >= 0.0 {
            inward
        } else {
            -inward
        };
        arcs.push(SphericalArc {
            start: q3,
            normal,
            theta: angle_between(q3, q2),
            kind: ArcKind::Equator,
            junction: 0.0,
            chord: None,
        });
    }

    // Pairwise crossings of non-adjacent arcs.
    let m = arcs.len();
    let eps = tol.eps();
    let mut events: Vec<(usize, f64, usize, bool)> = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    for i in 0..m {
        for j in (i + 2)..m {
            if i == 0 && j == m - 1 {
                continue; // cyclically adjacent
            }
            let w = arcs[i].normal.cross(arcs[j].normal);
            let Some(w) = w.normalized(eps) else {
                return Err(Error::NonGeneric("coincident projection circles"));
            };
            let mut hits = 0;
            for x in [w, -w] {
                let si = arcs[i].param_of(x);
                let sj = arcs[j].param_of(x);
                match (
                    classify_param(si, arcs[i].theta, eps),
                    classify_param(sj, arcs[j].theta, eps),
                ) {
                    (Classify::Inside, Classify::Inside) => {
                        hits += 1;
                        if hits > 1 {
                            return Err(Error::NonGeneric("arc pair crosses twice"));
                        }
                        if arcs[i].kind == ArcKind::Equator || arcs[j].kind == ArcKind::Equator {
                            return Err(Error::NonGeneric("crossing on the equatorial arc"));
                        }
                        let di = radial_depth(&arcs[i], si, x, tol)?;
                        let dj = radial_depth(&arcs[j], sj, x, tol)?;
                        let i_over = di
                            .nearer_than(dj, tol)
                            .ok_or(Error::NonGeneric("depth tie at crossing"))?;
                        let ti = arcs[i].tangent_at(x);
                        let tj = arcs[j].tangent_at(x);
                        let (to, tu) = if i_over { (ti, tj) } else { (tj, ti) };
                        // Toward-viewer normal at x is -x: the eye sits at
                        // the sphere center.
                        let s = Sign::classify(to.cross(tu).dot(-x), 1.0, tol);
                        if s == Sign::Zero {
                            return Err(Error::NonGeneric("tangential crossing"));
                        }
                        let id = signs.len();
                        signs.push(s.value());
                        events.push((i, si, id, i_over));
                        events.push((j, sj, id, !i_over));
                    }
                    (Classify::Inside, Classify::Boundary)
                    | (Classify::Boundary, Classify::Inside)
                    | (Classify::Boundary, Classify::Boundary) => {
                        return Err(Error::NonGeneric("crossing at an arc endpoint"));
                    }
                    _ => {}
                }
            }
        }
    }
    debug_assert!(signs.len() <= crossing_bound(n));

    // Order ambiguity along an arc.
    check_event_separation(&events, eps)?;
    assemble(events, signs)
}

/// Point where the great circle through `ua, ub` meets the equator plane, on
/// `ua`'s side of the line through the eye and `ub`.
fn equator_point(ua: Vec3, ub: Vec3, inward: Vec3, tol: Tolerance) -> Result<Vec3> {
    let plane_normal = ua
        .cross(ub)
        .normalized(tol.eps())
        .ok_or(Error::NonGeneric("eye collinear with an edge"))?;
    let line = plane_normal
        .cross(inward)
        .normalized(tol.eps())
        .ok_or(Error::NonGeneric("edge plane coincides with the equator"))?;
    let side = ua - ub * ua.dot(ub);
    let d = line.dot(side);
    if d.abs() <= tol.eps() * side.norm() {
        return Err(Error::NonGeneric("equator point side is ambiguous"));
    }
    Ok(if d > 0.0 { line } else { -line })
}

fn radial_depth(arc: &SphericalArc, s: f64, x: Vec3, tol: Tolerance) -> Result<Depth> {
    let eps = tol.eps();
    match arc.kind {
        ArcKind::Equator => Err(Error::NonGeneric("crossing on the equatorial arc")),
        ArcKind::First if s < arc.junction - eps => Ok(Depth::TailFirst),
        ArcKind::Last if s > arc.junction + eps => Ok(Depth::TailLast),
        ArcKind::First | ArcKind::Last if (s - arc.junction).abs() <= eps => {
            Err(Error::NonGeneric("crossing at an arc junction"))
        }
        _ => {
            let (a, b) = arc.chord.expect("non-equator arcs carry their chord");
            let e = b - a;
            // Solve r x - t e = a for the strand distance r from the eye.
            let exx = e.dot(x);
            let det = exx * exx - e.norm_squared();
            if det.abs() <= eps * e.norm_squared() {
                return Err(Error::NonGeneric("strand direction parallel to sight line"));
            }
            let (ax, ae) = (a.dot(x), a.dot(e));
            let r = (-ax * e.norm_squared() + ae * exx) / det;
            let t = (-ax * exx + ae) / det;
            debug_assert!(
                (-1e-6..=1.0 + 1e-6).contains(&t),
                "crossing parameter {t} outside chord"
            );
            debug_assert!(r > 0.0);
            Ok(Depth::Real(r))
        }
    }
}

fn check_event_separation(events: &[(usize, f64, usize, bool)], eps: f64) -> Result<()> {
    let mut sorted: Vec<(usize, f64)> = events.iter().map(|e| (e.0, e.1)).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for pair in sorted.windows(2) {
        if pair[0].0 == pair[1].0 && (pair[1].1 - pair[0].1).abs() <= eps {
            return Err(Error::NonGeneric("two crossings coincide along a strand"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Orthogonal (edge-on) diagrams
// ---------------------------------------------------------------------------

/// Edge-on projection along the first edge onto a perpendicular plane.
///
/// The first two vertices project together, giving an (n-1)-sided planar
/// diagram. The viewer looks along the first edge; nearer strands occlude.
pub fn orthogonal_diagram(polygon: &Polygon, tol: Tolerance) -> Result<Diagram> {
    if !is_embedded(polygon, tol).is_embedded() {
        return Err(Error::NotEmbedded);
    }
    let n = polygon.len();
    let v: Vec<Vec3> = polygon.vertices().to_vec();
    let dir = (v[1] - v[0])
        .normalized(tol.eps() * (1.0 + v[0].norm() + v[1].norm()))
        .ok_or(Error::ZeroLengthSegment)?;

    // In-plane frame oriented so that its 2D counterclockwise sense is what
    // a viewer at -infinity along `dir` sees: e1 x e2 = -dir.
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
    let e2 = e1.cross(dir);

    let project = |p: Vec3| (p.dot(e1), p.dot(e2));
    // Image vertices of v2 .. vn; v1 shares the image of v2.
    let w: Vec<(f64, f64)> = (1..n).map(|i| project(v[i])).collect();
    let m = n - 1;
    // Image edge j runs w[j] -> w[(j+1) % m]; its source chord in 3-space.
    let chord = |j: usize| -> (Vec3, Vec3) {
        if j + 1 < m {
            (v[j + 1], v[j + 2])
        } else {
            (v[n - 1], v[0])
        }
    };

    let scale = w.iter().map(|&(x, y)| x.hypot(y)).fold(0.0f64, f64::max) + 1.0;
    let eps = tol.eps();

    for j in 0..m {
        let (a, b) = (w[j], w[(j + 1) % m]);
        if (b.0 - a.0).hypot(b.1 - a.1) <= eps * scale {
            return Err(Error::NonGeneric("image edge collapses to a point"));
        }
    }

    let mut events: Vec<(usize, f64, usize, bool)> = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    for i in 0..m {
        for j in (i + 2)..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (a, b) = (w[i], w[(i + 1) % m]);
            let (c, d) = (w[j], w[(j + 1) % m]);
            match segment_intersection_2d(a, b, c, d, eps * scale) {
                Intersection2d::None => {}
                Intersection2d::Degenerate => {
                    return Err(Error::NonGeneric("image edges touch within tolerance"));
                }
                Intersection2d::Crossing { s, t } => {
                    if s <= eps || s >= 1.0 - eps || t <= eps || t >= 1.0 - eps {
                        return Err(Error::NonGeneric("crossing at an image vertex"));
                    }
                    let (a3, b3) = chord(i);
                    let (c3, d3) = chord(j);
                    let depth_i = a3.lerp(b3, s).dot(dir);
                    let depth_j = c3.lerp(d3, t).dot(dir);
                    let diff = depth_i - depth_j;
                    if diff.abs() <= eps * (depth_i.abs() + depth_j.abs() + 1.0) {
                        return Err(Error::NonGeneric("depth tie at crossing"));
                    }
                    let i_over = diff < 0.0; // viewer at -infinity along dir
                    let ti = norm2((b.0 - a.0, b.1 - a.1));
                    let tj = norm2((d.0 - c.0, d.1 - c.1));
                    let (to, tu) = if i_over { (ti, tj) } else { (tj, ti) };
                    let cross = to.0 * tu.1 - to.1 * tu.0;
                    let sgn = Sign::classify(cross, 1.0, tol);
                    if sgn == Sign::Zero {
                        return Err(Error::NonGeneric("tangential crossing"));
                    }
                    let id = signs.len();
                    signs.push(sgn.value());
                    events.push((i, s, id, i_over));
                    events.push((j, t, id, !i_over));
                }
            }
        }
    }
    debug_assert!(signs.len() <= orthogonal_crossing_bound(n));

    check_event_separation(&events, eps)?;
    assemble(events, signs)
}

enum Intersection2d {
    None,
    Degenerate,
    Crossing { s: f64, t: f64 },
}

fn norm2(v: (f64, f64)) -> (f64, f64) {
    let n = v.0.hypot(v.1);
    (v.0 / n, v.1 / n)
}

/// Strict transversal intersection of 2D segments `ab` and `cd`.
fn segment_intersection_2d(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
    floor: f64,
) -> Intersection2d {
    let area = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| -> f64 {
        (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
    };
    let o1 = area(a, b, c);
    let o2 = area(a, b, d);
    let o3 = area(c, d, a);
    let o4 = area(c, d, b);
    let floor2 = floor * floor;
    if o1.abs() <= floor2 || o2.abs() <= floor2 || o3.abs() <= floor2 || o4.abs() <= floor2 {
        // Near-collinear contact is degenerate only if the segments come
        // close; otherwise it is a clean miss.
        if o1 * o2 <= 0.0 || o3 * o4 <= 0.0 {
            let dmin = segment_distance_2d(a, b, c, d);
            if dmin <= floor {
                return Intersection2d::Degenerate;
            }
        }
        return Intersection2d::None;
    }
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        // Crossing parameters from the signed areas.
        let s = o3 / (o3 - o4);
        let t = o1 / (o1 - o2);
        Intersection2d::Crossing { s, t }
    } else {
        Intersection2d::None
    }
}

fn segment_distance_2d(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> f64 {
    let to3 = |p: (f64, f64)| Vec3::new(p.0, p.1, 0.0);
    crate::geom::segment_segment_distance(to3(a), to3(b), to3(c), to3(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::perturb_generic;
    use crate::polygon::regular_ngon;
    use crate::symmetry::mirror;
    use crate::test_fixtures::{hexagon_trefoil, hexagon_unknot};

    const TOL: Tolerance = Tolerance::DEFAULT;

    #[test]
    fn bounds_table() {
        assert_eq!(crossing_bound(6), 3);
        assert_eq!(crossing_bound(7), 6);
        assert_eq!(crossing_bound(8), 10);
        assert_eq!(crossing_bound(9), 15);
        assert_eq!(orthogonal_crossing_bound(6), 5);
        assert_eq!(orthogonal_crossing_bound(7), 9);
        assert_eq!(orthogonal_crossing_bound(8), 14);
    }

    #[test]
    fn hull_relabel_regular_hexagon_picks_first() {
        let h = regular_ngon(6, 1.0).unwrap();
        let (rotated, relabel) = hull_relabel(&h, TOL).unwrap();
        assert_eq!(relabel.pivot_index, 0);
        assert_eq!(rotated, h);
        // Every other vertex strictly on the negative side.
        let p = h.vertex(0);
        for i in 1..6 {
            assert!((h.vertex(i) - p).dot(relabel.supporting_plane_normal) < 0.0);
        }
    }

    #[test]
    fn hull_relabel_rejects_interior_first_and_finds_extreme() {
        // A planar polygon whose first vertex is inside the hull of the rest.
        let p = Polygon::new(vec![
            Vec3::new(0.1, 0.1, 0.0),
            Vec3::new(2.0, 0.0, 0.1),
            Vec3::new(2.0, 2.0, -0.1),
            Vec3::new(-2.0, 2.0, 0.05),
            Vec3::new(-2.0, -2.0, -0.05),
            Vec3::new(2.0, -2.0, 0.0),
        ])
        .unwrap();
        let (_, relabel) = hull_relabel(&p, TOL).unwrap();
        assert_ne!(relabel.pivot_index, 0);
    }

    #[test]
    fn hull_relabel_trefoil_pivot_has_strict_support() {
        // Sign-check oracle: every other vertex lies strictly on the
        // negative side of the returned plane.
        let h = hexagon_trefoil();
        let (rotated, relabel) = hull_relabel(&h, TOL).unwrap();
        let pivot = rotated.vertex(0);
        assert_eq!(pivot, h.vertex(relabel.pivot_index));
        for i in 1..6 {
            let side = (rotated.vertex(i) - pivot).dot(relabel.supporting_plane_normal);
            assert!(
                side < 0.0,
                "vertex {i} not strictly below the supporting plane"
            );
        }
    }

    #[test]
    fn hull_relabel_invariant_under_rigid_motion() {
        let h = hexagon_trefoil();
        let (_, base) = hull_relabel(&h, TOL).unwrap();
        let (s, c) = (0.8f64.sin(), 0.8f64.cos());
        let moved = h.map_vertices(|v| {
            Vec3::new(c * v.x + s * v.z + 3.0, v.y - 7.0, -s * v.x + c * v.z + 0.5)
        });
        let (_, m) = hull_relabel(&moved, TOL).unwrap();
        assert_eq!(m.pivot_index, base.pivot_index);
    }

    #[test]
    fn trefoil_radial_three_crossings_same_sign() {
        let d = radial_diagram(&hexagon_trefoil(), TOL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        let dm = radial_diagram(&mirror(&hexagon_trefoil()), TOL).unwrap();
        assert_eq!(dm.crossing_count(), 3);
        assert_eq!(dm.writhe(), -3);
    }

    #[test]
    fn unknot_fixture_radial_within_bound() {
        let d = radial_diagram(&hexagon_unknot(), TOL).unwrap();
        assert!(d.crossing_count() <= crossing_bound(6));
    }

    #[test]
    fn perturbed_convex_hexagon_no_crossings() {
        let h = regular_ngon(6, 1.0).unwrap();
        let lifted = perturb_generic(&h, 1e-3, 17, TOL).unwrap();
        let d = radial_diagram(&lifted, TOL).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn exactly_planar_polygon_is_nongeneric_for_radial() {
        let h = regular_ngon(6, 1.0).unwrap();
        assert!(matches!(radial_diagram(&h, TOL), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn convex_image_orthogonal_no_crossings() {
        // A non-planar hexagon built so that its edge-on image is a convex
        // pentagon: depths vary freely, the image stays simple.
        let h = Polygon::new(vec![
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0), // sight line along x
            Vec3::new(0.8, 1.0, 0.0),
            Vec3::new(0.2, 1.5, 1.0),
            Vec3::new(-0.3, 0.8, 1.6),
            Vec3::new(0.1, -0.2, 0.9),
        ])
        .unwrap();
        assert!(is_embedded(&h, TOL).is_embedded());
        let d = orthogonal_diagram(&h, TOL).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn exactly_planar_polygon_is_nongeneric_for_orthogonal() {
        // The sight line of an edge-on projection of a planar polygon lies
        // in the polygon's plane, collapsing the image to a segment.
        let h = regular_ngon(6, 1.0).unwrap();
        assert!(matches!(
            orthogonal_diagram(&h, TOL),
            Err(Error::NonGeneric(_))
        ));
    }

    #[test]
    fn trefoil_orthogonal_within_bound() {
        let d = orthogonal_diagram(&hexagon_trefoil(), TOL).unwrap();
        assert!(d.crossing_count() <= orthogonal_crossing_bound(6));
        assert!(d.crossing_count() >= 3);
    }

    #[test]
    fn radial_rejects_singular_polygon() {
        let p = Polygon::new(vec![
            Vec3::new(0., 0., 0.),
            Vec3::new(2., 0., 0.),
            Vec3::new(2., 1., 0.),
            Vec3::new(1., -0.5, 0.),
            Vec3::new(0., 1., 0.),
            Vec3::new(-1., 0.5, 0.2),
        ])
        .unwrap();
        if !is_embedded(&p, TOL).is_embedded() {
            assert!(matches!(radial_diagram(&p, TOL), Err(Error::NotEmbedded)));
        }
    }
}
