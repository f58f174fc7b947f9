//! Reference polygons shared across the test suite. The same coordinates
//! ship as JSON files under `fixtures/` at the workspace root; a test in
//! `tests/acceptance.rs` keeps the two in sync.

use crate::geom::Vec3;
use crate::polygon::Polygon;

pub const PENTAGON_Q: [[f64; 3]; 5] = [
    [0.0, 0.0, 0.0],
    [0.886375, 0.276357, 0.371441],
    [0.125043, -0.363873, 0.473812],
    [0.549367, 0.461959, 0.845227],
    [0.818041, 0.0, 0.0],
];

/// Sixth vertex completing the pentagon to an unknotted hexagon.
pub const V6_UNKNOT: [f64; 3] = [0.4090205, 0.0, -0.912525];

/// Sixth vertex completing the pentagon to a right-handed trefoil hexagon.
pub const V6_TREFOIL: [f64; 3] = [0.4090205, -0.343939, 0.845227];

fn to_vec3(c: [f64; 3]) -> Vec3 {
    Vec3::new(c[0], c[1], c[2])
}

pub fn pentagon_q() -> Polygon {
    Polygon::new(PENTAGON_Q.iter().copied().map(to_vec3).collect()).unwrap()
}

fn extended(v6: [f64; 3]) -> Polygon {
    let mut vertices: Vec<Vec3> = PENTAGON_Q.iter().copied().map(to_vec3).collect();
    vertices.push(to_vec3(v6));
    Polygon::new(vertices).unwrap()
}

pub fn hexagon_unknot() -> Polygon {
    extended(V6_UNKNOT)
}

pub fn hexagon_trefoil() -> Polygon {
    extended(V6_TREFOIL)
}
