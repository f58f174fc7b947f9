//! Heptagon isotopy invariants: plane-side signs, triangle intersection
//! numbers through the disc `v7 v1 v2`, the xi invariant of heptagonal
//! figure-eight knots, region codes over four half-planes, and the
//! permutahedron region graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::axis::{region_word, RegionCode};
use crate::error::{Error, Result};
use crate::geom::{orient, segment_triangle_crossing, Sign, Tolerance};
use crate::polygon::Polygon;

fn require_heptagon(h: &Polygon) -> Result<()> {
    if h.len() != 7 {
        return Err(Error::WrongVertexCount {
            n: h.len(),
            expected: 7,
        });
    }
    Ok(())
}

/// The two plane-side signs:
///
/// `theta3 = Sign((v7 - v1) x (v2 - v1) . (v3 - v1))`
/// `theta6 = Sign((v6 - v1) x (v7 - v1) . (v2 - v1))`
///
/// Equal signs mean v3 and v6 lie on the same side of the plane through
/// v7, v1, v2; zero encodes coplanarity within tolerance.
pub fn theta_signs(h: &Polygon, tol: Tolerance) -> Result<(Sign, Sign)> {
    require_heptagon(h)?;
    let theta3 = orient(h.vertex(0), h.vertex(6), h.vertex(1), h.vertex(2), tol);
    let theta6 = orient(h.vertex(0), h.vertex(5), h.vertex(6), h.vertex(1), tol);
    Ok((theta3, theta6))
}

/// Signed crossing numbers of edges v3v4, v4v5, v5v6 through the oriented
/// open disc `v7 v1 v2`.
pub fn triangle_intersections(h: &Polygon, tol: Tolerance) -> Result<(i8, i8, i8)> {
    require_heptagon(h)?;
    let (t0, t1, t2) = (h.vertex(6), h.vertex(0), h.vertex(1));
    let mut out = [0i8; 3];
    for (k, e) in [2usize, 3, 4].into_iter().enumerate() {
        let (a, b) = h.edge(e);
        let s = segment_triangle_crossing(a, b, t0, t1, t2, tol)
            .map_err(|_| Error::DegenerateConfiguration("triangle crossing within tolerance"))?;
        out[k] = s.value();
    }
    Ok((out[0], out[1], out[2]))
}

/// Everything the xi evaluation sees, plus the structural-consistency flag
/// for figure-eight heptagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XiReport {
    pub theta3: i8,
    pub theta6: i8,
    pub i34: i8,
    pub i45: i8,
    pub i56: i8,
    pub xi: i8,
    /// Whether the intersection-number pattern matches what holds on
    /// figure-eight heptagons: with equal thetas exactly one of the three
    /// numbers is nonzero; with opposite thetas exactly one of the outer
    /// two is. xi is an invariant only where this holds.
    pub figure_eight_consistent: bool,
}

/// Evaluate
/// `xi = 1/2 (theta3 + theta6)(i34 + i45 + i56) + 1/2 (theta3 - theta6)(i34 - i56)`.
///
/// Requires both theta signs nonzero; exactly one of the two half-sum
/// factors is then zero and the other is +-1.
pub fn xi(h: &Polygon, tol: Tolerance) -> Result<XiReport> {
    let (theta3, theta6) = theta_signs(h, tol)?;
    if theta3 == Sign::Zero || theta6 == Sign::Zero {
        return Err(Error::NonGeneric("theta sign is zero"));
    }
    let (i34, i45, i56) = triangle_intersections(h, tol)?;
    let (t3, t6) = (theta3.value() as i32, theta6.value() as i32);
    let (a, b, c) = (i34 as i32, i45 as i32, i56 as i32);
    let xi2 = (t3 + t6) * (a + b + c) + (t3 - t6) * (a - c);
    debug_assert_eq!(xi2 % 2, 0);
    let xi_val = xi2 / 2;

    let consistent = if theta3 == theta6 {
        let nonzero = [i34, i45, i56].iter().filter(|v| **v != 0).count();
        nonzero == 1
    } else {
        (i34 != 0) != (i56 != 0)
    };
    if theta3 == theta6 {
        // For any generic heptagon with equal thetas the three numbers sum
        // to -1, 0, or 1.
        debug_assert!((a + b + c).abs() <= 1);
    }
    Ok(XiReport {
        theta3: theta3.value(),
        theta6: theta6.value(),
        i34,
        i45,
        i56,
        xi: xi_val as i8,
        figure_eight_consistent: consistent,
    })
}

/// Region code of a heptagon: the half-plane reading order of its base
/// hexagon about the axis through v1 and v6, a permutation of (2,3,4,5).
pub fn region_code_hept(h: &Polygon, tol: Tolerance) -> Result<RegionCode> {
    require_heptagon(h)?;
    region_word(&h.forget_last()?, tol)
}

/// The region-adjacency graph of heptagonal codes: 24 orderings of
/// (2,3,4,5), joined when they differ by one adjacent transposition.
#[derive(Debug, Clone)]
pub struct PermutahedronGraph {
    nodes: Vec<[u8; 4]>,
    edges: Vec<(usize, usize)>,
}

impl PermutahedronGraph {
    pub fn nodes(&self) -> &[[u8; 4]] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == node || *b == node)
            .count()
    }

    pub fn node_label(&self, node: usize) -> String {
        let w = self.nodes[node];
        format!("{}-{}-{}-{}", w[0], w[1], w[2], w[3])
    }

    /// All simple cycles of the given length, as sorted node sets.
    pub fn cycles(&self, len: usize) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut path = Vec::with_capacity(len);
        fn dfs(
            adj: &[Vec<usize>],
            path: &mut Vec<usize>,
            len: usize,
            found: &mut BTreeSet<Vec<usize>>,
        ) {
            let last = *path.last().unwrap();
            for &next in &adj[last] {
                if next == path[0] && path.len() == len {
                    let mut key = path.clone();
                    key.sort_unstable();
                    found.insert(key);
                } else if path.len() < len && !path.contains(&next) {
                    path.push(next);
                    dfs(adj, path, len, found);
                    path.pop();
                }
            }
        }
        for start in 0..n {
            path.clear();
            path.push(start);
            dfs(&adj, &mut path, len, &mut found);
        }
        found.into_iter().collect()
    }

    /// DOT-compatible edge list.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph permutahedron {\n");
        for &(a, b) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.node_label(a),
                self.node_label(b)
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Build the permutahedron graph on the 24 orderings of (2,3,4,5).
pub fn permutahedron() -> PermutahedronGraph {
    let mut nodes: Vec<[u8; 4]> = Vec::with_capacity(24);
    let mut items = [2u8, 3, 4, 5];
    permute(&mut items, 0, &mut nodes);
    nodes.sort_unstable();

    let index = |w: &[u8; 4]| nodes.iter().position(|n| n == w).unwrap();
    let mut edges = Vec::with_capacity(36);
    for (i, w) in nodes.iter().enumerate() {
        for pos in 0..3 {
            let mut u = *w;
            u.swap(pos, pos + 1);
            let j = index(&u);
            if i < j {
                edges.push((i, j));
            }
        }
    }
    PermutahedronGraph { nodes, edges }
}

fn permute(items: &mut [u8; 4], k: usize, out: &mut Vec<[u8; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}
