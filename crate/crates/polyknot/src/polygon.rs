//! Closed polygons in 3-space with a distinguished first vertex, plus the
//! shared file formats (JSON and plain text).

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Tolerance, Vec3};

/// An ordered list of vertices; the closing edge runs from the last vertex
/// back to the first. Orientation is implied by list order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec3>,
}

impl Polygon {
    /// Build a polygon, validating the structural invariants: at least three
    /// vertices, all coordinates finite, consecutive vertices distinct.
    pub fn new(vertices: Vec<Vec3>) -> Result<Polygon> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::PolygonTooSmall { n, min: 3 });
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let tol = Tolerance::default();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if (b - a).norm() <= tol.eps() * (1.0 + a.norm() + b.norm()) {
                return Err(Error::ZeroLengthSegment);
            }
        }
        Ok(Polygon { vertices })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    /// Vertex by index, wrapping modulo n.
    #[inline]
    pub fn vertex(&self, i: usize) -> Vec3 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` as the ordered pair `(v_i, v_{i+1})`, wrapping at the end.
    #[inline]
    pub fn edge(&self, i: usize) -> (Vec3, Vec3) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    /// The n consecutive edge lengths, closing back to the first vertex.
    pub fn edge_lengths(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = self.edge(i);
                (b - a).norm()
            })
            .collect()
    }

    /// Whether every edge length is within `tol * target` of `target`.
    pub fn is_equilateral(&self, target: f64, tol: Tolerance) -> bool {
        debug_assert!(target > 0.0);
        self.edge_lengths()
            .iter()
            .all(|&l| (l - target).abs() <= tol.eps() * target)
    }

    /// Drop the last vertex. The result may be singular; callers that need
    /// an embedded polygon must re-check.
    pub fn forget_last(&self) -> Result<Polygon> {
        let n = self.vertices.len();
        if n < 4 {
            return Err(Error::PolygonTooSmall { n, min: 4 });
        }
        Polygon::new(self.vertices[..n - 1].to_vec())
    }

    /// Iterator over the indices of all unordered non-adjacent edge pairs.
    ///
    /// Yields exactly n(n-3)/2 pairs.
    pub fn nonadjacent_edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.vertices.len();
        (0..n).flat_map(move |i| {
            ((i + 2)..n)
                .filter(move |&j| !(i == 0 && j == n - 1))
                .map(move |j| (i, j))
        })
    }

    /// Map every vertex through `f`.
    pub(crate) fn map_vertices(&self, mut f: impl FnMut(Vec3) -> Vec3) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Replace the vertex list without re-validating; internal callers must
    /// preserve the invariants.
    pub(crate) fn from_vertices_unchecked(vertices: Vec<Vec3>) -> Polygon {
        debug_assert!(vertices.len() >= 3);
        Polygon { vertices }
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 3]>,
}

/// The regular planar n-gon with the given edge length, centered at the
/// origin in the z = 0 plane.
pub fn regular_ngon(n: usize, edge: f64) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::PolygonTooSmall { n, min: 3 });
    }
    let r = edge / (2.0 * (std::f64::consts::PI / n as f64).sin());
    Polygon::new(
        (0..n)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Vec3::new(r * a.cos(), r * a.sin(), 0.0)
            })
            .collect(),
    )
}

/// Parse the JSON polygon format: `{"vertices": [[x, y, z], ...]}`.
pub fn polygon_from_json(text: &str) -> Result<Polygon> {
    let file: PolygonFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("polygon json: {e}")))?;
    let vertices = file
        .vertices
        .iter()
        .map(|&[x, y, z]| Vec3::new(x, y, z))
        .collect();
    Polygon::new(vertices)
}

/// Parse the plain-text polygon format: one `x y z` triple per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn polygon_from_text(text: &str) -> Result<Polygon> {
    let mut vertices = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "line {}: expected 3 coordinates, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let mut c = [0.0f64; 3];
        for (k, field) in fields.iter().enumerate() {
            c[k] = field
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        }
        vertices.push(Vec3::new(c[0], c[1], c[2]));
    }
    Polygon::new(vertices)
}

/// Read a polygon from a file, auto-detecting the format from the content:
/// JSON when the first non-space byte is `{`, plain text otherwise.
pub fn read_polygon(path: &Path) -> Result<Polygon> {
    let text = std::fs::read_to_string(path)?;
    parse_polygon(&text)
}

/// Parse either supported polygon format from a string.
pub fn parse_polygon(text: &str) -> Result<Polygon> {
    if text.trim_start().starts_with('{') {
        polygon_from_json(text)
    } else {
        polygon_from_text(text)
    }
}

/// Serialize a polygon to the JSON file format.
pub fn polygon_to_json(polygon: &Polygon) -> String {
    let file = PolygonFile {
        vertices: polygon.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(),
    };
    serde_json::to_string_pretty(&file).expect("polygon serialization cannot fail")
}
