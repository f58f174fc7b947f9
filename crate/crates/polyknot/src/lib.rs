//! Polygonal knots in 3-space.
//!
//! A polygon with n vertices is a point of a configuration space whose
//! self-intersecting configurations form a discriminant; the complement
//! splits into path components that refine topological knot types. This
//! crate provides:
//!
//! - tolerance-guarded geometric predicates ([`geom`]);
//! - embeddedness tests with clearance certificates and generic
//!   perturbation ([`embedding`], [`polygon`]);
//! - the hexagon invariants (triangle intersection numbers, chirality,
//!   curl, joint class, region codes) and the heptagon invariants (theta
//!   signs, triangle intersections, xi, the permutahedron region graph)
//!   ([`hexagon`], [`heptagon`]);
//! - dihedral relabeling actions and mirror reflection ([`symmetry`]);
//! - spherical and edge-on projection diagrams with Gauss/PD export
//!   ([`projection`], [`diagram`]);
//! - knot identification via Kauffman bracket, Jones polynomial, and
//!   determinant ([`mod@identify`], [`laurent`]);
//! - seeded samplers, crankshaft moves, censuses, and isotopy-path
//!   certification ([`sampler`]).

pub mod axis;
pub mod diagram;
pub mod embedding;
pub mod error;
pub mod geom;
pub mod heptagon;
pub mod hexagon;
pub mod identify;
pub mod laurent;
pub mod polygon;
pub mod projection;
pub mod sampler;
pub mod symmetry;

#[cfg(test)]
pub(crate) mod test_fixtures;

pub use axis::RegionCode;
pub use diagram::Diagram;
pub use embedding::{
    is_embedded, nonadjacent_min_distance, perturb_generic, EmbeddingReport, EmbeddingStatus,
};
pub use error::{Error, Result};
pub use geom::{orient, segment_triangle_crossing, segments_intersect, Sign, Tolerance, Vec3};
pub use hexagon::{joint_class, JointClass};
pub use identify::{determinant, identify, jones, kauffman_bracket, KnotType};
pub use laurent::LaurentPolynomial;
pub use polygon::{parse_polygon, polygon_to_json, read_polygon, Polygon};
pub use projection::{crossing_bound, hull_relabel, orthogonal_diagram, radial_diagram};
pub use sampler::{
    census, certify_path, crankshaft, random_equilateral, random_polygon, CensusConfig,
    CensusReport,
};
