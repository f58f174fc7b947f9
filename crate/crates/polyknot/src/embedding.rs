//! Embeddedness testing against pairwise edge intersection, clearance
//! certificates, and generic perturbation.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{segment_segment_distance, segments_intersect, SegmentRelation, Tolerance, Vec3};
use crate::polygon::Polygon;

/// How a polygon relates to the set of self-intersecting configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingStatus {
    /// Every non-adjacent edge pair is strictly disjoint.
    Embedded,
    /// Some non-adjacent edge pair crosses transversally.
    Singular,
    /// Some pair sits inside the tolerance band (touching, collinear
    /// overlap, or a zero-length edge) and no pair crosses outright.
    Degenerate,
}

/// Result of an embeddedness test.
///
/// `clearance` is the minimum distance over all non-adjacent edge pairs: a
/// certificate of the distance to the nearest self-intersecting
/// configuration. Any polygon whose vertices each move by less than
/// `clearance / 2` is still embedded.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingReport {
    pub status: EmbeddingStatus,
    /// Indices of the offending edge pair when not embedded.
    pub witness: Option<(usize, usize)>,
    pub clearance: f64,
}

impl EmbeddingReport {
    #[inline]
    pub fn is_embedded(&self) -> bool {
        self.status == EmbeddingStatus::Embedded
    }
}

/// Test every non-adjacent edge pair (n(n-3)/2 of them) for intersection.
pub fn is_embedded(polygon: &Polygon, tol: Tolerance) -> EmbeddingReport {
    let mut degenerate_witness: Option<(usize, usize)> = None;
    for (i, j) in polygon.nonadjacent_edge_pairs() {
        let (p1, p2) = polygon.edge(i);
        let (q1, q2) = polygon.edge(j);
        match segments_intersect(p1, p2, q1, q2, tol) {
            Ok(SegmentRelation::Disjoint) => {}
            Ok(SegmentRelation::Crossing) => {
                return EmbeddingReport {
                    status: EmbeddingStatus::Singular,
                    witness: Some((i, j)),
                    clearance: 0.0,
                };
            }
            Ok(SegmentRelation::Degenerate) => {
                degenerate_witness.get_or_insert((i, j));
            }
            Err(_) => {
                // Zero-length edge: structurally degenerate.
                degenerate_witness.get_or_insert((i, j));
            }
        }
    }
    if let Some(witness) = degenerate_witness {
        return EmbeddingReport {
            status: EmbeddingStatus::Degenerate,
            witness: Some(witness),
            clearance: nonadjacent_min_distance(polygon),
        };
    }
    EmbeddingReport {
        status: EmbeddingStatus::Embedded,
        witness: None,
        clearance: nonadjacent_min_distance(polygon),
    }
}

/// Minimum Euclidean distance over all non-adjacent edge pairs.
///
/// Strictly positive exactly when the polygon is embedded.
pub fn nonadjacent_min_distance(polygon: &Polygon) -> f64 {
    let mut min = f64::INFINITY;
    for (i, j) in polygon.nonadjacent_edge_pairs() {
        let (p1, p2) = polygon.edge(i);
        let (q1, q2) = polygon.edge(j);
        min = min.min(segment_segment_distance(p1, p2, q1, q2));
    }
    min
}

const PERTURB_ATTEMPTS: usize = 64;

/// Displace every vertex by an independent uniform vector of norm at most
/// `magnitude`, retrying until the result is embedded.
///
/// The input must be embedded and `magnitude` must stay below a quarter of
/// its clearance so every attempt remains far from the singular set.
/// Deterministic for a fixed seed; `magnitude = 0` returns the input.
pub fn perturb_generic(
    polygon: &Polygon,
    magnitude: f64,
    seed: u64,
    tol: Tolerance,
) -> Result<Polygon> {
    let report = is_embedded(polygon, tol);
    if !report.is_embedded() {
        return Err(Error::NotEmbedded);
    }
    if magnitude == 0.0 {
        return Ok(polygon.clone());
    }
    let limit = report.clearance / 4.0;
    if magnitude >= limit {
        return Err(Error::PerturbationTooLarge { magnitude, limit });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PERTURB_ATTEMPTS {
        let candidate = polygon.map_vertices(|v| v + sample_ball(&mut rng) * magnitude);
        if is_embedded(&candidate, tol).is_embedded() {
            return Ok(candidate);
        }
    }
    Err(Error::PerturbationFailed {
        attempts: PERTURB_ATTEMPTS,
    })
}

/// Uniform sample from the closed unit ball by rejection from the cube.
fn sample_ball(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        if v.norm_squared() <= 1.0 {
            return v;
        }
    }
}
