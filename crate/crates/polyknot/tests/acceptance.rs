//! Acceptance suite: every criterion the library must meet, one test per
//! criterion, each printing a PASS line (run with `-- --nocapture` to see
//! them). Sample counts and tolerances are pinned here.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use polyknot::embedding::{is_embedded, perturb_generic};
use polyknot::heptagon::{permutahedron, theta_signs, xi};
use polyknot::hexagon::{curl, joint_class, region_code_hex};
use polyknot::identify::{identify, KnotType};
use polyknot::polygon::read_polygon;
use polyknot::projection::{
    crossing_bound, orthogonal_crossing_bound, orthogonal_diagram, radial_diagram,
};
use polyknot::sampler::{
    certify_path, derive_seed, identify_polygon, identify_polygon_robust, perturbation_path,
    random_polygon, with_genericity_retries,
};
use polyknot::symmetry::{mirror, reverse, rotate_labels};
use polyknot::{Polygon, Sign, Tolerance};

const TOL: Tolerance = Tolerance::DEFAULT;

fn fixture(name: &str) -> Polygon {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    read_polygon(&path).unwrap_or_else(|e| panic!("loading fixture {name}: {e}"))
}

fn pass(criterion: &str, detail: String) {
    println!("criterion {criterion}: PASS ({detail})");
}

/// 1000 seeded random hexagonal trefoils, shared across criteria.
fn hexagonal_trefoils() -> &'static Vec<Polygon> {
    static TREFOILS: OnceLock<Vec<Polygon>> = OnceLock::new();
    TREFOILS.get_or_init(|| {
        let mut found = Vec::with_capacity(1000);
        let mut index = 0u64;
        while found.len() < 1000 {
            assert!(index < 2_000_000, "trefoil sampling budget exhausted");
            let seed = derive_seed(0x7EF011, index);
            index += 1;
            let Ok(p) = random_polygon(6, seed, TOL) else {
                continue;
            };
            if let Ok(KnotType::TrefoilRight | KnotType::TrefoilLeft) = identify_polygon(&p, TOL) {
                found.push(p);
            }
        }
        found
    })
}

/// 1000 seeded random heptagonal figure-eights, shared across criteria.
fn heptagonal_figure_eights() -> &'static Vec<Polygon> {
    static FIG8S: OnceLock<Vec<Polygon>> = OnceLock::new();
    FIG8S.get_or_init(|| {
        let mut found = Vec::with_capacity(1000);
        let mut index = 0u64;
        while found.len() < 1000 {
            assert!(index < 8_000_000, "figure-eight sampling budget exhausted");
            let seed = derive_seed(0xF168E17, index);
            index += 1;
            let Ok(p) = random_polygon(7, seed, TOL) else {
                continue;
            };
            if let Ok(KnotType::FigureEight) = identify_polygon(&p, TOL) {
                found.push(p);
            }
        }
        found
    })
}

#[test]
fn criterion_01_fixture_regression() {
    let start = Instant::now();

    let pentagon = fixture("pentagon_q.json");
    // The fixture files and the suite must agree on the coordinates
    // exactly; the two hexagon fixtures extend the pentagon by one vertex.
    let expected = [
        [0.0, 0.0, 0.0],
        [0.886375, 0.276357, 0.371441],
        [0.125043, -0.363873, 0.473812],
        [0.549367, 0.461959, 0.845227],
        [0.818041, 0.0, 0.0],
    ];
    assert_eq!(pentagon.len(), 5);
    for (k, want) in expected.iter().enumerate() {
        let v = pentagon.vertex(k);
        assert_eq!([v.x, v.y, v.z], *want, "pentagon vertex {k}");
    }
    for (name, v6) in [
        ("hexagon_unknot.json", [0.4090205, 0.0, -0.912525]),
        ("hexagon_trefoil.json", [0.4090205, -0.343939, 0.845227]),
    ] {
        let h = fixture(name);
        assert_eq!(h.len(), 6);
        for (k, want) in expected.iter().enumerate() {
            let v = h.vertex(k);
            assert_eq!([v.x, v.y, v.z], *want, "{name} vertex {k}");
        }
        let last = h.vertex(5);
        assert_eq!([last.x, last.y, last.z], v6, "{name} final vertex");
    }

    let unknot = fixture("hexagon_unknot.json");
    assert_eq!(identify_polygon(&unknot, TOL).unwrap(), KnotType::Unknot);
    assert_eq!(joint_class(&unknot, TOL).unwrap().as_pair(), (0, 0));

    let trefoil = fixture("hexagon_trefoil.json");
    assert_eq!(
        identify_polygon(&trefoil, TOL).unwrap(),
        KnotType::TrefoilRight
    );
    assert_eq!(joint_class(&trefoil, TOL).unwrap().as_pair(), (1, 1));

    assert_eq!(region_code_hex(&unknot, TOL).unwrap().to_string(), "2-4-3");
    assert_eq!(region_code_hex(&trefoil, TOL).unwrap().to_string(), "2-4-3");

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "fixture regression took {elapsed:?}"
    );
    pass(
        "01 fixture-regression",
        format!("unknot (0,0), right trefoil (+1,+1), region 2-4-3 in {elapsed:?}"),
    );
}

#[test]
fn criterion_02_joint_class_value_set_and_identify_agreement() {
    let samples = 10_000u64;
    for index in 0..samples {
        let seed = derive_seed(0x0C2, index);
        let p = random_polygon(6, seed, TOL).unwrap();
        let (class, knot) = with_genericity_retries(&p, seed, TOL, |q| {
            Ok((joint_class(q, TOL)?, identify(&radial_diagram(q, TOL)?)?))
        })
        .unwrap();
        let pair = class.as_pair();
        assert!(
            matches!(pair, (0, 0) | (1, 1) | (1, -1) | (-1, 1) | (-1, -1)),
            "sample {index}: joint class {pair:?} outside the five-value set"
        );
        let expected = match class.chirality {
            0 => KnotType::Unknot,
            1 => KnotType::TrefoilRight,
            _ => KnotType::TrefoilLeft,
        };
        assert_eq!(
            knot, expected,
            "sample {index}: chirality {} vs identify {knot}",
            class.chirality
        );
    }
    pass(
        "02 joint-class-value-set",
        format!("{samples} hexagons, zero violations"),
    );
}

#[test]
fn criterion_03_small_polygon_knot_ranges() {
    let samples = 10_000u64;
    let mut seen = BTreeMap::new();
    for (n, allowed) in [
        (5usize, &[KnotType::Unknot][..]),
        (
            6,
            &[
                KnotType::Unknot,
                KnotType::TrefoilRight,
                KnotType::TrefoilLeft,
            ][..],
        ),
        (
            7,
            &[
                KnotType::Unknot,
                KnotType::TrefoilRight,
                KnotType::TrefoilLeft,
                KnotType::FigureEight,
            ][..],
        ),
    ] {
        for index in 0..samples {
            let seed = derive_seed(0x0C3 + n as u64, index);
            let p = random_polygon(n, seed, TOL).unwrap();
            let knot = identify_polygon_robust(&p, seed, TOL).unwrap();
            assert!(
                allowed.contains(&knot),
                "n={n} sample {index}: unexpected knot type {knot}"
            );
            *seen.entry((n, knot.name())).or_insert(0u64) += 1;
        }
    }
    pass(
        "03 knot-type-ranges",
        format!("{samples} samples each for n=5,6,7: {seen:?}"),
    );
}

#[test]
fn criterion_04_crossing_bounds() {
    let samples = 10_000u64;
    let mut maxima = BTreeMap::new();
    for n in [6usize, 7, 8, 9] {
        let radial_limit = crossing_bound(n);
        let orthogonal_limit = orthogonal_crossing_bound(n);
        assert_eq!(radial_limit, [3, 6, 10, 15][n - 6]);
        assert_eq!(orthogonal_limit, [5, 9, 14, 20][n - 6]);
        for index in 0..samples {
            let seed = derive_seed(0x0C4 + n as u64, index);
            let p = random_polygon(n, seed, TOL).unwrap();
            let radial = with_genericity_retries(&p, seed, TOL, |q| radial_diagram(q, TOL))
                .unwrap()
                .crossing_count();
            let ortho = with_genericity_retries(&p, seed, TOL, |q| orthogonal_diagram(q, TOL))
                .unwrap()
                .crossing_count();
            assert!(
                radial <= radial_limit,
                "n={n} sample {index}: radial diagram has {radial} crossings > {radial_limit}"
            );
            assert!(
                ortho <= orthogonal_limit,
                "n={n} sample {index}: orthogonal diagram has {ortho} crossings > {orthogonal_limit}"
            );
            let entry = maxima.entry(n).or_insert((0usize, 0usize));
            entry.0 = entry.0.max(radial);
            entry.1 = entry.1.max(ortho);
        }
    }
    pass(
        "04 crossing-bounds",
        format!("{samples} samples per n, observed maxima (radial, orthogonal): {maxima:?}"),
    );
}

#[test]
fn criterion_05_region_table_consistency() {
    let samples = 100_000u64;
    // Allowed knot types per region and the forced curl sign of trefoils.
    let allowed = |region: &str| -> &'static [KnotType] {
        match region {
            "2-3-4" | "4-3-2" => &[KnotType::Unknot],
            "2-4-3" | "3-2-4" => &[KnotType::Unknot, KnotType::TrefoilRight],
            "3-4-2" | "4-2-3" => &[KnotType::Unknot, KnotType::TrefoilLeft],
            other => panic!("unexpected region code {other}"),
        }
    };
    let trefoil_curl = |region: &str| -> i8 {
        match region {
            "2-4-3" | "4-2-3" => 1,
            "3-2-4" | "3-4-2" => -1,
            other => panic!("trefoil in unknot-only region {other}"),
        }
    };

    let mut histogram: BTreeMap<(String, &'static str), u64> = BTreeMap::new();
    for index in 0..samples {
        let seed = derive_seed(0x0C5, index);
        let p = random_polygon(6, seed, TOL).unwrap();
        let (region, class, knot) = with_genericity_retries(&p, seed, TOL, |q| {
            Ok((
                region_code_hex(q, TOL)?,
                joint_class(q, TOL)?,
                identify(&radial_diagram(q, TOL)?)?,
            ))
        })
        .unwrap();
        let region = region.to_string();
        assert!(
            allowed(&region).contains(&knot),
            "sample {index}: {knot} observed in region {region}"
        );
        if matches!(knot, KnotType::TrefoilRight | KnotType::TrefoilLeft) {
            assert_eq!(
                class.curl_part,
                trefoil_curl(&region),
                "sample {index}: trefoil curl mismatch in region {region}"
            );
        }
        *histogram.entry((region, knot.name())).or_insert(0) += 1;
    }

    for (region, knot) in [
        ("2-4-3", KnotType::TrefoilRight),
        ("3-2-4", KnotType::TrefoilRight),
        ("3-4-2", KnotType::TrefoilLeft),
        ("4-2-3", KnotType::TrefoilLeft),
    ] {
        let count = histogram
            .get(&(region.to_string(), knot.name()))
            .copied()
            .unwrap_or(0);
        assert!(
            count > 0,
            "no {knot} observed in region {region} over {samples} samples"
        );
    }
    pass(
        "05 region-table-consistency",
        format!("{samples} hexagons: {histogram:?}"),
    );
}

#[test]
fn criterion_06_dihedral_identities() {
    let trefoils = hexagonal_trefoils();
    assert!(trefoils.len() >= 1000);
    for (k, h) in trefoils.iter().enumerate() {
        let c = curl(h, TOL).unwrap();
        assert_ne!(c, Sign::Zero, "trefoil {k} has zero curl");
        let r = curl(&reverse(h), TOL).unwrap();
        let s = curl(&rotate_labels(h, 1).unwrap(), TOL).unwrap();
        assert_eq!(r, -c, "trefoil {k}: curl(rH) != -curl(H)");
        assert_eq!(s, -c, "trefoil {k}: curl(sH) != -curl(H)");
    }

    let fig8s = heptagonal_figure_eights();
    assert!(fig8s.len() >= 1000);
    for (k, h) in fig8s.iter().enumerate() {
        let base = xi(h, TOL).unwrap();
        assert!(
            base.figure_eight_consistent,
            "figure-eight {k} fails the intersection-number pattern"
        );
        let r = xi(&reverse(h), TOL).unwrap();
        let s = xi(&rotate_labels(h, 1).unwrap(), TOL).unwrap();
        let m = xi(&mirror(h), TOL).unwrap();
        assert_eq!(r.xi, -base.xi, "figure-eight {k}: xi(rH) != -xi(H)");
        assert_eq!(s.xi, base.xi, "figure-eight {k}: xi(sH) != xi(H)");
        assert_eq!(m.xi, base.xi, "figure-eight {k}: xi(mirror H) != xi(H)");
    }
    pass(
        "06 dihedral-identities",
        format!(
            "{} trefoils and {} figure-eights, zero violations",
            trefoils.len(),
            fig8s.len()
        ),
    );
}

#[test]
fn criterion_07_five_hexagonal_classes_realized() {
    let trefoil = fixture("hexagon_trefoil.json");
    let unknot = fixture("hexagon_unknot.json");
    let representatives = [
        (trefoil.clone(), (1i8, 1i8)),
        (rotate_labels(&trefoil, 1).unwrap(), (1, -1)),
        (mirror(&trefoil), (-1, -1)),
        (mirror(&rotate_labels(&trefoil, 1).unwrap()), (-1, 1)),
        (unknot, (0, 0)),
    ];
    let mut seen = Vec::new();
    for (k, (polygon, expected)) in representatives.iter().enumerate() {
        let class = joint_class(polygon, TOL).unwrap().as_pair();
        assert_eq!(class, *expected, "representative {k} has class {class:?}");
        seen.push(class);

        // Certified 100-step perturbation path staying in the class.
        let frames = perturbation_path(polygon, 100, derive_seed(0x0C7, k as u64), TOL).unwrap();
        let path = certify_path(frames, TOL);
        assert!(
            path.certified,
            "representative {k}: path failed at {:?}",
            path.failed_step
        );
        for (f, frame) in path.frames.iter().enumerate() {
            assert_eq!(
                joint_class(frame, TOL).unwrap().as_pair(),
                *expected,
                "representative {k} frame {f} changed class"
            );
        }
    }
    seen.sort_unstable();
    seen.dedup();
    assert_eq!(seen.len(), 5, "expected all five classes, saw {seen:?}");
    pass("07 five-classes-realized", "identity/s/mirror/mirror.s/unknot give all five classes; 100-step certified paths preserve each".to_string());
}

#[test]
fn criterion_08_xi_invariance_along_certified_path() {
    let fig8 = fixture("heptagon_figure_eight.json");
    assert_eq!(identify_polygon(&fig8, TOL).unwrap(), KnotType::FigureEight);
    let base_xi = xi(&fig8, TOL).unwrap().xi;

    // 1000-step perturbation walk; each step is retried until the frame is
    // generic for xi so the invariant is defined everywhere along the path.
    let steps = 1000usize;
    let mut frames = Vec::with_capacity(steps + 1);
    frames.push(fig8);
    for k in 0..steps {
        let current = frames.last().unwrap();
        let clearance = is_embedded(current, TOL).clearance;
        let mut accepted = None;
        for attempt in 0..16u64 {
            let seed = derive_seed(0x0C8, (k as u64) << 8 | attempt);
            let candidate = perturb_generic(current, clearance * 0.2, seed, TOL).unwrap();
            if xi(&candidate, TOL).is_ok() {
                accepted = Some(candidate);
                break;
            }
        }
        frames.push(accepted.expect("no generic perturbation found"));
    }

    let path = certify_path(frames, TOL);
    assert!(
        path.certified,
        "walk failed certification at {:?}",
        path.failed_step
    );
    for (k, frame) in path.frames.iter().enumerate() {
        assert_eq!(
            identify_polygon_robust(frame, derive_seed(0xC8F, k as u64), TOL).unwrap(),
            KnotType::FigureEight,
            "frame {k} left the figure-eight class"
        );
        assert_eq!(
            xi(frame, TOL).unwrap().xi,
            base_xi,
            "xi changed at frame {k}"
        );
    }
    pass(
        "08 xi-invariance-along-path",
        format!("{steps}-step certified walk, identify = 4_1 and xi = {base_xi:+} throughout"),
    );
}

#[test]
fn criterion_09_heptagon_intersection_patterns() {
    let fig8s = heptagonal_figure_eights();
    assert!(fig8s.len() >= 1000);
    let mut xi_counts = BTreeMap::new();
    for (k, h) in fig8s.iter().enumerate() {
        let (t3, t6) = theta_signs(h, TOL).unwrap();
        assert_ne!(t3, Sign::Zero, "figure-eight {k}: theta3 = 0");
        assert_ne!(t6, Sign::Zero, "figure-eight {k}: theta6 = 0");
        let half_sum = (t3.value() + t6.value()) / 2;
        let half_diff = (t3.value() - t6.value()) / 2;
        assert!(
            (half_sum == 0) != (half_diff == 0),
            "figure-eight {k}: half-sum {half_sum}, half-diff {half_diff}"
        );
        assert_eq!(half_sum.abs() + half_diff.abs(), 1);

        let report = xi(h, TOL).unwrap();
        if t3 == t6 {
            let nonzero = [report.i34, report.i45, report.i56]
                .iter()
                .filter(|v| **v != 0)
                .count();
            assert_eq!(
                nonzero, 1,
                "figure-eight {k}: intersection pattern {report:?}"
            );
            assert_eq!((report.i34 + report.i45 + report.i56).abs(), 1);
        } else {
            assert!(
                (report.i34 != 0) != (report.i56 != 0),
                "figure-eight {k}: outer intersection pattern {report:?}"
            );
            assert_eq!((report.i34 - report.i56).abs(), 1);
        }
        assert!(
            report.xi == 1 || report.xi == -1,
            "figure-eight {k}: xi = {}",
            report.xi
        );
        *xi_counts.entry(report.xi).or_insert(0u64) += 1;
    }
    assert!(
        xi_counts.get(&1).copied().unwrap_or(0) > 0,
        "no xi = +1 instances"
    );
    assert!(
        xi_counts.get(&-1).copied().unwrap_or(0) > 0,
        "no xi = -1 instances"
    );
    pass(
        "09 heptagon-intersection-patterns",
        format!(
            "{} figure-eights, xi histogram {xi_counts:?}, zero violations",
            fig8s.len()
        ),
    );
}

#[test]
fn criterion_10_permutahedron_census() {
    let g = permutahedron();
    assert_eq!(g.nodes().len(), 24);
    assert_eq!(g.edges().len(), 36);
    for node in 0..24 {
        assert_eq!(g.degree(node), 3, "node {node} degree");
    }
    let squares = g.cycles(4);
    let hexagons = g.cycles(6);
    assert_eq!(squares.len(), 6);
    assert_eq!(hexagons.len(), 8);
    // Face census closes up: V - E + F = 2.
    assert_eq!(24 - 36 + (squares.len() + hexagons.len()) as i64, 2);
    pass(
        "10 permutahedron",
        "24 nodes, degree 3, 36 edges, 6 square + 8 hexagonal faces".to_string(),
    );
}
