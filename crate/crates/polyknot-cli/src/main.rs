//! Command-line interface over the polyknot library.
//!
//! Exit codes: 0 on success, 1 on domain errors (non-generic input,
//! singular polygons where embedded ones are required) with a
//! machine-readable error object on stdout, 2 on usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyknot::embedding::{is_embedded, EmbeddingStatus};
use polyknot::heptagon::{permutahedron, region_code_hept, xi};
use polyknot::hexagon::{curl, deltas, joint_class, region_code_hex};
use polyknot::identify::{identify, jones};
use polyknot::polygon::{parse_polygon, polygon_to_json, Polygon};
use polyknot::projection::{orthogonal_diagram, radial_diagram};
use polyknot::sampler::{census, certify_path, with_genericity_retries, CensusConfig};
use polyknot::symmetry::{mirror, reverse, rotate_labels};
use polyknot::{Diagram, Error, Tolerance};

#[derive(Parser)]
#[command(
    name = "polyknot",
    version,
    about = "Polygonal knots: embeddedness, invariants, diagrams, censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Relative tolerance for all geometric predicates.
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Retry non-generic configurations with small seeded perturbations.
    #[arg(long, global = true)]
    perturb: bool,

    /// Seed for perturbation retries and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Test a polygon for embeddedness and report its clearance.
    Check { file: PathBuf },
    /// Hexagon invariants: triangle intersection numbers, chirality, curl,
    /// joint class, region code.
    ClassifyHex { file: PathBuf },
    /// Heptagon invariants: theta signs, triangle intersections, xi, region
    /// code, knot type.
    ClassifyHept { file: PathBuf },
    /// Half-plane region code of a polygon (pentagon base, hexagon, or
    /// heptagon).
    Region { file: PathBuf },
    /// Apply a relabeling or reflection and emit the polygon.
    Act {
        file: PathBuf,
        /// One of: reverse, rotate:k, mirror.
        #[arg(long)]
        op: String,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Project a polygon to a knot diagram and emit Gauss and PD codes.
    Project {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Radial)]
        method: Method,
    },
    /// Identify the knot type of a polygon or a PD-code file.
    Identify { file: PathBuf },
    /// Sample random polygons and aggregate invariant/knot histograms.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Sample equilateral polygons by crankshaft moves instead of
        /// uniform vertices.
        #[arg(long)]
        equilateral: bool,
        /// Accepted crankshaft moves per equilateral sample.
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a discrete isotopy path (a JSON array of polygons).
    PathCheck { file: PathBuf },
    /// Emit the heptagonal region-adjacency graph.
    Permutahedron {
        /// DOT edge list instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Radial,
    Orthogonal,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match Tolerance::new(cli.eps) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    match run(&cli, tol) {
        Ok(output) => {
            print_output(&output, cli.format);
            ExitCode::SUCCESS
        }
        Err(e) if is_usage_error(&e) => usage_error(&e),
        Err(e) => {
            println!("{}", error_object(&e));
            ExitCode::from(1)
        }
    }
}

fn usage_error(e: &Error) -> ExitCode {
    eprintln!("{}", error_object(e));
    ExitCode::from(2)
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Io(_)
            | Error::PolygonTooSmall { .. }
            | Error::WrongVertexCount { .. }
            | Error::NonFinite
            | Error::ZeroLengthSegment
            | Error::IndexOutOfRange { .. }
            | Error::InvalidDiagram(_)
    )
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroLengthSegment => "zero-length-segment",
        Error::DegenerateTriangle => "degenerate-triangle",
        Error::DegenerateContact => "degenerate-contact",
        Error::DegenerateConfiguration(_) => "degenerate-configuration",
        Error::PolygonTooSmall { .. } => "polygon-too-small",
        Error::WrongVertexCount { .. } => "wrong-vertex-count",
        Error::NonFinite => "non-finite",
        Error::NotEmbedded => "not-embedded",
        Error::NonGeneric(_) => "non-generic",
        Error::DegenerateAxis => "degenerate-axis",
        Error::IndexOutOfRange { .. } => "index-out-of-range",
        Error::PerturbationTooLarge { .. } => "perturbation-too-large",
        Error::PerturbationFailed { .. } => "perturbation-failed",
        Error::SamplingFailed { .. } => "sampling-failed",
        Error::TooManyCrossings { .. } => "too-many-crossings",
        Error::InvalidDiagram(_) => "invalid-diagram",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
    }
}

fn error_object(e: &Error) -> String {
    json!({"error": {"kind": error_kind(e), "message": e.to_string()}}).to_string()
}

/// Command output: the JSON value plus an optional plain-text rendering.
struct Output {
    value: Value,
    text: String,
}

fn print_output(output: &Output, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&output.value).unwrap()),
        Format::Text => println!("{}", output.text),
    }
}

fn read_polygon_file(path: &Path) -> Result<Polygon, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_polygon(&text)
}

/// Run an operation, retrying non-generic configurations with small
/// perturbations when --perturb was given.
fn maybe_perturbed<T>(
    cli: &Cli,
    tol: Tolerance,
    polygon: &Polygon,
    op: impl Fn(&Polygon) -> Result<T, Error>,
) -> Result<T, Error> {
    if cli.perturb {
        with_genericity_retries(polygon, cli.seed, tol, op)
    } else {
        op(polygon)
    }
}

fn run(cli: &Cli, tol: Tolerance) -> Result<Output, Error> {
    match &cli.command {
        Command::Check { file } => {
            let polygon = read_polygon_file(file)?;
            let report = is_embedded(&polygon, tol);
            let status = match report.status {
                EmbeddingStatus::Embedded => "embedded",
                EmbeddingStatus::Singular => "singular",
                EmbeddingStatus::Degenerate => "degenerate",
            };
            let value = json!({
                "n": polygon.len(),
                "status": status,
                "witness": report.witness.map(|(i, j)| vec![i, j]),
                "clearance": report.clearance,
                "edge_lengths": polygon.edge_lengths(),
            });
            let text = match report.witness {
                Some((i, j)) => format!(
                    "{status} (edges {i} and {j}); clearance {}",
                    report.clearance
                ),
                None => format!("{status}; clearance {}", report.clearance),
            };
            Ok(Output { value, text })
        }

        Command::ClassifyHex { file } => {
            let polygon = read_polygon_file(file)?;
            let (d, c, class, region, knot) = maybe_perturbed(cli, tol, &polygon, |p| {
                Ok((
                    deltas(p, tol)?,
                    curl(p, tol)?,
                    joint_class(p, tol)?,
                    region_code_hex(p, tol)?,
                    identify(&radial_diagram(p, tol)?)?,
                ))
            })?;
            let class_name = match class.chirality {
                1 => "right-trefoil",
                -1 => "left-trefoil",
                _ => "unknot",
            };
            let value = json!({
                "deltas": [d[0].value(), d[1].value(), d[2].value()],
                "chirality": class.chirality,
                "curl": c.value(),
                "class": class_name,
                "joint_class": [class.chirality, class.curl_part],
                "region": region.to_string(),
                "knot": knot.name(),
            });
            let text = format!(
                "class {class_name} joint ({:+}, {:+}) region {} knot {}",
                class.chirality, class.curl_part, region, knot
            );
            Ok(Output { value, text })
        }

        Command::ClassifyHept { file } => {
            let polygon = read_polygon_file(file)?;
            let (report, region, knot) = maybe_perturbed(cli, tol, &polygon, |p| {
                // A winding base has no region code; the rest of the report
                // is still well-defined.
                let region = match region_code_hept(p, tol) {
                    Ok(code) => Some(code.to_string()),
                    Err(e) if polyknot::axis::is_axis_winding(&e) => None,
                    Err(e) => return Err(e),
                };
                Ok((xi(p, tol)?, region, identify(&radial_diagram(p, tol)?)?))
            })?;
            let mut value = serde_json::to_value(report).unwrap();
            let map = value.as_object_mut().unwrap();
            map.insert("region".into(), json!(region));
            map.insert("knot".into(), json!(knot.name()));
            let text = format!(
                "theta ({:+}, {:+}) intersections ({:+}, {:+}, {:+}) xi {:+} region {} knot {}",
                report.theta3,
                report.theta6,
                report.i34,
                report.i45,
                report.i56,
                report.xi,
                region.as_deref().unwrap_or("none"),
                knot
            );
            Ok(Output { value, text })
        }

        Command::Region { file } => {
            let polygon = read_polygon_file(file)?;
            let n = polygon.len();
            let region = maybe_perturbed(cli, tol, &polygon, |p| match n {
                5 => polyknot::axis::region_word(p, tol),
                6 => region_code_hex(p, tol),
                7 => region_code_hept(p, tol),
                _ => Err(Error::WrongVertexCount { n, expected: 6 }),
            })?;
            Ok(Output {
                value: json!({"n": n, "region": region.to_string()}),
                text: region.to_string(),
            })
        }

        Command::Act { file, op, out } => {
            let polygon = read_polygon_file(file)?;
            let result = match op.as_str() {
                "reverse" => reverse(&polygon),
                "mirror" => mirror(&polygon),
                other => {
                    let k = other
                        .strip_prefix("rotate:")
                        .ok_or_else(|| Error::Parse(format!("unknown action {other}")))?
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    rotate_labels(&polygon, k)?
                }
            };
            let text = polygon_to_json(&result);
            if let Some(path) = out {
                std::fs::write(path, &text)?;
            }
            Ok(Output {
                value: serde_json::from_str(&text).unwrap(),
                text,
            })
        }

        Command::Project { file, method } => {
            let polygon = read_polygon_file(file)?;
            let diagram = maybe_perturbed(cli, tol, &polygon, |p| match method {
                Method::Radial => radial_diagram(p, tol),
                Method::Orthogonal => orthogonal_diagram(p, tol),
            })?;
            let value = json!({
                "method": match method { Method::Radial => "radial", Method::Orthogonal => "orthogonal" },
                "crossings": diagram.crossing_count(),
                "writhe": diagram.writhe(),
                "gauss": diagram.gauss_string(),
                "pd": diagram.pd_string(),
            });
            let text = format!(
                "{} crossings, writhe {}\ngauss: {}\npd: {}",
                diagram.crossing_count(),
                diagram.writhe(),
                diagram.gauss_string(),
                diagram.pd_string()
            );
            Ok(Output { value, text })
        }

        Command::Identify { file } => {
            let text = std::fs::read_to_string(file)?;
            let diagram = if text.trim_start().starts_with('X') {
                Diagram::from_pd(&text)?
            } else {
                let polygon = parse_polygon(&text)?;
                maybe_perturbed(cli, tol, &polygon, |p| radial_diagram(p, tol))?
            };
            let v = jones(&diagram)?;
            let det = v.eval_at_minus_one().unsigned_abs();
            let knot = identify(&diagram)?;
            let value = json!({
                "knot": knot.name(),
                "crossings": diagram.crossing_count(),
                "jones": v,
                "jones_pretty": v.display_with("t"),
                "determinant": det,
            });
            let text = format!(
                "{} (jones {}, determinant {det})",
                knot.name(),
                v.display_with("t")
            );
            Ok(Output { value, text })
        }

        Command::Census {
            n,
            samples,
            equilateral,
            steps,
            out,
        } => {
            let config = CensusConfig {
                n: *n,
                samples: *samples,
                seed: cli.seed,
                equilateral: *equilateral,
                crankshaft_steps: *steps,
            };
            let report = census(config, tol)?;
            let value = serde_json::to_value(&report).unwrap();
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&value).unwrap())?;
            }
            let mut text = format!(
                "n={} samples={} failures={}\n",
                report.n, report.samples, report.failures
            );
            for bucket in &report.buckets {
                text.push_str(&format!(
                    "{:10} {:12} {:8} {}\n",
                    bucket.region.clone().unwrap_or_default(),
                    bucket.invariant.clone().unwrap_or_default(),
                    bucket.knot,
                    bucket.count
                ));
            }
            Ok(Output { value, text })
        }

        Command::PathCheck { file } => {
            let text = std::fs::read_to_string(file)?;
            let frames = parse_path(&text)?;
            let path = certify_path(frames, tol);
            let value = json!({
                "frames": path.frames.len(),
                "certified": path.certified,
                "min_clearance": path.min_clearance,
                "failed_step": path.failed_step,
            });
            let text = if path.certified {
                format!(
                    "certified ({} frames, min clearance {})",
                    path.frames.len(),
                    path.min_clearance
                )
            } else {
                format!("not certified (failed at step {:?})", path.failed_step)
            };
            Ok(Output { value, text })
        }

        Command::Permutahedron { dot } => {
            let graph = permutahedron();
            if *dot {
                let text = graph.to_dot();
                Ok(Output {
                    value: json!({"dot": text}),
                    text,
                })
            } else {
                let nodes: Vec<String> = (0..graph.nodes().len())
                    .map(|i| graph.node_label(i))
                    .collect();
                let edges: Vec<[String; 2]> = graph
                    .edges()
                    .iter()
                    .map(|&(a, b)| [graph.node_label(a), graph.node_label(b)])
                    .collect();
                let value = json!({
                    "nodes": nodes,
                    "edges": edges,
                    "square_faces": graph.cycles(4).len(),
                    "hexagonal_faces": graph.cycles(6).len(),
                });
                let text = format!(
                    "24 nodes, {} edges, {} square + {} hexagonal faces",
                    graph.edges().len(),
                    graph.cycles(4).len(),
                    graph.cycles(6).len()
                );
                Ok(Output { value, text })
            }
        }
    }
}

/// Parse a path file: a JSON array whose entries are either polygon objects
/// (`{"vertices": [...]}`) or bare vertex arrays.
fn parse_path(text: &str) -> Result<Vec<Polygon>, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("path json: {e}")))?;
    let entries = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected a JSON array of polygons".into()))?;
    entries
        .iter()
        .map(|entry| {
            let vertices = if entry.is_object() {
                entry
                    .get("vertices")
                    .cloned()
                    .ok_or_else(|| Error::Parse("polygon object missing \"vertices\"".into()))?
            } else {
                entry.clone()
            };
            parse_polygon(&json!({ "vertices": vertices }).to_string())
        })
        .collect()
}
