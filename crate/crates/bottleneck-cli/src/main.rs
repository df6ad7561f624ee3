//! Command-line surface for the bottleneck solvers.
//!
//! Exit codes: 0 success, 2 parse/input error, 3 infeasible instance
//! (no polygon, polyhedron, cycle, or curve), 4 internal assertion or
//! oracle disagreement.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bottleneck::curve::{maxmin_angle_closed_curve, CurveError, CurveMode};
use bottleneck::degeneracy::{degeneracy, DegreeInstance, SimpleGraph};
use bottleneck::graph::{
    bottleneck_cycle_directed_with_stats, bottleneck_cycle_mixed, bottleneck_cycle_undirected,
    CycleError, MixedEdgeRef,
};
use bottleneck::io::{parse_graph, parse_points2, parse_points3, write_graph, ParsedGraph};
use bottleneck::oracle;
use bottleneck::polar::{bottleneck_regular_cycle, validate_regular_cycle};
use bottleneck::polygon::{maxmin_angle_polygon, polygon_with_straight_points};
use bottleneck::polyhedron::maxmin_solid_angle_polyhedron;
use bottleneck::quality::Direction;
use bottleneck::{gen, Point2d, Point3d};

#[derive(Parser)]
#[command(name = "bottleneck", about = "Bottleneck subset and cycle solvers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Text,
    Svg,
    Obj,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Undirected,
    Directed,
    Mixed,
    Polar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    Maxmin,
    Minmax,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenWhat {
    Points2d,
    Points3d,
    Undirected,
    Directed,
    Mixed,
    Polar,
}

#[derive(Args)]
struct CommonArgs {
    /// Input file path
    input: PathBuf,
    /// Output file; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Display angles in degrees (text format only; JSON stays in radians)
    #[arg(long)]
    degrees: bool,
    /// Cross-check against the brute-force reference and report agreement
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Max-min-angle polygon in a planar point set
    Polygon2d {
        #[command(flatten)]
        common: CommonArgs,
        /// Splice straight boundary points into the emitted polygon
        #[arg(long)]
        include_straight: bool,
    },
    /// Max-min-solid-angle convex polyhedron in a 3d point set
    Polyhedron3d {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Max-min-angle closed polygonal curve through 3d points
    Curve3d {
        #[command(flatten)]
        common: CommonArgs,
        /// Allow the curve to traverse a line segment twice
        #[arg(long)]
        allow_repeated_segments: bool,
        /// Raise the input size guard
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Degeneracy and core of an undirected simple graph
    Degeneracy {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Bottleneck cycle in a graph file
    Cycle {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "maxmin")]
        objective: Objective,
    },
    /// Generate a random instance file
    Gen {
        #[arg(long, value_enum)]
        what: GenWhat,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum RunError {
    Input(String),
    Infeasible(String),
    Internal(String),
}

impl RunError {
    fn report(&self) -> (u8, &str) {
        match self {
            RunError::Input(m) => (2, m),
            RunError::Infeasible(m) => (3, m),
            RunError::Internal(m) => (4, m),
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (code, msg) = e.report();
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))
}

fn emit(common: &CommonArgs, content: &str) -> Result<(), RunError> {
    match &common.output {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| RunError::Input(format!("{}: {e}", path.display()))),
    }
}

fn angle_display(radians: f64, degrees: bool) -> String {
    if degrees {
        format!("{:.6} deg", radians.to_degrees())
    } else {
        format!("{radians:.9} rad")
    }
}

fn result_json(
    objective: &str,
    value: Value,
    elements: Value,
    witness: Value,
    mode: Value,
    diagnostics: Value,
) -> String {
    serde_json::to_string_pretty(&json!({
        "objective": objective,
        "value": value,
        "elements": elements,
        "witness": witness,
        "mode": mode,
        "diagnostics": diagnostics,
    }))
    .expect("serializable")
}

fn run(command: Command) -> Result<(), RunError> {
    match command {
        Command::Polygon2d { common, include_straight } => polygon_cmd(common, include_straight),
        Command::Polyhedron3d { common } => polyhedron_cmd(common),
        Command::Curve3d { common, allow_repeated_segments, max_points } => {
            curve_cmd(common, allow_repeated_segments, max_points)
        }
        Command::Degeneracy { common } => degeneracy_cmd(common),
        Command::Cycle { common, kind, objective } => cycle_cmd(common, kind, objective),
        Command::Gen { what, n, m, seed, out } => gen_cmd(what, n, m, seed, out),
    }
}

fn polygon_cmd(common: CommonArgs, include_straight: bool) -> Result<(), RunError> {
    if matches!(common.format, Format::Obj) {
        return Err(RunError::Input("obj output applies to 3d hulls only".into()));
    }
    let text = read_input(&common.input)?;
    let points: Vec<Point2d> =
        parse_points2(&text).map_err(|e| RunError::Input(e.to_string()))?;
    let r = maxmin_angle_polygon(&points).map_err(|e| RunError::Infeasible(e.to_string()))?;

    let emitted_polygon = if include_straight {
        let pts: Vec<Point2d> = {
            let mut dedup: Vec<Point2d> = Vec::new();
            for p in &points {
                if !dedup.contains(p) {
                    dedup.push(*p);
                }
            }
            dedup
        };
        polygon_with_straight_points(&pts, &r.polygon, &r.subset)
    } else {
        r.polygon.clone()
    };

    let mut diagnostics = json!({
        "dropped_duplicates": r.dedup.dropped,
    });
    if common.oracle {
        let verdict = match oracle::polygon_subset_oracle(&points) {
            Err(e) => format!("skipped ({e})"),
            Ok((theta, _)) if (theta - r.theta).abs() <= 1e-9 => "agree".to_string(),
            Ok((theta, _)) => {
                return Err(RunError::Internal(format!(
                    "oracle disagreement: {theta} vs {}",
                    r.theta
                )))
            }
        };
        diagnostics["oracle"] = json!(verdict);
        if verdict_is_agreement(&diagnostics) {
            diagnostics["agreement"] = json!(true);
        }
    }

    match common.format {
        Format::Json => {
            let out = result_json(
                "maxmin-angle-polygon",
                json!(r.theta),
                json!(r.subset),
                json!({ "polygon": emitted_polygon, "index_map": r.dedup.index_map }),
                json!("maxmin"),
                diagnostics,
            );
            emit(&common, &out)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sharpest angle: {}", angle_display(r.theta, common.degrees)).unwrap();
            writeln!(s, "polygon: {emitted_polygon:?}").unwrap();
            writeln!(s, "bottleneck subset: {:?}", r.subset).unwrap();
            emit(&common, s.trim_end())
        }
        Format::Svg => {
            let pts: Vec<Point2d> = {
                let mut dedup: Vec<Point2d> = Vec::new();
                for p in &points {
                    if !dedup.contains(p) {
                        dedup.push(*p);
                    }
                }
                dedup
            };
            emit(&common, &polygon_svg(&pts, &emitted_polygon))
        }
        Format::Obj => unreachable!(),
    }
}

fn verdict_is_agreement(diag: &Value) -> bool {
    diag.get("oracle").and_then(Value::as_str) == Some("agree")
}

fn polygon_svg(points: &[Point2d], cycle: &[usize]) -> String {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in points {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    let pad = 0.05 * ((xmax - xmin).max(ymax - ymin).max(1e-9));
    let (x0, y0) = (xmin - pad, ymin - pad);
    let (w, h) = (xmax - xmin + 2.0 * pad, ymax - ymin + 2.0 * pad);
    let r = 0.008 * w.max(h);
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">"
    )
    .unwrap();
    let path: Vec<String> =
        cycle.iter().map(|&i| format!("{},{}", points[i].x, points[i].y)).collect();
    writeln!(
        s,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{}\"/>",
        path.join(" "),
        r * 0.5
    )
    .unwrap();
    for p in points {
        writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"#2c3e50\"/>", p.x, p.y)
            .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

fn polyhedron_cmd(common: CommonArgs) -> Result<(), RunError> {
    if matches!(common.format, Format::Svg) {
        return Err(RunError::Input("svg output applies to planar results only".into()));
    }
    let text = read_input(&common.input)?;
    let points: Vec<Point3d> =
        parse_points3(&text).map_err(|e| RunError::Input(e.to_string()))?;
    let r =
        maxmin_solid_angle_polyhedron(&points).map_err(|e| RunError::Infeasible(e.to_string()))?;

    let mut diagnostics = json!({ "dropped_duplicates": r.dedup.dropped });
    if common.oracle {
        let verdict = match oracle::polyhedron_subset_oracle(&points) {
            Err(e) => format!("skipped ({e})"),
            Ok((theta, _)) if (theta - r.theta).abs() <= 1e-9 => "agree".into(),
            Ok((theta, _)) => {
                return Err(RunError::Internal(format!(
                    "oracle disagreement: {theta} vs {}",
                    r.theta
                )))
            }
        };
        diagnostics["oracle"] = json!(verdict);
    }

    match common.format {
        Format::Json => {
            let out = result_json(
                "maxmin-solid-angle-polyhedron",
                json!(r.theta),
                json!(r.subset),
                json!({
                    "hull_vertices": r.hull_vertices,
                    "facets": r.facets,
                    "index_map": r.dedup.index_map,
                }),
                json!("maxmin"),
                diagnostics,
            );
            emit(&common, &out)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sharpest solid angle: {:.9} sr", r.theta).unwrap();
            writeln!(s, "hull vertices: {:?}", r.hull_vertices).unwrap();
            writeln!(s, "bottleneck subset: {:?}", r.subset).unwrap();
            emit(&common, s.trim_end())
        }
        Format::Obj => {
            // vertices renumbered densely; indices in faces are 1-based
            let mut s = String::new();
            let mut dedup: Vec<Point3d> = Vec::new();
            for p in &points {
                if !dedup.contains(p) {
                    dedup.push(*p);
                }
            }
            let mut renumber = vec![0usize; dedup.len()];
            for (k, &v) in r.hull_vertices.iter().enumerate() {
                renumber[v] = k + 1;
                let p = dedup[v];
                writeln!(s, "v {} {} {}", p.x, p.y, p.z).unwrap();
            }
            for f in &r.facets {
                writeln!(s, "f {} {} {}", renumber[f[0]], renumber[f[1]], renumber[f[2]])
                    .unwrap();
            }
            emit(&common, s.trim_end())
        }
        Format::Svg => unreachable!(),
    }
}

fn curve_cmd(
    common: CommonArgs,
    allow_repeated_segments: bool,
    max_points: Option<usize>,
) -> Result<(), RunError> {
    if !matches!(common.format, Format::Json | Format::Text) {
        return Err(RunError::Input("curve results support json or text output".into()));
    }
    let text = read_input(&common.input)?;
    let points: Vec<Point3d> =
        parse_points3(&text).map_err(|e| RunError::Input(e.to_string()))?;
    let r = maxmin_angle_closed_curve(&points, allow_repeated_segments, max_points).map_err(
        |e| match e {
            CurveError::NoCurve => RunError::Infeasible(e.to_string()),
            CurveError::Internal(m) => RunError::Internal(m),
            other => RunError::Input(other.to_string()),
        },
    )?;

    let mode_name = match r.mode {
        CurveMode::RepeatedSegmentsAllowed => "repeated-segments-allowed",
        CurveMode::RepeatedPointsOnly => "repeated-points-only",
    };
    let mut diagnostics = json!({ "dropped_duplicates": r.dedup.dropped });
    if common.oracle {
        let mode = r.mode;
        let verdict = match oracle::curve_oracle(&points, mode) {
            Err(e) => format!("skipped ({e})"),
            Ok(None) => {
                return Err(RunError::Internal("oracle found no curve".into()));
            }
            Ok(Some(o)) if (o.theta - r.theta).abs() <= 1e-9 => "agree".into(),
            Ok(Some(o)) => {
                return Err(RunError::Internal(format!(
                    "oracle disagreement: {} vs {}",
                    o.theta, r.theta
                )))
            }
        };
        diagnostics["oracle"] = json!(verdict);
        if diagnostics["oracle"] == json!("agree") {
            diagnostics["agreement"] = json!(true);
        }
    }

    match common.format {
        Format::Json => {
            let out = result_json(
                "maxmin-angle-closed-curve",
                json!(r.theta),
                json!(r.curve),
                json!({ "turn_angles": r.angles, "index_map": r.dedup.index_map }),
                json!(mode_name),
                diagnostics,
            );
            emit(&common, &out)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sharpest angle: {}", angle_display(r.theta, common.degrees)).unwrap();
            writeln!(s, "curve: {:?}", r.curve).unwrap();
            writeln!(s, "mode: {mode_name}").unwrap();
            if let Some(Value::String(v)) = diagnostics.get("oracle") {
                writeln!(s, "oracle: {v}").unwrap();
                if v == "agree" {
                    writeln!(s, "agreement: true").unwrap();
                }
            }
            emit(&common, s.trim_end())
        }
        _ => unreachable!(),
    }
}

fn degeneracy_cmd(common: CommonArgs) -> Result<(), RunError> {
    if !matches!(common.format, Format::Json | Format::Text) {
        return Err(RunError::Input("degeneracy supports json or text output".into()));
    }
    let text = read_input(&common.input)?;
    let g = match parse_graph(&text).map_err(|e| RunError::Input(e.to_string()))? {
        ParsedGraph::Undirected(g) => {
            let edges: Vec<(u32, u32)> = g.edges.iter().map(|e| (e.u, e.v)).collect();
            SimpleGraph::from_edges(g.vertex_count(), &edges)
                .map_err(|e| RunError::Input(e.to_string()))?
        }
        other => {
            return Err(RunError::Input(format!(
                "degeneracy expects an undirected graph, found {}",
                other.kind()
            )))
        }
    };
    let r = degeneracy(&g);

    let mut diagnostics = json!({ "bucket_operations": r.operations });
    if common.oracle {
        let inst = DegreeInstance::new(&g);
        let verdict = match oracle::bottleneck_subset_oracle(&inst) {
            Err(e) => format!("skipped ({e})"),
            Ok((theta, core)) => {
                if theta == bottleneck::Quality::Finite(r.degeneracy as i64) && core == r.core {
                    "agree".into()
                } else {
                    return Err(RunError::Internal("oracle disagreement".into()));
                }
            }
        };
        diagnostics["oracle"] = json!(verdict);
    }

    match common.format {
        Format::Json => {
            let out = result_json(
                "degeneracy",
                json!(r.degeneracy),
                json!(r.core),
                json!({ "ordering": r.ordering, "removal_degrees": r.removal_degrees }),
                json!("maxmin"),
                diagnostics,
            );
            emit(&common, &out)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "degeneracy: {}", r.degeneracy).unwrap();
            writeln!(s, "core: {:?}", r.core).unwrap();
            writeln!(s, "ordering: {:?}", r.ordering).unwrap();
            emit(&common, s.trim_end())
        }
        _ => unreachable!(),
    }
}

fn cycle_cmd(common: CommonArgs, kind: GraphKind, objective: Objective) -> Result<(), RunError> {
    if !matches!(common.format, Format::Json | Format::Text) {
        return Err(RunError::Input("cycle results support json or text output".into()));
    }
    let dir = match objective {
        Objective::Maxmin => Direction::MaxMin,
        Objective::Minmax => Direction::MinMax,
    };
    let text = read_input(&common.input)?;
    let parsed = parse_graph(&text).map_err(|e| RunError::Input(e.to_string()))?;

    let map_err = |e: CycleError| match e {
        CycleError::NoCycle => RunError::Infeasible(e.to_string()),
        CycleError::Internal(m) => RunError::Internal(m),
    };
    let objective_name = match dir {
        Direction::MaxMin => "maxmin-cycle",
        Direction::MinMax => "minmax-cycle",
    };

    let (value, elements, witness, oracle_verdict): (f64, Value, Value, Option<String>) =
        match (&parsed, kind) {
            (ParsedGraph::Undirected(g), GraphKind::Undirected) => {
                let r = bottleneck_cycle_undirected(g, dir).map_err(map_err)?;
                let verdict = if common.oracle {
                    Some(match oracle::undirected_cycle_oracle(g, dir) {
                        Err(e) => format!("skipped ({e})"),
                        Ok(Some((v, _))) if v == r.value => "agree".into(),
                        Ok(found) => {
                            return Err(RunError::Internal(format!(
                                "oracle disagreement: {found:?} vs {}",
                                r.value
                            )))
                        }
                    })
                } else {
                    None
                };
                (r.value, json!(r.edges), json!({ "edges": r.edges }), verdict)
            }
            (ParsedGraph::Directed(g), GraphKind::Directed) => {
                let (r, stats) =
                    bottleneck_cycle_directed_with_stats(g, dir).map_err(map_err)?;
                let verdict = if common.oracle {
                    Some(match oracle::directed_cycle_oracle(g, dir) {
                        Err(e) => format!("skipped ({e})"),
                        Ok(Some((v, _))) if v == r.value => "agree".into(),
                        Ok(found) => {
                            return Err(RunError::Internal(format!(
                                "oracle disagreement: {found:?} vs {}",
                                r.value
                            )))
                        }
                    })
                } else {
                    None
                };
                (
                    r.value,
                    json!(r.edges),
                    json!({ "edges": r.edges, "refinement_rounds": stats.rounds }),
                    verdict,
                )
            }
            (ParsedGraph::Mixed(g), GraphKind::Mixed) => {
                let r = bottleneck_cycle_mixed(g, dir).map_err(map_err)?;
                let steps: Vec<Value> = r
                    .steps
                    .iter()
                    .map(|s| {
                        let (kind, id) = match s.edge {
                            MixedEdgeRef::Directed(i) => ("directed", i),
                            MixedEdgeRef::Undirected(i) => ("undirected", i),
                        };
                        json!({ "from": s.from, "to": s.to, "edge_kind": kind, "edge": id })
                    })
                    .collect();
                let verdict = if common.oracle {
                    Some(match oracle::mixed_cycle_oracle(g, dir) {
                        Err(e) => format!("skipped ({e})"),
                        Ok(Some((v, _))) if v == r.value => "agree".into(),
                        Ok(found) => {
                            return Err(RunError::Internal(format!(
                                "oracle disagreement: {found:?} vs {}",
                                r.value
                            )))
                        }
                    })
                } else {
                    None
                };
                (r.value, json!(steps), json!({ "steps": steps }), verdict)
            }
            (ParsedGraph::Polar(g), GraphKind::Polar) => {
                let r = bottleneck_regular_cycle(g, dir).map_err(map_err)?;
                let (_, steps) = validate_regular_cycle(g, &r.edges, dir)
                    .map_err(RunError::Internal)?;
                let poles: Vec<Value> = steps
                    .iter()
                    .map(|&(v, entry, exit)| {
                        json!({ "vertex": v, "entry_pole": entry, "exit_pole": exit })
                    })
                    .collect();
                let verdict = if common.oracle {
                    Some(match oracle::regular_cycle_oracle(g, dir) {
                        Err(e) => format!("skipped ({e})"),
                        Ok(Some((v, _))) if v == r.value => "agree".into(),
                        Ok(found) => {
                            return Err(RunError::Internal(format!(
                                "oracle disagreement: {found:?} vs {}",
                                r.value
                            )))
                        }
                    })
                } else {
                    None
                };
                (r.value, json!(r.edges), json!({ "edges": r.edges, "poles": poles }), verdict)
            }
            (parsed, _) => {
                return Err(RunError::Input(format!(
                    "graph file is {}, but --kind asked for something else",
                    parsed.kind()
                )))
            }
        };

    let mut diagnostics = json!({});
    if let Some(v) = oracle_verdict {
        diagnostics["oracle"] = json!(v);
    }
    match common.format {
        Format::Json => {
            let out = result_json(
                objective_name,
                json!(value),
                elements,
                witness,
                json!(parsed.kind()),
                diagnostics,
            );
            emit(&common, &out)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "bottleneck value: {value}").unwrap();
            writeln!(s, "witness: {witness}").unwrap();
            emit(&common, s.trim_end())
        }
        _ => unreachable!(),
    }
}

fn gen_cmd(
    what: GenWhat,
    n: usize,
    m: usize,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), RunError> {
    let content = match what {
        GenWhat::Points2d => bottleneck::io::write_points2(&gen::random_points2(n, seed)),
        GenWhat::Points3d => bottleneck::io::write_points3(&gen::random_points3(n, seed)),
        GenWhat::Undirected => {
            write_graph(&ParsedGraph::Undirected(gen::random_multigraph(n, m, None, seed)))
        }
        GenWhat::Directed => {
            write_graph(&ParsedGraph::Directed(gen::random_digraph(n, m, None, seed)))
        }
        GenWhat::Mixed => write_graph(&ParsedGraph::Mixed(gen::random_mixed(n, m, seed))),
        GenWhat::Polar => write_graph(&ParsedGraph::Polar(gen::random_polar(n, m, seed))),
    };
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(&path, content)
            .map_err(|e| RunError::Input(format!("{}: {e}", path.display()))),
    }
}
