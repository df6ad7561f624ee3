//! End-to-end checks of the binary: file formats, JSON schema, figure
//! emitters, oracle cross-checks, and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bottleneck"))
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const SQUARE: &str = "0 0\n1 0\n1 1\n0 1\n";
const K4: &str = "undirected 4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n";

#[test]
fn polygon_on_square() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "square.txt", SQUARE);
    let v = stdout_json(&run(&["polygon2d", &input]));
    assert_eq!(v["objective"], "maxmin-angle-polygon");
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert_eq!(v["witness"]["polygon"].as_array().unwrap().len(), 4);
    for key in ["objective", "value", "elements", "witness", "mode", "diagnostics"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn degeneracy_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", K4);
    let v = stdout_json(&run(&["degeneracy", &input, "--oracle"]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
    assert_eq!(v["diagnostics"]["oracle"], "agree");
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "0 0\nnot numbers\n");
    let out = run(&["polygon2d", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["polygon2d", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn infeasible_inputs_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let collinear = write(dir.path(), "line.txt", "0 0\n1 1\n2 2\n3 3\n");
    assert_eq!(run(&["polygon2d", &collinear]).status.code(), Some(3));
    let dag = write(dir.path(), "dag.txt", "directed 3 2\n0 1 1\n1 2 1\n");
    assert_eq!(run(&["cycle", "--kind", "directed", &dag]).status.code(), Some(3));
}

#[test]
fn svg_has_one_cycle_and_all_points() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq5.txt", "0 0\n1 0\n1 1\n0 1\n0.5 0.5\n");
    let out = run(&["polygon2d", &input, "--format", "svg"]);
    assert!(out.status.success());
    let svg = String::from_utf8_lossy(&out.stdout);
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(svg.matches("<circle").count(), 5);
}

#[test]
fn obj_lists_hull_vertices_and_faces() {
    let dir = tempfile::tempdir().unwrap();
    let tetra = write(dir.path(), "tetra.txt", "1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n");
    let out = run(&["polyhedron3d", &tetra, "--format", "obj"]);
    assert!(out.status.success());
    let obj = String::from_utf8_lossy(&out.stdout);
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 4);
}

#[test]
fn curve_oracle_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let gen_out = dir.path().join("pts.txt");
    let out = run(&[
        "gen",
        "--what",
        "points3d",
        "--n",
        "5",
        "--seed",
        "11",
        "--out",
        gen_out.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    for mode in [&["curve3d"][..], &["curve3d", "--allow-repeated-segments"][..]] {
        let mut args: Vec<&str> = mode.to_vec();
        let path = gen_out.to_str().unwrap();
        args.push(path);
        args.push("--oracle");
        let v = stdout_json(&run(&args));
        assert_eq!(v["diagnostics"]["agreement"], true);
    }
}

#[test]
fn generated_graphs_round_trip_through_solvers() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["undirected", "directed", "mixed", "polar"] {
        let path = dir.path().join(format!("{kind}.txt"));
        let out = run(&[
            "gen",
            "--what",
            kind,
            "--n",
            "6",
            "--m",
            "12",
            "--seed",
            "5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let out = run(&["cycle", "--kind", kind, path.to_str().unwrap(), "--oracle"]);
        let code = out.status.code().unwrap();
        assert!(
            code == 0 || code == 3,
            "{kind}: unexpected exit {code}, stderr {}",
            String::from_utf8_lossy(&out.stderr)
        );
        if code == 0 {
            let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(v["diagnostics"]["oracle"], "agree", "{kind}");
        }
    }
}

#[test]
fn minmax_objective_runs() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.txt", "undirected 3 3\n0 1 1.5\n1 2 2.5\n2 0 3.5\n");
    let v = stdout_json(&run(&["cycle", "--kind", "undirected", "--objective", "minmax", &tri]));
    assert_eq!(v["objective"], "minmax-cycle");
    assert_eq!(v["value"], 3.5);
}

#[test]
fn degrees_flag_changes_text_only() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "square.txt", SQUARE);
    let out = run(&["polygon2d", &input, "--format", "text", "--degrees"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("90.000000 deg"));
    // JSON stays in radians
    let v = stdout_json(&run(&["polygon2d", &input, "--degrees"]));
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
}

#[test]
fn include_straight_splices_boundary_points() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq6.txt", "0 0\n1 0\n1 1\n0 1\n0.5 0\n");
    let v = stdout_json(&run(&["polygon2d", &input]));
    assert_eq!(v["witness"]["polygon"].as_array().unwrap().len(), 4);
    let v = stdout_json(&run(&["polygon2d", &input, "--include-straight"]));
    assert_eq!(v["witness"]["polygon"].as_array().unwrap().len(), 5);
}

#[test]
fn output_file_flag_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "square.txt", SQUARE);
    let target = dir.path().join("result.json");
    let out = run(&["polygon2d", &input, "--output", target.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["objective"], "maxmin-angle-polygon");
}
