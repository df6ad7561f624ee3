//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Tolerances are pinned in the assertions.

use std::time::Instant;

use bottleneck::antimatroid::{check_antimatroid, enumerate_removal_sequences, SequenceAlgorithm};
use bottleneck::curve::{maxmin_angle_closed_curve, CurveMode};
use bottleneck::degeneracy::{degeneracy, DegreeInstance, SimpleGraph};
use bottleneck::geom::{solid_angle_triangle, Point3};
use bottleneck::graph::{
    bottleneck_cycle_directed_sorted, bottleneck_cycle_directed_with_stats,
    bottleneck_cycle_mixed, sorted_edge_order, validate_directed_cycle, CycleError, MixedGraph,
};
use bottleneck::greedy::{
    decremental_greedy, known_beta, HighestEligible, Instance, LowestIdEligible, MinQuality,
    RemovalPolicy, SeededEligible,
};
use bottleneck::oracle;
use bottleneck::polar::{bottleneck_regular_cycle, expand_degree3, PolarGraph};
use bottleneck::polygon::{maxmin_angle_polygon, min_polygon_angle, Polygon2dInstance};
use bottleneck::polyhedron::{maxmin_solid_angle_polyhedron, Polyhedron3dInstance};
use bottleneck::quality::{Direction, Quality};
use bottleneck::table::TableInstance;
use bottleneck::{gen, Point2d};

fn pass(name: &str) {
    println!("acceptance {name}: PASS");
}

fn permuted_graph(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if (v as usize) > u {
                edges.push((perm[u] as u32, perm[v as usize] as u32));
            }
        }
    }
    SimpleGraph::from_edges(g.vertex_count(), &edges).unwrap()
}

fn run_policies<I: Instance + Clone>(inst: &I, seed: u64) -> Vec<(Quality<I::Value>, Vec<usize>)> {
    let mut outcomes = Vec::new();
    let policies: Vec<Box<dyn RemovalPolicy<I>>> = vec![
        Box::new(MinQuality),
        Box::new(LowestIdEligible),
        Box::new(HighestEligible),
        Box::new(SeededEligible::new(seed)),
    ];
    for mut policy in policies {
        let out = decremental_greedy(&mut inst.clone(), policy.as_mut()).unwrap();
        outcomes.push((out.theta, out.subset));
    }
    outcomes
}

#[test]
fn criterion_01_framework_soundness() {
    let mut checked = 0;
    // arbitrary monotone quality tables
    for seed in 0..120u64 {
        let n = 2 + (seed as usize % 5);
        let inst = TableInstance::random_monotone(n, seed);
        let (theta, subset) = oracle::bottleneck_subset_oracle(&inst).unwrap();
        for pseed in 0..3u64 {
            let perm = gen::permutation(n, seed * 31 + pseed);
            let permuted = inst.permuted(&perm);
            let expect: Vec<usize> = {
                let mut v: Vec<usize> = subset.iter().map(|&x| perm[x]).collect();
                v.sort_unstable();
                v
            };
            for (t, s) in run_policies(&permuted, seed ^ pseed) {
                assert_eq!(t, theta, "table seed {seed} perm {pseed}");
                assert_eq!(s, expect, "table seed {seed} perm {pseed}");
            }
        }
        checked += 1;
    }
    // induced-degree instances
    for seed in 0..80u64 {
        let n = 3 + (seed as usize % 4);
        let g = gen::random_simple_graph(n, 2 * n, seed);
        let inst = DegreeInstance::new(&g);
        let (theta, subset) = oracle::bottleneck_subset_oracle(&inst).unwrap();
        for pseed in 0..3u64 {
            let perm = gen::permutation(n, seed * 17 + pseed);
            let pg = permuted_graph(&g, &perm);
            let pinst = DegreeInstance::new(&pg);
            let expect: Vec<usize> = {
                let mut v: Vec<usize> = subset.iter().map(|&x| perm[x]).collect();
                v.sort_unstable();
                v
            };
            for (t, s) in run_policies(&pinst, seed ^ pseed) {
                assert_eq!(t, theta, "graph seed {seed} perm {pseed}");
                assert_eq!(s, expect, "graph seed {seed} perm {pseed}");
            }
        }
        checked += 1;
    }
    assert!(checked >= 200);
    pass("1 (framework soundness, 200 instances x 4 policies x 3 relabelings)");
}

#[test]
fn criterion_02_antimatroid_verification() {
    for seed in 0..100u64 {
        let n = 2 + (seed as usize % 4);
        let inst = TableInstance::random_monotone(n, seed + 7_000);
        let greedy_seqs = enumerate_removal_sequences(&inst, SequenceAlgorithm::Greedy).unwrap();
        let report = check_antimatroid(n, &greedy_seqs);
        assert!(report.ok, "seed {seed} greedy: {:?}", report.counterexample);

        let opt = decremental_greedy(&mut inst.clone(), &mut MinQuality).unwrap();
        let kb_seqs =
            enumerate_removal_sequences(&inst, SequenceAlgorithm::KnownBeta(opt.theta)).unwrap();
        let report = check_antimatroid(n, &kb_seqs);
        assert!(report.ok, "seed {seed} known-beta: {:?}", report.counterexample);
        for seq in &kb_seqs {
            let survivors: Vec<usize> = (0..n).filter(|x| !seq.contains(x)).collect();
            assert_eq!(survivors, opt.subset, "seed {seed}: sequences must end at the optimum");
        }
    }
    pass("2 (antimatroid axioms for both algorithms, 100 instances)");
}

#[test]
fn criterion_03_planar_polygons() {
    let square =
        vec![Point2d::new(0.0, 0.0), Point2d::new(1.0, 0.0), Point2d::new(1.0, 1.0), Point2d::new(0.0, 1.0)];
    let r = maxmin_angle_polygon(&square).unwrap();
    assert!((r.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    let mut with_center = square.clone();
    with_center.push(Point2d::new(0.5, 0.5));
    let r = maxmin_angle_polygon(&with_center).unwrap();
    assert!((r.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert_eq!(r.subset, vec![0, 1, 2, 3, 4]);

    for seed in 0..300u64 {
        let n = 3 + (seed as usize % 8);
        let pts = gen::random_points2(n, seed + 40_000);
        let r = maxmin_angle_polygon(&pts).unwrap();
        let (theta, subset) = oracle::polygon_subset_oracle(&pts).unwrap();
        assert!((r.theta - theta).abs() <= 1e-9, "seed {seed}: {} vs {theta}", r.theta);
        assert_eq!(r.subset, subset, "seed {seed}");
        let again = min_polygon_angle(&pts, &r.polygon);
        assert!((r.theta - again).abs() <= 1e-9, "seed {seed}: recomputed {again}");
    }

    let big = gen::random_points2(5_000, 99);
    let clock = Instant::now();
    let r = maxmin_angle_polygon(&big).unwrap();
    let elapsed = clock.elapsed();
    assert!(r.theta > 0.0);
    assert!(elapsed.as_secs_f64() < 10.0, "n=5000 took {elapsed:?}");
    pass(&format!("3 (300 planar sets vs subset oracle; n=5000 smoke in {elapsed:?})"));
}

#[test]
fn criterion_04_polyhedra() {
    let tetra = vec![
        Point3::new(1.0, 1.0, 1.0),
        Point3::new(1.0, -1.0, -1.0),
        Point3::new(-1.0, 1.0, -1.0),
        Point3::new(-1.0, -1.0, 1.0),
    ];
    let r = maxmin_solid_angle_polyhedron(&tetra).unwrap();
    let expect = (23.0f64 / 27.0).acos();
    assert!((r.theta - expect).abs() <= 1e-9);
    let vos = solid_angle_triangle(
        tetra[1].sub(tetra[0]),
        tetra[2].sub(tetra[0]),
        tetra[3].sub(tetra[0]),
    )
    .abs();
    assert!((r.theta - vos).abs() <= 1e-9);

    let mut cube = Vec::new();
    for z in [0.0, 1.0] {
        for y in [0.0, 1.0] {
            for x in [0.0, 1.0] {
                cube.push(Point3::new(x, y, z));
            }
        }
    }
    let r = maxmin_solid_angle_polyhedron(&cube).unwrap();
    assert!((r.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-12);

    for seed in 0..100u64 {
        let n = 4 + (seed as usize % 5);
        let pts = gen::random_points3(n, seed + 50_000);
        let r = maxmin_solid_angle_polyhedron(&pts).unwrap();
        let (theta, subset) = oracle::polyhedron_subset_oracle(&pts).unwrap();
        assert!((r.theta - theta).abs() <= 1e-9, "seed {seed}: {} vs {theta}", r.theta);
        assert_eq!(r.subset, subset, "seed {seed}");
    }

    let big = gen::random_points3(500, 77);
    let clock = Instant::now();
    let r = maxmin_solid_angle_polyhedron(&big).unwrap();
    let elapsed = clock.elapsed();
    assert!(r.theta > 0.0);
    assert!(elapsed.as_secs_f64() < 30.0, "n=500 took {elapsed:?}");
    pass(&format!("4 (100 spatial sets vs subset oracle; n=500 smoke in {elapsed:?})"));
}

#[test]
fn criterion_05_directed_cycles() {
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 7);
        let m = 1 + (seed as usize % 14);
        let distinct = if seed % 4 == 0 { Some(3) } else { None };
        let g = gen::random_digraph(n, m, distinct, seed + 60_000);
        for dir in [Direction::MaxMin, Direction::MinMax] {
            let by_oracle = oracle::directed_cycle_oracle(&g, dir).unwrap();
            let sorted = bottleneck_cycle_directed_sorted(&g, &sorted_edge_order(&g, dir), dir);
            let driver = bottleneck_cycle_directed_with_stats(&g, dir);
            match by_oracle {
                None => {
                    assert!(matches!(sorted, Err(CycleError::NoCycle)), "seed {seed}");
                    assert!(matches!(driver, Err(CycleError::NoCycle)), "seed {seed}");
                }
                Some((value, _)) => {
                    let s = sorted.unwrap();
                    let (d, _) = driver.unwrap();
                    assert_eq!(s.value, value, "seed {seed} sorted");
                    assert_eq!(d.value, value, "seed {seed} driver");
                    assert_eq!(validate_directed_cycle(&g, &s.edges, dir).unwrap(), value);
                    assert_eq!(validate_directed_cycle(&g, &d.edges, dir).unwrap(), value);
                }
            }
        }
    }

    for seed in 0..100u64 {
        let n = 50 + (seed as usize % 500);
        let m = 1_000 + (seed as usize * 90) % 9_000;
        let g = gen::random_digraph(n, m, None, seed + 61_000);
        let sorted =
            bottleneck_cycle_directed_sorted(&g, &sorted_edge_order(&g, Direction::MaxMin), Direction::MaxMin);
        let driver = bottleneck_cycle_directed_with_stats(&g, Direction::MaxMin);
        match (sorted, driver) {
            (Ok(a), Ok((b, _))) => assert_eq!(a.value, b.value, "seed {seed}"),
            (Err(CycleError::NoCycle), Err(CycleError::NoCycle)) => {}
            (a, b) => panic!("seed {seed}: {a:?} vs {b:?}"),
        }
    }

    let g = gen::random_digraph(100_000, 1_000_000, None, 4242);
    let clock = Instant::now();
    let (r, stats) = bottleneck_cycle_directed_with_stats(&g, Direction::MaxMin).unwrap();
    let elapsed = clock.elapsed();
    assert!(r.value > 0.0);
    assert!(elapsed.as_secs_f64() < 5.0, "m=1e6 took {elapsed:?}");
    assert!(stats.rounds.len() <= 5, "rounds {:?}", stats.rounds);
    let alphas: Vec<u64> = stats.rounds.iter().map(|&(a, _)| a).collect();
    assert_eq!(alphas, vec![1, 2, 4, 16, 65536]);
    for &(alpha, len) in &stats.rounds {
        assert!(len as u64 <= 1_000_000 / alpha);
    }
    pass(&format!(
        "5 (directed cycles vs oracle; driver matches sorted greedy; m=1e6 smoke in {elapsed:?}, alphas {alphas:?})"
    ));
}

#[test]
fn criterion_06_mixed_cycles() {
    // a single undirected edge only closes by a u-turn
    let mut lone = MixedGraph::new(2);
    lone.add_undirected(0, 1, 1.0);
    assert!(matches!(
        bottleneck_cycle_mixed(&lone, Direction::MaxMin),
        Err(CycleError::NoCycle)
    ));
    // undirected edge plus a directed return path closes
    let mut tri = MixedGraph::new(3);
    tri.add_undirected(0, 1, 5.0);
    tri.add_directed(1, 2, 7.0);
    tri.add_directed(2, 0, 9.0);
    let r = bottleneck_cycle_mixed(&tri, Direction::MaxMin).unwrap();
    assert_eq!(r.value, 5.0);
    assert_eq!(r.steps.len(), 3);

    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 6);
        let m = 1 + (seed as usize % 12);
        let g = gen::random_mixed(n, m, seed + 70_000);
        for dir in [Direction::MaxMin, Direction::MinMax] {
            let by_oracle = oracle::mixed_cycle_oracle(&g, dir).unwrap();
            let solved = bottleneck_cycle_mixed(&g, dir);
            match (by_oracle, solved) {
                (None, Err(CycleError::NoCycle)) => {}
                (Some((value, _)), Ok(r)) => {
                    assert_eq!(r.value, value, "seed {seed} {dir:?}");
                    bottleneck::graph::validate_mixed_cycle(&g, &r).unwrap();
                }
                (o, s) => panic!("seed {seed} {dir:?}: oracle {o:?} vs {s:?}"),
            }
        }
    }
    pass("6 (mixed cycles vs oracle, 200 instances; u-turn fixtures)");
}

#[test]
fn criterion_07a_polar_cycles_match_oracle() {
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 8);
        let m = 1 + (seed as usize % 16);
        let g = gen::random_polar(n, m, seed + 80_000);
        for dir in [Direction::MaxMin, Direction::MinMax] {
            let by_oracle = oracle::regular_cycle_oracle(&g, dir).unwrap();
            let solved = bottleneck_regular_cycle(&g, dir);
            match (by_oracle, solved) {
                (None, Err(CycleError::NoCycle)) => {}
                (Some((value, _)), Ok(r)) => assert_eq!(r.value, value, "seed {seed} {dir:?}"),
                (o, s) => panic!("seed {seed} {dir:?}: oracle {o:?} vs {s:?}"),
            }
        }
    }
    pass("7a (regular cycles vs oracle, 200 polar graphs)");
}

#[test]
fn criterion_07b_expansion_counts() {
    // hub of total degree six, three edges per pole
    let mut p = PolarGraph::new(7);
    for leaf in 1..=3u32 {
        p.add_edge(0, 0, leaf, 0, leaf as f64);
    }
    for leaf in 4..=6u32 {
        p.add_edge(0, 1, leaf, 0, leaf as f64);
    }
    let ex = expand_degree3(&p, Quality::PosInf);
    let d = 6usize;
    let tree_vertices =
        (0..ex.graph.vertex_count()).filter(|&v| ex.orig_vertex[v] == 0).count();
    let added_edges = ex.graph.edge_count() - p.edge_count();
    println!(
        "acceptance 7b (degree-6 expansion): tree vertices {tree_vertices} (expected {}), added edges {added_edges} (expected {})",
        d - 2,
        d - 1
    );
    assert_eq!(tree_vertices, d - 2);
    assert_eq!(added_edges, d - 1);
    pass("7b (degree-6 expansion counts)");
}

#[test]
fn criterion_07c_expansion_preserves_optimum() {
    for seed in 0..60u64 {
        let g = gen::random_polar(6, 14, seed + 81_000);
        let before = oracle::regular_cycle_oracle(&g, Direction::MaxMin).unwrap();
        let solved = bottleneck_regular_cycle(&g, Direction::MaxMin);
        match (before, solved) {
            (None, Err(CycleError::NoCycle)) => {}
            (Some((value, _)), Ok(r)) => assert_eq!(r.value, value, "seed {seed}"),
            (o, s) => panic!("seed {seed}: {o:?} vs {s:?}"),
        }
    }
    // the degree-6 hub fixture keeps its unique regular cycle value
    let mut p = PolarGraph::new(3);
    p.add_edge(0, 0, 1, 0, 1.0);
    p.add_edge(1, 1, 2, 0, 2.0);
    p.add_edge(2, 1, 0, 1, 3.0);
    // inflate vertex 0's degree with pendant edges that cannot join a cycle
    // without changing the optimum
    let mut big = PolarGraph::new(9);
    big.add_edge(0, 0, 1, 0, 1.0);
    big.add_edge(1, 1, 2, 0, 2.0);
    big.add_edge(2, 1, 0, 1, 3.0);
    for leaf in 3..9u32 {
        big.add_edge(0, (leaf % 2) as u8, leaf, 0, 10.0);
    }
    let small = bottleneck_regular_cycle(&p, Direction::MaxMin).unwrap();
    let inflated = bottleneck_regular_cycle(&big, Direction::MaxMin).unwrap();
    assert_eq!(small.value, inflated.value);
    pass("7c (expansion preserves the bottleneck value)");
}

#[test]
fn criterion_08_spatial_curves() {
    let square = vec![
        Point3::new(0.0, 0.0, 0.0),
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(1.0, 1.0, 0.0),
        Point3::new(0.0, 1.0, 0.0),
    ];
    let tetra = vec![
        Point3::new(1.0, 1.0, 1.0),
        Point3::new(1.0, -1.0, -1.0),
        Point3::new(-1.0, 1.0, -1.0),
        Point3::new(-1.0, -1.0, 1.0),
    ];
    for repeated in [false, true] {
        let r = maxmin_angle_closed_curve(&square, repeated, None).unwrap();
        assert!((r.theta - std::f64::consts::FRAC_PI_2).abs() <= 1e-9);
        let r = maxmin_angle_closed_curve(&tetra, repeated, None).unwrap();
        assert!((r.theta - std::f64::consts::FRAC_PI_3).abs() <= 1e-9);
    }

    for seed in 0..100u64 {
        let n = 3 + (seed as usize % 4);
        let pts = gen::random_points3(n, seed + 90_000);
        let restricted = maxmin_angle_closed_curve(&pts, false, None).unwrap();
        let unrestricted = maxmin_angle_closed_curve(&pts, true, None).unwrap();
        assert!(
            unrestricted.theta >= restricted.theta - 1e-12,
            "seed {seed}: repeated-segments optimum may not be worse"
        );
        let o = oracle::curve_oracle(&pts, CurveMode::RepeatedPointsOnly).unwrap().unwrap();
        assert!(
            (restricted.theta - o.theta).abs() <= 1e-9,
            "seed {seed} points-only: {} vs {}",
            restricted.theta,
            o.theta
        );
        let o = oracle::curve_oracle(&pts, CurveMode::RepeatedSegmentsAllowed).unwrap().unwrap();
        assert!(
            (unrestricted.theta - o.theta).abs() <= 1e-9,
            "seed {seed} repeated-segments: {} vs {}",
            unrestricted.theta,
            o.theta
        );
    }

    let big = gen::random_points3(60, 123);
    let clock = Instant::now();
    let a = maxmin_angle_closed_curve(&big, true, None).unwrap();
    let b = maxmin_angle_closed_curve(&big, false, None).unwrap();
    let elapsed = clock.elapsed();
    assert!(a.theta >= b.theta - 1e-12);
    assert!(elapsed.as_secs_f64() < 60.0, "n=60 smoke took {elapsed:?}");
    pass(&format!("8 (curves vs oracle in both modes; n=60 smoke in {elapsed:?})"));
}

#[test]
fn criterion_09_degeneracy() {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 10);
        let m = (seed as usize * 7) % (2 * n + 1);
        let g = gen::random_simple_graph(n, m, seed + 95_000);
        let r = degeneracy(&g);
        let inst = DegreeInstance::new(&g);
        let (theta, core) = oracle::bottleneck_subset_oracle(&inst).unwrap();
        assert_eq!(theta, Quality::Finite(r.degeneracy as i64), "seed {seed}");
        assert_eq!(core, r.core, "seed {seed}");
    }

    let g = gen::random_simple_graph_distinct(100_000, 1_000_000, 2024);
    let clock = Instant::now();
    let r = degeneracy(&g);
    let elapsed = clock.elapsed();
    assert!(r.degeneracy >= 1);
    assert!(elapsed.as_secs_f64() < 2.0, "n=1e5 m=1e6 took {elapsed:?}");
    pass(&format!("9 (200 graphs vs brute force; n=1e5/m=1e6 smoke in {elapsed:?})"));
}

#[test]
fn criterion_10_known_beta_cross_check() {
    // quality-table and induced-degree instances
    for seed in 0..60u64 {
        let inst = TableInstance::random_monotone(2 + (seed as usize % 5), seed);
        let out = decremental_greedy(&mut inst.clone(), &mut MinQuality).unwrap();
        let kb = known_beta(&mut inst.clone(), out.theta).unwrap();
        assert_eq!(kb.subset, out.subset, "table seed {seed}");
        assert!(!kb.exhausted);
    }
    for seed in 0..60u64 {
        let g = gen::random_simple_graph(3 + (seed as usize % 6), 12, seed + 95_000);
        let r = degeneracy(&g);
        let mut inst = DegreeInstance::new(&g);
        let kb = known_beta(&mut inst, Quality::Finite(r.degeneracy as i64)).unwrap();
        assert_eq!(kb.subset, r.core, "graph seed {seed}");
    }
    // hull-angle instances
    for seed in 0..60u64 {
        let pts = gen::random_points2(3 + (seed as usize % 8), seed + 40_000);
        let r = maxmin_angle_polygon(&pts).unwrap();
        let mut inst = Polygon2dInstance::new(pts.clone());
        let kb = known_beta(&mut inst, Quality::Finite(r.theta)).unwrap();
        assert_eq!(kb.subset, r.subset, "planar seed {seed}");
    }
    // solid-angle instances
    for seed in 0..40u64 {
        let pts = gen::random_points3(4 + (seed as usize % 5), seed + 50_000);
        let r = maxmin_solid_angle_polyhedron(&pts).unwrap();
        let mut inst = Polyhedron3dInstance::new(pts.clone());
        let kb = known_beta(&mut inst, Quality::Finite(r.theta)).unwrap();
        assert_eq!(kb.subset, r.subset, "spatial seed {seed}");
    }
    pass("10 (known-beta at the optimum reproduces every greedy subset)");
}
