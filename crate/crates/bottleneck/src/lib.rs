//! Decremental greedy solvers for monotone bottleneck subset problems.
//!
//! The common setting: a finite universe of elements and a quality measure
//! `q(x, S)` that can only decrease as other elements are removed. The
//! bottleneck subset is a nonempty subset whose worst element is as good as
//! possible. A greedy algorithm that repeatedly removes any element whose
//! quality is at most the best subset quality seen so far always finds the
//! unique maximal optimum, regardless of tie-breaking.
//!
//! Instantiations provided here:
//!
//! * [`degeneracy`] — graph degeneracy and k-cores over induced degrees,
//! * [`polygon`] — max-min-angle polygons in planar point sets,
//! * [`polyhedron`] — max-min-solid-angle convex polyhedra in 3d,
//! * [`graph`] — bottleneck cycles in undirected, directed, and mixed graphs,
//! * [`polar`] — bottleneck regular cycles in polar (switch) graphs,
//! * [`curve`] — max-min-angle closed polygonal curves through 3d points.
//!
//! The [`oracle`] module holds brute-force reference implementations used by
//! the test suite; they share data types with the solvers but none of the
//! solver code paths.

pub mod antimatroid;
pub mod curve;
pub mod degeneracy;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod polar;
pub mod polygon;
pub mod polyhedron;
pub mod quality;
pub mod table;

pub use antimatroid::{check_antimatroid, enumerate_removal_sequences, SequenceAlgorithm};
pub use greedy::{decremental_greedy, known_beta, Instance, MinQuality};
pub use quality::{Direction, Quality};

/// Planar point with `f64` coordinates.
pub type Point2d = geom::Point2<f64>;
/// 3d point with `f64` coordinates.
pub type Point3d = geom::Point3<f64>;
/// Directed graph with `f64` edge weights.
pub type Digraph = graph::WeightedDigraph<f64>;
/// Undirected multigraph with `f64` edge weights.
pub type Multigraph = graph::WeightedMultigraph<f64>;
/// Mixed graph with `f64` edge weights.
pub type Mixed = graph::MixedGraph<f64>;
/// Polar graph with `f64` edge weights.
pub type Polar = polar::PolarGraph<f64>;
