//! Geometric primitives: points, orientation predicates, angles, and
//! explicit convex hulls in 2d and 3d with vertex deletion.

mod hull2;
mod hull3;
mod point;

pub use hull2::{convex_hull_2d, Hull2};
pub use hull3::{
    convex_hull_3d, convex_hull_3d_of, solid_angle_triangle, vertex_solid_angle, Hull3,
    Hull3Error,
};
pub use point::{angle_at, orient2d, orient3d, GeomError, Point2, Point3};
