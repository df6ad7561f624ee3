use num_traits::Float;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("coincident points where distinct points are required")]
    CoincidentPoints,
    #[error("degenerate state: {0}")]
    InvalidState(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Float> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }
}

/// Twice the signed area of triangle abc; positive for counterclockwise.
pub fn orient2d<T: Float>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> T {
    b.sub(a).cross(c.sub(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Float> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn triple(self, b: Self, c: Self) -> T {
        self.dot(b.cross(c))
    }
}

/// Six times the signed volume of tetrahedron abcd; positive when d lies on
/// the positive side of the plane through a, b, c.
pub fn orient3d<T: Float>(a: Point3<T>, b: Point3<T>, c: Point3<T>, d: Point3<T>) -> T {
    b.sub(a).triple(c.sub(a), d.sub(a))
}

/// Angle at `b` between rays b->a and b->c, in [0, pi]. Uses the atan2 of
/// the cross norm and the dot product, which stays accurate near 0 and pi.
pub fn angle_at<T: Float>(a: Point3<T>, b: Point3<T>, c: Point3<T>) -> Result<T, GeomError> {
    let u = a.sub(b);
    let v = c.sub(b);
    if u.dot(u) == T::zero() || v.dot(v) == T::zero() {
        return Err(GeomError::CoincidentPoints);
    }
    Ok(u.cross(v).norm().atan2(u.dot(v)))
}
