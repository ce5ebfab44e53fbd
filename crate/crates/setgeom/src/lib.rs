//! Compact-set geometry on R^1 and R^2.
//!
//! A [`CutSet`] is a nonempty compact subset of the line (a finite union of
//! closed intervals) or of the plane (a simple polygon region or a finite
//! point cloud). On top of it this crate provides:
//!
//! * the Hausdorff metric `H(A,B) = max(h(A,B), h(B,A))` with
//!   `h(A,B) = sup_{a in A} dist(a, B)` — exact for interval unions,
//!   certified branch-and-bound for planar regions,
//! * star-shapedness tests and polygon kernels via half-plane intersection,
//! * tolerance-parameterized Kuratowski liminf/limsup of sampled set
//!   sequences.
//!
//! All predicates use the shared absolute slack [`GEOM_TOL`] unless a
//! tolerance is passed explicitly.

mod cutset;
mod hausdorff;
mod interval;
mod kuratowski;
mod polygon;
mod star;

pub use cutset::CutSet;
pub use hausdorff::{directed_hausdorff, hausdorff};
pub use interval::Interval;
pub use kuratowski::{kuratowski, KuratowskiResult};
pub use polygon::Polygon;
pub use star::{is_convex, is_star_shaped, kernel, representative_point, HalfPlane};

/// Absolute slack, in length units, for containment and equality tests.
pub const GEOM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("cut set must be nonempty")]
    EmptyBody,
    #[error("bad interval: lo={0} hi={1}")]
    BadInterval(f64, f64),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("polygon is not simple (self-intersecting boundary)")]
    NotSimple,
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("star-shapedness is undefined for bare point clouds")]
    PointCloudUnsupported,
    #[error("set is not star-shaped: kernel is empty")]
    EmptyKernel,
}

pub type Result<T> = std::result::Result<T, GeomError>;

/// A point of the plane. 1-d data uses `[x, 0.0]`.
pub type Point = [f64; 2];

pub(crate) fn dist2(a: Point, b: Point) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    (dx * dx + dy * dy).sqrt()
}

pub(crate) fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn cross(a: Point, b: Point) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Distance from `p` to the closed segment `[a, b]`.
pub(crate) fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = sub(b, a);
    let len2 = dot(ab, ab);
    if len2 == 0.0 {
        return dist2(p, a);
    }
    let t = (dot(sub(p, a), ab) / len2).clamp(0.0, 1.0);
    dist2(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}
