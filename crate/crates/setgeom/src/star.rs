use crate::polygon::{clip_loop, Polygon};
use crate::{cross, dot, sub, CutSet, GeomError, Point, Result};

/// The half-plane `{x : normal·x <= offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: f64,
}

impl HalfPlane {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        let n = (normal[0] * normal[0] + normal[1] * normal[1]).sqrt();
        if !n.is_finite() || n == 0.0 {
            return Err(GeomError::NonFinite);
        }
        Ok(HalfPlane {
            normal: [normal[0] / n, normal[1] / n],
            offset: offset / n,
        })
    }

    /// Half-plane whose boundary carries the directed edge `a -> b` with the
    /// left side (the interior side of a CCW polygon edge) included.
    pub fn left_of_edge(a: Point, b: Point) -> Result<Self> {
        let d = sub(b, a);
        // left of direction d is where cross(d, x - a) >= 0, i.e.
        // (d_y, -d_x)·x <= (d_y, -d_x)·a
        HalfPlane::new([d[1], -d[0]], d[1] * a[0] - d[0] * a[1])
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        dot(self.normal, p) <= self.offset + tol
    }
}

pub(crate) fn polygon_is_convex(poly: &Polygon) -> bool {
    let vs = poly.vertices();
    let n = vs.len();
    // CCW and collinear-merged, so convexity is every turn being a left turn
    (0..n).all(|i| {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        let c = vs[(i + 2) % n];
        cross(sub(b, a), sub(c, b)) > 0.0
    })
}

/// Convexity test. 1-d: a single interval. 2-d polygon: all turns share the
/// CCW sign. A point cloud is convex only when it is a single point.
pub fn is_convex(a: &CutSet) -> bool {
    match a {
        CutSet::Intervals(parts) => parts.len() == 1,
        CutSet::Polygon(poly) => polygon_is_convex(poly),
        CutSet::Points(pts) => pts.len() == 1,
    }
}

/// Star-shapedness test. 1-d: a single interval. 2-d polygon: nonempty
/// kernel. Errors on bare point clouds, where the notion degenerates.
pub fn is_star_shaped(a: &CutSet) -> Result<bool> {
    match a {
        CutSet::Intervals(parts) => Ok(parts.len() == 1),
        CutSet::Polygon(_) => Ok(kernel(a).is_ok()),
        CutSet::Points(_) => Err(GeomError::PointCloudUnsupported),
    }
}

/// The kernel `{x in A : [x, y] ⊆ A for all y in A}`.
///
/// 1-d: the interval itself (single-interval cuts only). 2-d polygon: the
/// intersection of the left half-planes of all (collinear-merged) edges,
/// which is a convex set. Degenerate kernels (a segment or a point) come
/// back as point clouds. Errors with `EmptyKernel` when `A` is not
/// star-shaped.
pub fn kernel(a: &CutSet) -> Result<CutSet> {
    match a {
        CutSet::Intervals(parts) => {
            if parts.len() == 1 {
                Ok(CutSet::Intervals(parts.clone()))
            } else {
                Err(GeomError::EmptyKernel)
            }
        }
        CutSet::Points(_) => Err(GeomError::PointCloudUnsupported),
        CutSet::Polygon(poly) => {
            let (lo, hi) = poly.bbox();
            let pad = 1.0 + (hi[0] - lo[0]).max(hi[1] - lo[1]);
            // start from an inflated bounding rectangle and clip by each
            // edge half-plane in edge order
            let mut region = vec![
                [lo[0] - pad, lo[1] - pad],
                [hi[0] + pad, lo[1] - pad],
                [hi[0] + pad, hi[1] + pad],
                [lo[0] - pad, hi[1] + pad],
            ];
            for (s, e) in poly.edges() {
                let hp = HalfPlane::left_of_edge(s, e)?;
                region = clip_loop(&region, hp.normal, hp.offset);
                if region.is_empty() {
                    return Err(GeomError::EmptyKernel);
                }
            }
            match Polygon::new(region.clone())? {
                Some(p) => Ok(CutSet::Polygon(p)),
                None => CutSet::points(region).map_err(|_| GeomError::EmptyKernel),
            }
        }
    }
}

/// A deterministic representative point of a cut set: interval midpoint of
/// the first component, polygon vertex centroid, or the first cloud point.
pub fn representative_point(a: &CutSet) -> Point {
    match a {
        CutSet::Intervals(parts) => [(parts[0].lo + parts[0].hi) / 2.0, 0.0],
        CutSet::Polygon(poly) => {
            let vs = poly.vertices();
            let mut c = [0.0, 0.0];
            for v in vs {
                c[0] += v[0];
                c[1] += v[1];
            }
            [c[0] / vs.len() as f64, c[1] / vs.len() as f64]
        }
        CutSet::Points(pts) => pts[0],
    }
}
