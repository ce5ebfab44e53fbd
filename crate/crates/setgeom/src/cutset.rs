use crate::interval::{normalize, union_contains, union_dist, union_intersect};
use crate::polygon::Polygon;
use crate::{dist2, GeomError, Interval, Point, Result, GEOM_TOL};

/// A nonempty compact subset of R^1 or R^2.
///
/// * `Intervals` — a finite union of closed intervals, kept sorted and
///   pairwise disjoint (dimension 1).
/// * `Polygon` — a simple polygon region (dimension 2).
/// * `Points` — a finite point cloud (dimension 2).
///
/// Compactness is structural: every variant is closed and bounded.
#[derive(Debug, Clone, PartialEq)]
pub enum CutSet {
    Intervals(Vec<Interval>),
    Polygon(Polygon),
    Points(Vec<Point>),
}

impl CutSet {
    /// Builds a 1-d cut from intervals, normalizing overlaps.
    pub fn intervals(parts: Vec<Interval>) -> Result<Self> {
        if parts.is_empty() {
            return Err(GeomError::EmptyBody);
        }
        Ok(CutSet::Intervals(normalize(parts, 0.0)))
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Ok(CutSet::Intervals(vec![Interval::new(lo, hi)?]))
    }

    /// A single real number as a zero-length interval.
    pub fn point_1d(x: f64) -> Result<Self> {
        CutSet::interval(x, x)
    }

    /// Builds a 2-d polygon cut; fewer than 3 non-collinear vertices
    /// demote to a point cloud.
    pub fn polygon(vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(GeomError::EmptyBody);
        }
        match Polygon::new(vertices.clone())? {
            Some(p) => Ok(CutSet::Polygon(p)),
            None => CutSet::points(vertices),
        }
    }

    /// Builds a 2-d point cloud, deduplicating exact repeats.
    pub fn points(mut pts: Vec<Point>) -> Result<Self> {
        if pts.is_empty() {
            return Err(GeomError::EmptyBody);
        }
        if pts.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(GeomError::NonFinite);
        }
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        Ok(CutSet::Points(pts))
    }

    pub fn dim(&self) -> usize {
        match self {
            CutSet::Intervals(_) => 1,
            _ => 2,
        }
    }

    /// Distance from an ambient point to the set; for 1-d cuts the point is
    /// `[x, 0]`.
    pub fn dist_point(&self, p: Point) -> f64 {
        match self {
            CutSet::Intervals(parts) => union_dist(parts, p[0]),
            CutSet::Polygon(poly) => poly.dist_region(p),
            CutSet::Points(pts) => pts
                .iter()
                .map(|&q| dist2(p, q))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Region containment `self ⊇ other` within slack `tol`.
    pub fn contains(&self, other: &CutSet, tol: f64) -> bool {
        match (self, other) {
            (CutSet::Intervals(a), CutSet::Intervals(b)) => union_contains(a, b, tol),
            (CutSet::Polygon(a), CutSet::Polygon(b)) => a.contains_polygon(b, tol),
            (CutSet::Polygon(a), CutSet::Points(b)) => b.iter().all(|&p| a.contains(p, tol)),
            (CutSet::Points(a), CutSet::Points(b)) => b
                .iter()
                .all(|&p| a.iter().any(|&q| dist2(p, q) <= tol)),
            // a point cloud has empty interior: it can only contain clouds
            (CutSet::Points(_), CutSet::Polygon(_)) => false,
            _ => false,
        }
    }

    /// Set equality within slack `tol` (mutual containment).
    pub fn approx_eq(&self, other: &CutSet, tol: f64) -> bool {
        self.contains(other, tol) && other.contains(self, tol)
    }

    /// Exact intersection where it is computable: interval unions, and
    /// convex polygon pairs. Returns `None` when the result would be empty
    /// or the variant combination is unsupported.
    pub fn intersect(&self, other: &CutSet) -> Option<CutSet> {
        match (self, other) {
            (CutSet::Intervals(a), CutSet::Intervals(b)) => {
                let parts = union_intersect(a, b);
                if parts.is_empty() {
                    None
                } else {
                    Some(CutSet::Intervals(parts))
                }
            }
            (CutSet::Polygon(a), CutSet::Polygon(b))
                if crate::star::polygon_is_convex(a) && crate::star::polygon_is_convex(b) =>
            {
                let mut loop_ = a.vertices().to_vec();
                for (s, e) in b.edges() {
                    let d = crate::sub(e, s);
                    // interior is left of the CCW edge: rot90(d)·x <= rot90(d)·s
                    let n = [d[1], -d[0]];
                    let off = crate::dot(n, s);
                    loop_ = crate::polygon::clip_loop(&loop_, n, off);
                    if loop_.is_empty() {
                        return None;
                    }
                }
                match Polygon::new(loop_.clone()) {
                    Ok(Some(p)) => Some(CutSet::Polygon(p)),
                    _ => CutSet::points(loop_).ok(),
                }
            }
            _ => None,
        }
    }

    /// Axis-aligned bounding box as `(lo, hi)` corners.
    pub fn bbox(&self) -> (Point, Point) {
        match self {
            CutSet::Intervals(parts) => (
                [parts[0].lo, 0.0],
                [parts.last().unwrap().hi, 0.0],
            ),
            CutSet::Polygon(poly) => poly.bbox(),
            CutSet::Points(pts) => {
                let mut lo = [f64::INFINITY; 2];
                let mut hi = [f64::NEG_INFINITY; 2];
                for p in pts {
                    for k in 0..2 {
                        lo[k] = lo[k].min(p[k]);
                        hi[k] = hi[k].max(p[k]);
                    }
                }
                (lo, hi)
            }
        }
    }

    /// Largest distance from a set point to the origin, i.e.
    /// `H({0}, self)` in the sup-norm sense used by the extension norm.
    pub fn max_norm(&self) -> f64 {
        match self {
            CutSet::Intervals(parts) => parts
                .iter()
                .flat_map(|iv| [iv.lo.abs(), iv.hi.abs()])
                .fold(0.0, f64::max),
            CutSet::Polygon(poly) => poly
                .vertices()
                .iter()
                .map(|&v| dist2(v, [0.0, 0.0]))
                .fold(0.0, f64::max),
            CutSet::Points(pts) => pts
                .iter()
                .map(|&v| dist2(v, [0.0, 0.0]))
                .fold(0.0, f64::max),
        }
    }

    /// Largest distance from a set point to the closed origin ball of
    /// radius `r` (zero exactly when the set sits inside the ball). The
    /// supremum is attained at interval endpoints or polygon vertices since
    /// the norm is convex.
    pub fn excess_over_ball(&self, r: f64) -> f64 {
        (self.max_norm() - r).max(0.0)
    }

    pub fn dim_check(&self, other: &CutSet) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }
}

impl CutSet {
    /// Containment with the default slack.
    pub fn contains_default(&self, other: &CutSet) -> bool {
        self.contains(other, GEOM_TOL)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_union_containment() {
        let a = CutSet::interval(0.0, 4.0).unwrap();
        let b = CutSet::intervals(vec![
            Interval::new(0.0, 1.0).unwrap(),
            Interval::new(3.0, 4.0).unwrap(),
        ])
        .unwrap();
        assert!(a.contains(&b, 0.0));
        assert!(!b.contains(&a, 0.0));
        assert!(a.contains_default(&b));
    }

    #[test]
    fn degenerate_polygon_becomes_cloud() {
        let c = CutSet::polygon(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).unwrap();
        assert!(matches!(c, CutSet::Points(_)));
    }

    #[test]
    fn excess_over_ball_on_crisp_point() {
        let c = CutSet::point_1d(2.0).unwrap();
        assert_eq!(c.excess_over_ball(1.0), 1.0);
        assert_eq!(c.excess_over_ball(3.0), 0.0);
    }

    #[test]
    fn convex_polygon_intersection() {
        let a = CutSet::polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]).unwrap();
        let b = CutSet::polygon(vec![[1.0, 1.0], [3.0, 1.0], [3.0, 3.0], [1.0, 3.0]]).unwrap();
        let i = a.intersect(&b).unwrap();
        let expect = CutSet::polygon(vec![[1.0, 1.0], [2.0, 1.0], [2.0, 2.0], [1.0, 2.0]]).unwrap();
        assert!(i.approx_eq(&expect, 1e-12));
    }
}
