use crate::{cross, dist_point_segment, sub, GeomError, Point, Result};

/// A simple polygon region, stored as a counterclockwise vertex list with
/// no repeated or collinear consecutive vertices. The polygon denotes the
/// closed region it bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Builds a polygon from a vertex loop. Consecutive duplicates and
    /// collinear vertices are merged; the orientation is normalized to
    /// counterclockwise. Fails if the cleaned boundary self-intersects.
    ///
    /// Returns `Ok(None)` when fewer than 3 non-collinear vertices remain —
    /// the caller is expected to demote such input to a point cloud.
    pub fn new(raw: Vec<Point>) -> Result<Option<Self>> {
        if raw.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let cleaned = clean_loop(raw);
        if cleaned.len() < 3 {
            return Ok(None);
        }
        if !loop_is_simple(&cleaned) {
            return Err(GeomError::NotSimple);
        }
        let mut vertices = cleaned;
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        if signed_area(&vertices) <= 0.0 {
            // zero-area loop, degenerate
            return Ok(None);
        }
        Ok(Some(Polygon { vertices }))
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for v in &self.vertices {
            for k in 0..2 {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (lo, hi)
    }

    /// Distance from `p` to the boundary.
    pub fn dist_boundary(&self, p: Point) -> f64 {
        self.edges()
            .map(|(a, b)| dist_point_segment(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from `p` to the closed region (0 inside or on the boundary).
    pub fn dist_region(&self, p: Point) -> f64 {
        if self.contains(p, 0.0) {
            0.0
        } else {
            self.dist_boundary(p)
        }
    }

    /// Point-in-region test, boundary-inclusive with slack `tol`.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        if tol > 0.0 && self.dist_boundary(p) <= tol {
            return true;
        }
        // even-odd ray cast toward +x
        let mut inside = false;
        for (a, b) in self.edges() {
            if dist_point_segment(p, a, b) == 0.0 {
                return true;
            }
            let (ya, yb) = (a[1], b[1]);
            if (ya > p[1]) != (yb > p[1]) {
                let x_at = a[0] + (p[1] - ya) / (yb - ya) * (b[0] - a[0]);
                if x_at > p[0] {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// True when every `b`-vertex lies inside `self` and no `b`-edge
    /// properly crosses a `self`-edge, i.e. region containment for simple
    /// polygons.
    pub fn contains_polygon(&self, b: &Polygon, tol: f64) -> bool {
        if !b.vertices.iter().all(|&v| self.contains(v, tol)) {
            return false;
        }
        for (p, q) in b.edges() {
            for (a, c) in self.edges() {
                if segments_cross_properly(p, q, a, c, tol) {
                    return false;
                }
            }
        }
        true
    }

    /// Clips the region by the half-plane `{x : normal·x <= offset}` via
    /// Sutherland–Hodgman. Only meaningful for convex subjects (which is how
    /// kernel computation uses it); returns the possibly empty clipped loop.
    pub fn clip_halfplane(&self, normal: Point, offset: f64) -> Vec<Point> {
        clip_loop(&self.vertices, normal, offset)
    }

}

fn loop_is_simple(vertices: &[Point]) -> bool {
    let n = vertices.len();
    for i in 0..n {
        let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
        for j in (i + 1)..n {
            // skip adjacent edges (they share one endpoint)
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
            if segments_intersect(a1, a2, b1, b2) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn signed_area(vs: &[Point]) -> f64 {
    let n = vs.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    s / 2.0
}

fn clean_loop(raw: Vec<Point>) -> Vec<Point> {
    let eps = 1e-12;
    let mut vs: Vec<Point> = Vec::with_capacity(raw.len());
    for p in raw {
        if let Some(&last) = vs.last() {
            if crate::dist2(last, p) <= eps {
                continue;
            }
        }
        vs.push(p);
    }
    while vs.len() >= 2 && crate::dist2(vs[0], *vs.last().unwrap()) <= eps {
        vs.pop();
    }
    // merge collinear runs
    let mut out: Vec<Point> = Vec::with_capacity(vs.len());
    let n = vs.len();
    for i in 0..n {
        let prev = vs[(i + n - 1) % n];
        let cur = vs[i];
        let next = vs[(i + 1) % n];
        if cross(sub(cur, prev), sub(next, cur)).abs() > eps {
            out.push(cur);
        }
    }
    out
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    cross(sub(b, a), sub(c, a))
}

fn on_segment(p: Point, q: Point, r: Point) -> bool {
    orient(p, q, r) == 0.0
        && r[0] >= p[0].min(q[0])
        && r[0] <= p[0].max(q[0])
        && r[1] >= p[1].min(q[1])
        && r[1] <= p[1].max(q[1])
}

/// Closed-segment intersection test. Non-adjacent edges of a simple polygon
/// must not intersect at all, so endpoint touches count here.
fn segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let d1 = orient(b1, b2, a1);
    let d2 = orient(b1, b2, a2);
    let d3 = orient(a1, a2, b1);
    let d4 = orient(a1, a2, b2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    on_segment(b1, b2, a1)
        || on_segment(b1, b2, a2)
        || on_segment(a1, a2, b1)
        || on_segment(a1, a2, b2)
}

/// Proper crossing with slack: segments cross through each other's interior
/// by more than `tol`.
fn segments_cross_properly(a1: Point, a2: Point, b1: Point, b2: Point, tol: f64) -> bool {
    let d1 = orient(a1, a2, b1);
    let d2 = orient(a1, a2, b2);
    let d3 = orient(b1, b2, a1);
    let d4 = orient(b1, b2, a2);
    let scale_a = crate::dist2(a1, a2).max(1e-300);
    let scale_b = crate::dist2(b1, b2).max(1e-300);
    // signed distances of the b endpoints from line a, and vice versa
    let s1 = d1 / scale_a;
    let s2 = d2 / scale_a;
    let s3 = d3 / scale_b;
    let s4 = d4 / scale_b;
    ((s1 > tol && s2 < -tol) || (s1 < -tol && s2 > tol))
        && ((s3 > tol && s4 < -tol) || (s3 < -tol && s4 > tol))
}

pub(crate) fn clip_loop(vs: &[Point], normal: Point, offset: f64) -> Vec<Point> {
    let inside = |p: Point| crate::dot(normal, p) <= offset;
    let mut out = Vec::with_capacity(vs.len() + 1);
    let n = vs.len();
    for i in 0..n {
        let cur = vs[i];
        let next = vs[(i + 1) % n];
        let (ci, ni) = (inside(cur), inside(next));
        if ci {
            out.push(cur);
        }
        if ci != ni {
            let da = crate::dot(normal, cur) - offset;
            let db = crate::dot(normal, next) - offset;
            let t = da / (da - db);
            out.push([
                cur[0] + t * (next[0] - cur[0]),
                cur[1] + t * (next[1] - cur[1]),
            ]);
        }
    }
    out
}
