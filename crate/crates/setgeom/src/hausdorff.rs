use crate::polygon::Polygon;
use crate::{CutSet, Point, Result, GEOM_TOL};

/// Directed Hausdorff distance `h(A,B) = sup_{a in A} dist(a, B)`.
///
/// Interval unions are handled exactly by endpoint and gap-midpoint
/// analysis. Planar regions run a branch-and-bound over `A` with the
/// 1-Lipschitz bound `dist(x,B) <= dist(c,B) + |x-c|`, certified to
/// [`GEOM_TOL`]; point-cloud sources are exact maxima over the points.
pub fn directed_hausdorff(a: &CutSet, b: &CutSet) -> Result<f64> {
    a.dim_check(b)?;
    Ok(match a {
        CutSet::Intervals(pa) => {
            let pb = match b {
                CutSet::Intervals(pb) => pb,
                _ => unreachable!("dim checked"),
            };
            directed_1d(pa, pb)
        }
        CutSet::Points(pts) => pts
            .iter()
            .map(|&p| b.dist_point(p))
            .fold(0.0, f64::max),
        CutSet::Polygon(poly) => directed_region(poly, b, GEOM_TOL),
    })
}

/// Hausdorff metric `H(A,B) = max(h(A,B), h(B,A))`; symmetric by
/// construction.
pub fn hausdorff(a: &CutSet, b: &CutSet) -> Result<f64> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}

fn directed_1d(a: &[crate::Interval], b: &[crate::Interval]) -> f64 {
    let dist = |x: f64| crate::interval::union_dist(b, x);
    let mut best: f64 = 0.0;
    for iv in a {
        best = best.max(dist(iv.lo)).max(dist(iv.hi));
    }
    // dist(·, B) peaks at midpoints of B's gaps; clamp each midpoint into
    // every A-component that overlaps the gap
    for w in b.windows(2) {
        let (g1, g2) = (w[0].hi, w[1].lo);
        let mid = (g1 + g2) / 2.0;
        for iv in a {
            let x = mid.clamp(iv.lo, iv.hi);
            if x > g1 && x < g2 {
                best = best.max(dist(x));
            }
        }
    }
    best
}

/// Max of `dist(x, B)` over the polygon region `A`, by branch-and-bound
/// over cells with the Lipschitz bound. A flat zero field (A inside B)
/// would force the subdivision everywhere, so containment is checked
/// first; if the cell budget is still exhausted, the certification
/// tolerance escalates and the search restarts.
fn directed_region(a: &Polygon, b: &CutSet, tol: f64) -> f64 {
    let field = |p: Point| b.dist_point(p);
    let a_cut = CutSet::Polygon(a.clone());
    if b.contains(&a_cut, 0.0) {
        return 0.0;
    }

    // seeds: vertices and edge midpoints of A; for convex A and B the
    // vertices already attain the maximum (the distance field is convex)
    let mut best = a
        .vertices()
        .iter()
        .map(|&v| field(v))
        .fold(0.0_f64, f64::max);
    if let CutSet::Polygon(pb) = b {
        if crate::star::polygon_is_convex(pb) && crate::star::polygon_is_convex(a) {
            return best;
        }
    }
    for (s, e) in a.edges() {
        best = best.max(field([(s[0] + e[0]) / 2.0, (s[1] + e[1]) / 2.0]));
    }

    const CELL_BUDGET: usize = 400_000;
    let (lo, hi) = a.bbox();
    let mut cur_tol = tol;
    loop {
        let mut pops = 0usize;
        let mut stack = vec![(lo, hi)];
        let mut bbest = best;
        let mut exhausted = false;
        while let Some((clo, chi)) = stack.pop() {
            pops += 1;
            if pops > CELL_BUDGET {
                exhausted = true;
                break;
            }
            let center = [(clo[0] + chi[0]) / 2.0, (clo[1] + chi[1]) / 2.0];
            let half_diag = crate::dist2(clo, chi) / 2.0;
            if let Some(p) = cell_point_in_region(a, clo, chi, center) {
                bbest = bbest.max(field(p));
            } else if !cell_touches_region(a, clo, chi) {
                continue;
            }
            let upper = field(center) + half_diag;
            if upper <= bbest + cur_tol || half_diag <= cur_tol / 2.0 {
                continue;
            }
            let mid = center;
            stack.push((clo, mid));
            stack.push(([mid[0], clo[1]], [chi[0], mid[1]]));
            stack.push(([clo[0], mid[1]], [mid[0], chi[1]]));
            stack.push((mid, chi));
        }
        if !exhausted {
            return bbest;
        }
        best = best.max(bbest);
        cur_tol *= 8.0;
    }
}

fn cell_point_in_region(a: &Polygon, lo: Point, hi: Point, center: Point) -> Option<Point> {
    if a.contains(center, 0.0) {
        return Some(center);
    }
    for p in [lo, hi, [hi[0], lo[1]], [lo[0], hi[1]]] {
        if a.contains(p, 0.0) {
            return Some(p);
        }
    }
    // a polygon vertex inside the cell also witnesses overlap
    a.vertices()
        .iter()
        .find(|v| v[0] >= lo[0] && v[0] <= hi[0] && v[1] >= lo[1] && v[1] <= hi[1])
        .copied()
}

fn cell_touches_region(a: &Polygon, lo: Point, hi: Point) -> bool {
    // conservative: any polygon edge meets the cell rectangle
    let corners = [lo, [hi[0], lo[1]], hi, [lo[0], hi[1]]];
    for (s, e) in a.edges() {
        for i in 0..4 {
            let (c1, c2) = (corners[i], corners[(i + 1) % 4]);
            if segs_meet(s, e, c1, c2) {
                return true;
            }
        }
        if s[0] >= lo[0] && s[0] <= hi[0] && s[1] >= lo[1] && s[1] <= hi[1] {
            return true;
        }
    }
    false
}

fn segs_meet(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let o = |p: Point, q: Point, r: Point| crate::cross(crate::sub(q, p), crate::sub(r, p));
    let d1 = o(b1, b2, a1);
    let d2 = o(b1, b2, a2);
    let d3 = o(a1, a2, b1);
    let d4 = o(a1, a2, b2);
    (d1 >= 0.0) != (d2 > 0.0) && (d3 >= 0.0) != (d4 > 0.0)
}
