use crate::{GeomError, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`. A single point is the
/// degenerate case `lo == hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if lo > hi {
            return Err(GeomError::BadInterval(lo, hi));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Result<Self> {
        Interval::new(x, x)
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }

    /// Distance from `x` to the interval (0 inside).
    pub fn dist(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

/// Sorts intervals and merges any that overlap or touch within `tol`,
/// producing the canonical disjoint ascending form.
pub(crate) fn normalize(mut parts: Vec<Interval>, tol: f64) -> Vec<Interval> {
    parts.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
    let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
    for iv in parts {
        match out.last_mut() {
            Some(last) if iv.lo <= last.hi + tol => {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                }
            }
            _ => out.push(iv),
        }
    }
    out
}

/// Distance from `x` to a disjoint ascending union of intervals.
pub(crate) fn union_dist(parts: &[Interval], x: f64) -> f64 {
    // binary search for the first interval with lo > x
    let idx = parts.partition_point(|iv| iv.lo <= x);
    let mut best = f64::INFINITY;
    if idx < parts.len() {
        best = best.min(parts[idx].dist(x));
    }
    if idx > 0 {
        best = best.min(parts[idx - 1].dist(x));
    }
    best
}

/// `a ⊇ b` within slack `tol`: every interval of `b` sits inside one
/// interval of `a` after inflating it by `tol`.
pub(crate) fn union_contains(a: &[Interval], b: &[Interval], tol: f64) -> bool {
    b.iter().all(|iv| {
        a.iter()
            .any(|cover| cover.lo - tol <= iv.lo && iv.hi <= cover.hi + tol)
    })
}

/// Exact intersection of two disjoint ascending unions.
pub(crate) fn union_intersect(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].lo.max(b[j].lo);
        let hi = a[i].hi.min(b[j].hi);
        if lo <= hi {
            out.push(Interval { lo, hi });
        }
        if a[i].hi < b[j].hi {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}
