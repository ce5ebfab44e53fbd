use crate::{CutSet, GeomError, Point, Result};

/// Tolerance-parameterized approximation of Kuratowski limits of a sampled
/// set sequence.
///
/// * `liminf`: grid points whose distance to *every* tail set is at most
///   the tolerance (limits of selections).
/// * `limsup`: grid points within tolerance of *some* tail set (cluster
///   points of selections).
///
/// The tail is the last half of the sequence; exact limits are not
/// computable from finite data, so the effective tolerance used for the
/// scan grid is recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct KuratowskiResult {
    pub dim: usize,
    pub liminf: Vec<Point>,
    pub limsup: Vec<Point>,
    pub tolerance: f64,
}

const MAX_GRID_POINTS: usize = 4_000_000;

pub fn kuratowski(seq: &[CutSet], tolerance: f64) -> Result<KuratowskiResult> {
    if seq.is_empty() {
        return Err(GeomError::EmptyBody);
    }
    let dim = seq[0].dim();
    for s in seq {
        s.dim_check(&seq[0])?;
    }
    let tail = &seq[seq.len() / 2..];

    // bounding box of the whole sequence, inflated by the tolerance
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for s in seq {
        let (slo, shi) = s.bbox();
        for k in 0..2 {
            lo[k] = lo[k].min(slo[k] - tolerance);
            hi[k] = hi[k].max(shi[k] + tolerance);
        }
    }

    // step = tolerance unless that explodes the grid
    let mut step = tolerance.max(1e-12);
    loop {
        let count = grid_count(lo, hi, step, dim);
        if count <= MAX_GRID_POINTS {
            break;
        }
        step *= 2.0;
    }

    let mut liminf = Vec::new();
    let mut limsup = Vec::new();
    for p in grid_points(lo, hi, step, dim) {
        let mut max_d: f64 = 0.0;
        let mut min_d = f64::INFINITY;
        for s in tail {
            let d = s.dist_point(p);
            max_d = max_d.max(d);
            min_d = min_d.min(d);
        }
        if max_d <= tolerance {
            liminf.push(p);
        }
        if min_d <= tolerance {
            limsup.push(p);
        }
    }
    Ok(KuratowskiResult {
        dim,
        liminf,
        limsup,
        tolerance: step,
    })
}

fn grid_count(lo: Point, hi: Point, step: f64, dim: usize) -> usize {
    let nx = ((hi[0] - lo[0]) / step).ceil() as usize + 1;
    if dim == 1 {
        nx
    } else {
        let ny = ((hi[1] - lo[1]) / step).ceil() as usize + 1;
        nx.saturating_mul(ny)
    }
}

fn grid_points(lo: Point, hi: Point, step: f64, dim: usize) -> Vec<Point> {
    let nx = ((hi[0] - lo[0]) / step).ceil() as usize + 1;
    let ny = if dim == 1 {
        1
    } else {
        ((hi[1] - lo[1]) / step).ceil() as usize + 1
    };
    let mut out = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            out.push([
                lo[0] + i as f64 * step,
                if dim == 1 { 0.0 } else { lo[1] + j as f64 * step },
            ]);
        }
    }
    out
}
