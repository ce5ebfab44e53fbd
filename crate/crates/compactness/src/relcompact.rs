use crate::{tail_start, CompactError, Family, Result, FINITE_PROXY_NOTE};
use dpmetric::ball_residual;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ResidualRow {
    pub r: f64,
    pub min_residual: f64,
    pub min_member: usize,
    pub max_residual: f64,
    pub max_member: usize,
    /// Smallest residual among the last-quarter members — the sequence-tail
    /// proxy for a subsequence with vanishing residual.
    pub tail_min_residual: f64,
}

/// Ball-residual sweep over a radius grid.
///
/// Relative compactness inside the compact-support space needs, beyond the
/// two totally-boundedness conditions, some ball that a subsequence
/// eventually fits into. On a finite family the report offers proxies: the
/// first radius whose ball contains every member, the first radius at which
/// the minimum residual vanishes (the subsequence-selection heuristic,
/// members ordered by residual), and an escaping flag when no tested ball
/// contains the family.
#[derive(Debug, Clone, Serialize)]
pub struct BallResidualReport {
    pub rows: Vec<ResidualRow>,
    /// First tested radius with every residual at or below tolerance.
    pub contained_r: Option<f64>,
    /// First tested radius where the minimal residual vanishes.
    pub min_pass_r: Option<f64>,
    /// No tested ball contains the whole family.
    pub escaping_evidence: bool,
    pub tolerance: f64,
    pub note: &'static str,
}

pub fn relative_compactness_in_fb(
    family: &Family,
    r_max: f64,
    steps: usize,
    tolerance: f64,
) -> Result<BallResidualReport> {
    if !(r_max > 0.0) || steps == 0 {
        return Err(CompactError::BadRadiusGrid);
    }
    let p = family.p();
    let members = family.members();
    let tail = tail_start(members.len());

    let mut rows = Vec::with_capacity(steps);
    for j in 1..=steps {
        let r = r_max * j as f64 / steps as f64;
        let mut residuals = Vec::with_capacity(members.len());
        for m in members {
            residuals.push(ball_residual(m, r, p)?);
        }
        let (mut min_i, mut max_i) = (0usize, 0usize);
        for (i, &v) in residuals.iter().enumerate() {
            if v < residuals[min_i] {
                min_i = i;
            }
            if v > residuals[max_i] {
                max_i = i;
            }
        }
        let tail_min_residual = residuals[tail..]
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        rows.push(ResidualRow {
            r,
            min_residual: residuals[min_i],
            min_member: min_i,
            max_residual: residuals[max_i],
            max_member: max_i,
            tail_min_residual,
        });
    }

    let contained_r = rows
        .iter()
        .find(|row| row.max_residual <= tolerance)
        .map(|row| row.r);
    let min_pass_r = rows
        .iter()
        .find(|row| row.min_residual <= tolerance)
        .map(|row| row.r);
    Ok(BallResidualReport {
        rows,
        contained_r,
        min_pass_r,
        escaping_evidence: contained_r.is_none(),
        tolerance,
        note: FINITE_PROXY_NOTE,
    })
}
