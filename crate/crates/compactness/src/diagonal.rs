use crate::{tail_start, CompactError, Family, Result};
use levelset::{AlphaGrid, FuzzySet, SupportKind};
use serde::Serialize;
use setgeom::{hausdorff, CutSet, GEOM_TOL};

/// Output of the diagonal subsequence-limit construction.
#[derive(Debug, Clone)]
pub struct DiagonalResult {
    pub limit: FuzzySet,
    /// Member indices of the final extracted subsequence.
    pub subsequence: Vec<usize>,
    /// Levels where the full active sequence failed the Cauchy test and a
    /// subsequence had to be extracted; the limit there takes the
    /// left-limit value (intersection over lower levels).
    pub forced_levels: Vec<f64>,
    pub cauchy_tol: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagonalSummary {
    pub subsequence: Vec<usize>,
    pub forced_levels: Vec<f64>,
    pub cauchy_tol: f64,
}

impl DiagonalResult {
    pub fn summary(&self) -> DiagonalSummary {
        DiagonalSummary {
            subsequence: self.subsequence.clone(),
            forced_levels: self.forced_levels.clone(),
            cauchy_tol: self.cauchy_tol,
        }
    }
}

/// Builds the candidate limit of an ordered family along a level grid.
///
/// Levels are processed in ascending order. At each level the last-quarter
/// tail of the active subsequence must be pairwise Cauchy in the Hausdorff
/// metric; when it is not, every other member (keeping the lowest index)
/// is dropped, for at most `log2(n)` rounds, after which the level is
/// reported as non-convergent. The limit cut at a level that converged
/// without extraction is a far tail element; a level that needed
/// extraction takes the value of the level below it — the intersection
/// over lower levels that the construction prescribes, which restores the
/// left-continuity the full sequence lost there. A final downward
/// intersection sweep enforces nestedness exactly, and the result is
/// re-validated.
pub fn diagonal_limit(
    seq: &Family,
    rational_grid: &[f64],
    cauchy_tol: f64,
) -> Result<DiagonalResult> {
    let mut levels: Vec<f64> = rational_grid
        .iter()
        .copied()
        .filter(|a| *a > 0.0 && *a <= 1.0)
        .collect();
    levels.push(1.0);
    levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    levels.dedup();
    let grid = AlphaGrid::new(levels)?;

    let members = seq.members();
    let n = members.len();
    let max_rounds = (usize::BITS - n.leading_zeros()) as usize; // ~ log2(n) + 1
    let mut active: Vec<usize> = (0..n).collect();
    let mut forced_levels = Vec::new();
    let mut level_limits: Vec<CutSet> = Vec::with_capacity(grid.len());
    let mut forced: Vec<bool> = Vec::with_capacity(grid.len());

    for &q in grid.levels() {
        let mut rounds = 0;
        loop {
            if tail_is_cauchy(members, &active, q, cauchy_tol)? {
                let last = *active.last().expect("active never empties");
                level_limits.push(members[last].cut(q)?.clone());
                forced.push(rounds > 0);
                if rounds > 0 {
                    forced_levels.push(q);
                }
                break;
            }
            if rounds >= max_rounds || active.len() <= 2 {
                return Err(CompactError::NonConvergentLevel(q));
            }
            // keep positions 0, 2, 4, ... so the lowest index survives
            active = active.iter().copied().step_by(2).collect();
            rounds += 1;
        }
    }

    // assemble: forced levels take the value of the level below, then a
    // downward intersection sweep repairs any residual nesting slack
    let mut cuts: Vec<CutSet> = Vec::with_capacity(grid.len());
    for j in 0..grid.len() {
        let candidate = if forced[j] && j > 0 {
            cuts[j - 1].clone()
        } else {
            level_limits[j].clone()
        };
        if j == 0 {
            cuts.push(candidate);
            continue;
        }
        if cuts[j - 1].contains(&candidate, GEOM_TOL) {
            cuts.push(candidate);
        } else {
            match candidate.intersect(&cuts[j - 1]) {
                Some(fixed) => cuts.push(fixed),
                None => return Err(CompactError::NonNestedLimit(grid.levels()[j])),
            }
        }
    }

    let limit = FuzzySet::new(grid, cuts, SupportKind::Bounded)?;
    Ok(DiagonalResult {
        limit,
        subsequence: active,
        forced_levels,
        cauchy_tol,
    })
}

fn tail_is_cauchy(
    members: &[FuzzySet],
    active: &[usize],
    q: f64,
    tol: f64,
) -> Result<bool> {
    let tail = &active[tail_start(active.len())..];
    for (i, &a) in tail.iter().enumerate() {
        for &b in &tail[i + 1..] {
            let d = hausdorff(members[a].cut(q)?, members[b].cut(q)?)
                .map_err(levelset::LevelError::Geom)?;
            if d > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
