use crate::{tail_start, CompactError, Family, Result, FINITE_PROXY_NOTE};
use dpmetric::dp_distance;
use levelset::FuzzySet;
use serde::Serialize;
use setgeom::{hausdorff, GEOM_TOL};

/// Parity-subsequence outcome at one truncation level, computed when the
/// full truncated sequence fails to settle.
#[derive(Debug, Clone, Serialize)]
pub struct SplitInfo {
    /// Tail convergence of the truncations of members 1, 3, 5, ...
    pub odd_converges: bool,
    /// Tail convergence of the truncations of members 2, 4, 6, ...
    pub even_converges: bool,
    /// Distance between the last odd and last even truncation.
    pub odd_even_distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncRow {
    pub r: f64,
    /// Does `d_p(u_k^(r), u^(r))` settle below tolerance on the tail?
    pub full_converges: bool,
    /// Does `[u]_gamma` equal `[u]_r` at every grid level `gamma <= r`?
    pub plateau_holds: bool,
    /// Fraction of grid levels where the last member is already within
    /// tolerance of `u` in the Hausdorff metric.
    pub ae_fraction: f64,
    pub split: Option<SplitInfo>,
}

/// Truncation-convergence report across a decreasing list of levels,
/// cross-checking the equivalence between truncated convergence at every
/// level and plain `d_p` convergence.
#[derive(Debug, Clone, Serialize)]
pub struct TruncEquivalenceReport {
    pub rows: Vec<TruncRow>,
    pub all_r_converge: bool,
    /// Tail convergence of the untruncated sequence toward `u`.
    pub dp_tail_converges: bool,
    /// The finite-proxy equivalence: truncated convergence at every tested
    /// level if and only if plain convergence.
    pub consistent: bool,
    pub tolerance: f64,
    pub note: &'static str,
}

pub fn truncation_equivalence(
    seq: &Family,
    u: &FuzzySet,
    r_list: &[f64],
    tolerance: f64,
) -> Result<TruncEquivalenceReport> {
    if r_list.is_empty()
        || r_list.windows(2).any(|w| w[0] <= w[1])
        || r_list.iter().any(|r| !(*r > 0.0 && *r <= 1.0))
    {
        return Err(CompactError::BadRList);
    }
    let p = seq.p();
    let members = seq.members();

    let mut rows = Vec::with_capacity(r_list.len());
    for &r in r_list {
        let truncs: Vec<FuzzySet> = members
            .iter()
            .map(|m| m.truncate(r))
            .collect::<levelset::Result<_>>()?;
        let u_r = u.truncate(r)?;

        let tail = &truncs[tail_start(truncs.len())..];
        let mut full_converges = true;
        for t in tail {
            if dp_distance(t, &u_r, p)? > tolerance {
                full_converges = false;
                break;
            }
        }

        let plateau_holds = {
            let target = u.cut(r)?;
            u.grid()
                .levels()
                .iter()
                .zip(u.cuts())
                .filter(|(&g, _)| g <= r)
                .all(|(_, c)| c.approx_eq(target, GEOM_TOL))
        };

        let last = members.last().expect("family is nonempty");
        let levels = u.grid().levels();
        let mut close = 0usize;
        for &a in levels {
            let h = hausdorff(last.cut(a)?, u.cut(a)?).map_err(levelset::LevelError::Geom)?;
            if h <= tolerance {
                close += 1;
            }
        }
        let ae_fraction = close as f64 / levels.len() as f64;

        let split = if full_converges {
            None
        } else {
            let odd: Vec<&FuzzySet> = truncs.iter().step_by(2).collect();
            let even: Vec<&FuzzySet> = truncs.iter().skip(1).step_by(2).collect();
            let settled = |part: &[&FuzzySet]| -> Result<bool> {
                let tail = &part[tail_start(part.len())..];
                for (i, a) in tail.iter().enumerate() {
                    for b in &tail[i + 1..] {
                        if dp_distance(a, b, p)? > tolerance {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            };
            let odd_converges = settled(&odd)?;
            let even_converges = !even.is_empty() && settled(&even)?;
            let odd_even_distance = match (odd.last(), even.last()) {
                (Some(a), Some(b)) => dp_distance(a, b, p)?,
                _ => 0.0,
            };
            Some(SplitInfo {
                odd_converges,
                even_converges,
                odd_even_distance,
            })
        };

        rows.push(TruncRow {
            r,
            full_converges,
            plateau_holds,
            ae_fraction,
            split,
        });
    }

    let all_r_converge = rows.iter().all(|row| row.full_converges);
    let tail = &members[tail_start(members.len())..];
    let mut dp_tail_converges = true;
    for m in tail {
        if dp_distance(m, u, p)? > tolerance {
            dp_tail_converges = false;
            break;
        }
    }

    Ok(TruncEquivalenceReport {
        rows,
        all_r_converge,
        dp_tail_converges,
        consistent: all_r_converge == dp_tail_converges,
        tolerance,
        note: FINITE_PROXY_NOTE,
    })
}
