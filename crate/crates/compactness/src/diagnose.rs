use crate::{Family, Result, FINITE_PROXY_NOTE};
use dpmetric::{default_h_grid, delta_from_curve, lp_extension_norm, p_mean_modulus};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    TotallyBoundedEvidence,
    FailsBoundedness,
    FailsEquiContinuity,
}

/// Witness of an equi-continuity failure: the member and modulus value at
/// the smallest sampled h.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquiWitness {
    pub member: usize,
    pub member_id: String,
    pub h: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsEntry {
    pub eps: f64,
    /// Largest grid-certified delta: every sampled h below it keeps the
    /// family modulus under eps. None when the smallest sampled h already
    /// fails.
    pub delta: Option<f64>,
    pub witness: Option<EquiWitness>,
}

/// Totally-boundedness evidence for a finite family: the uniform p-mean
/// bound is the sup of extension norms, equi-left-continuity is scanned on
/// the h-grid.
#[derive(Debug, Clone, Serialize)]
pub struct CompactnessReport {
    pub bound_m: f64,
    pub per_member_norms: Vec<f64>,
    pub h_grid: Vec<f64>,
    /// Family modulus `sup_u omega(u, h)` per sampled h.
    pub sup_omega: Vec<f64>,
    pub equi: Vec<EpsEntry>,
    pub verdict: Verdict,
    pub note: &'static str,
}

/// Runs both totally-boundedness conditions on the family.
///
/// For each epsilon the h-grid (ascending) is scanned for the largest
/// delta such that every sampled `h < delta` keeps
/// `sup_u omega(u, h) < eps`; failure at the smallest sampled h yields a
/// FAIL entry carrying the witness member.
pub fn diagnose(family: &Family, eps_list: &[f64], h_grid: Option<&[f64]>) -> Result<CompactnessReport> {
    let default_grid;
    let h_grid = match h_grid {
        Some(h) => h,
        None => {
            default_grid = default_h_grid();
            &default_grid
        }
    };
    let p = family.p();

    let per_member_norms: Vec<f64> = family
        .members()
        .iter()
        .map(|u| lp_extension_norm(u, p))
        .collect();
    let bound_m = per_member_norms.iter().copied().fold(0.0, f64::max);

    // omega matrix: member x h, rows computed concurrently
    let members = family.members();
    let mut omegas: Vec<Result<Vec<f64>>> = (0..members.len()).map(|_| Ok(Vec::new())).collect();
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(members.len());
    std::thread::scope(|scope| {
        let chunk = members.len().div_ceil(threads);
        for (t, slot) in omegas.chunks_mut(chunk).enumerate() {
            let start = t * chunk;
            scope.spawn(move || {
                for (off, out) in slot.iter_mut().enumerate() {
                    let u = &members[start + off];
                    let mut row = Vec::with_capacity(h_grid.len());
                    for &h in h_grid {
                        match p_mean_modulus(u, h, p) {
                            Ok(w) => row.push(w),
                            Err(e) => {
                                *out = Err(e.into());
                                return;
                            }
                        }
                    }
                    *out = Ok(row);
                }
            });
        }
    });
    let omegas = omegas.into_iter().collect::<Result<Vec<Vec<f64>>>>()?;

    let sup_omega: Vec<f64> = (0..h_grid.len())
        .map(|j| omegas.iter().map(|row| row[j]).fold(0.0, f64::max))
        .collect();
    let argmax: Vec<usize> = (0..h_grid.len())
        .map(|j| {
            let mut best = 0;
            for (i, row) in omegas.iter().enumerate() {
                if row[j] > omegas[best][j] {
                    best = i;
                }
            }
            best
        })
        .collect();

    let equi: Vec<EpsEntry> = eps_list
        .iter()
        .map(|&eps| {
            let delta = delta_from_curve(h_grid, &sup_omega, eps);
            let witness = if delta.is_none() {
                let m = argmax[0];
                Some(EquiWitness {
                    member: m,
                    member_id: family.ids()[m].clone(),
                    h: h_grid[0],
                    omega: omegas[m][0],
                })
            } else {
                None
            };
            EpsEntry { eps, delta, witness }
        })
        .collect();

    let verdict = if !bound_m.is_finite() {
        Verdict::FailsBoundedness
    } else if equi.iter().any(|e| e.delta.is_none()) {
        Verdict::FailsEquiContinuity
    } else {
        Verdict::TotallyBoundedEvidence
    };

    Ok(CompactnessReport {
        bound_m,
        per_member_norms,
        h_grid: h_grid.to_vec(),
        sup_omega,
        equi,
        verdict,
        note: FINITE_PROXY_NOTE,
    })
}

impl CompactnessReport {
    pub fn eps_delta_table(&self) -> Vec<(f64, Option<f64>)> {
        self.equi.iter().map(|e| (e.eps, e.delta)).collect()
    }
}
