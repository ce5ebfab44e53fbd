use crate::{FuzzySet, SupportKind};
use serde::Serialize;
use setgeom::{is_convex, is_star_shaped, kernel, representative_point, CutSet, GEOM_TOL};

/// Space-taxonomy label of a fuzzy set, finest applicable first:
/// every cut convex (`E`), star-shaped cuts with a common kernel point
/// containing the origin (`S0`) or not (`S`), star-shaped per level without
/// a common kernel point (`Stilde`), otherwise the general family (`Fb`,
/// or `FbpOnly` when the support is unbounded).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceLabel {
    E,
    S0,
    S,
    Stilde,
    Fb,
    FbpOnly,
}

/// Classification result with its witness: a common kernel point for the
/// star classes, per-level star centers when no common point exists, or the
/// offending level when star-shapedness fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpaceClass {
    pub label: SpaceLabel,
    /// All predicate outcomes, so inclusion-chain checks do not have to
    /// recompute geometry: convex => star with common kernel => per-level
    /// star.
    pub all_convex: bool,
    pub common_kernel: bool,
    pub all_star: bool,
    pub kernel_point: Option<[f64; 2]>,
    pub per_level_centers: Option<Vec<(f64, [f64; 2])>>,
    pub violation: Option<(f64, String)>,
}

/// Per-level cut kernel, with single points treated as trivially
/// star-shaped (their kernel is themselves).
fn level_kernel(cut: &CutSet) -> Option<CutSet> {
    match cut {
        CutSet::Points(pts) if pts.len() == 1 => Some(cut.clone()),
        CutSet::Points(_) => None,
        _ => kernel(cut).ok(),
    }
}

fn level_convex(cut: &CutSet) -> bool {
    is_convex(cut)
}

fn level_star(cut: &CutSet) -> bool {
    match cut {
        CutSet::Points(pts) => pts.len() == 1,
        _ => is_star_shaped(cut).unwrap_or(false),
    }
}

pub fn classify(u: &FuzzySet) -> SpaceClass {
    let levels = u.grid().levels();
    let mut all_convex = true;
    let mut all_star = true;
    let mut violation = None;
    let mut kernels: Vec<(f64, CutSet)> = Vec::with_capacity(levels.len());

    for (&alpha, cut) in levels.iter().zip(u.cuts()) {
        if !level_convex(cut) {
            all_convex = false;
        }
        match level_kernel(cut) {
            Some(k) => kernels.push((alpha, k)),
            None => {
                all_star = false;
                if violation.is_none() {
                    let reason = match cut {
                        CutSet::Intervals(parts) => {
                            format!("cut splits into {} components", parts.len())
                        }
                        CutSet::Points(pts) => {
                            format!("point cloud of {} points is not star-shaped", pts.len())
                        }
                        CutSet::Polygon(_) => "polygon kernel is empty".into(),
                    };
                    violation = Some((alpha, reason));
                }
                if !level_star(cut) {
                    // recorded above; keep scanning for convexity flags
                }
            }
        }
    }

    // intersect the per-level kernels bottom-up; kernels are convex, so the
    // running intersection stays convex and computable
    let mut common: Option<CutSet> = None;
    if all_star {
        common = kernels.first().map(|(_, k)| k.clone());
        for (_, k) in kernels.iter().skip(1) {
            common = match common {
                Some(acc) => acc.intersect(k),
                None => None,
            };
            if common.is_none() {
                break;
            }
        }
    }

    let kernel_point = common.as_ref().map(|k| representative_point(k));
    let origin_in_common = common
        .as_ref()
        .map(|k| k.dist_point([0.0, 0.0]) <= GEOM_TOL)
        .unwrap_or(false);

    let label = if !all_star {
        match u.support_kind() {
            SupportKind::Bounded => SpaceLabel::Fb,
            SupportKind::LpTail => SpaceLabel::FbpOnly,
        }
    } else if all_convex {
        SpaceLabel::E
    } else if common.is_some() {
        if origin_in_common {
            SpaceLabel::S0
        } else {
            SpaceLabel::S
        }
    } else {
        SpaceLabel::Stilde
    };

    let per_level_centers = if all_star && common.is_none() {
        Some(
            kernels
                .iter()
                .map(|(a, k)| (*a, representative_point(k)))
                .collect(),
        )
    } else {
        None
    };

    SpaceClass {
        label,
        all_convex,
        common_kernel: common.is_some(),
        all_star,
        kernel_point,
        per_level_centers,
        violation,
    }
}
