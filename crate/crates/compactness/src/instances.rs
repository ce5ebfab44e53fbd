//! Reference families used by the diagnostics and the command-line
//! generators: the exponential-decay family whose limit leaves the
//! compact-support space, the piecewise-linear family whose truncations at
//! level 1/3 split along parity, the dyadic spike family falsifying
//! equi-left-continuity, and translate families of a triangular number.
//!
//! Grids carry the levels where the cut formulas kink, plus a guard level
//! 1e-9 above each jump, so the trapezoid quadrature reproduces the
//! closed-form distances of these families to float accuracy.

use crate::{Family, Result};
use dpmetric::PNorm;
use levelset::{AlphaGrid, FuzzySet, SupportKind};
use setgeom::CutSet;

/// Gap between a jump level and its guard node.
pub const JUMP_GUARD: f64 = 1e-9;

fn right_endpoint_family(
    grid: &AlphaGrid,
    support: SupportKind,
    endpoint: impl Fn(f64) -> f64,
) -> FuzzySet {
    let cuts = grid
        .levels()
        .iter()
        .map(|&a| CutSet::interval(0.0, endpoint(a).max(0.0)).unwrap())
        .collect();
    FuzzySet::new(grid.clone(), cuts, support).expect("endpoint families are nested")
}

/// Graded grid for the exponential-decay family: geometric levels from
/// `2^-40` to 1, refined with the kink levels `e^-k` (k <= kink_max) and
/// the truncation levels `1/k` (k <= 16).
pub fn decay_grid(count: usize, kink_max: usize) -> AlphaGrid {
    let base = AlphaGrid::geometric(count, 2f64.powi(-40)).expect("geometric grid");
    let mut extra: Vec<f64> = (1..=kink_max).map(|k| (-(k as f64)).exp()).collect();
    extra.extend((1..=16).map(|k| 1.0 / k as f64));
    base.refine(&extra).expect("refined grid")
}

/// `u_n`: membership `e^-x` on `[0, n]`, cuts `[0, min(n, -ln a)]`.
pub fn decay_member(n: usize, grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::Bounded, |a| (-a.ln()).min(n as f64))
}

/// The `d_p` limit of the decay family: membership `e^-x` on `[0, inf)`,
/// cuts `[0, -ln a]`, unbounded support.
pub fn decay_limit(grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::LpTail, |a| -a.ln())
}

/// The decay family `u_1, ..., u_n_max` as an ordered sequence.
pub fn decay_family(n_max: usize, grid: &AlphaGrid, p: PNorm) -> Family {
    let members = (1..=n_max).map(|n| decay_member(n, grid)).collect();
    let ids = (1..=n_max).map(|n| format!("u{n}")).collect();
    Family::new(members, ids, p).expect("decay family")
}

const THIRD: f64 = 1.0 / 3.0;

/// Shared grid of the parity-split family: `base` uniform levels, the kink
/// levels `1/3 - 1/(n+3)` for n <= kink_max, the split level 1/3 and its
/// jump guard.
pub fn parity_grid(base: usize, kink_max: usize) -> AlphaGrid {
    let uniform = AlphaGrid::uniform(base, 1.0 / base as f64).expect("uniform base");
    let mut extra: Vec<f64> = (1..=kink_max)
        .map(|n| THIRD - 1.0 / (n as f64 + 3.0))
        .collect();
    extra.push(THIRD);
    extra.push(THIRD + JUMP_GUARD);
    uniform.refine(&extra).expect("refined grid")
}

fn parity_endpoint(n: usize, a: f64) -> f64 {
    let c = n as f64 + 3.0;
    if a > THIRD {
        (1.0 - a) / 2.0
    } else if a >= THIRD - 1.0 / c {
        if n % 2 == 1 {
            THIRD + (2.0 * c / 3.0) * (THIRD - a)
        } else {
            2.0 * THIRD + (c / 3.0) * (THIRD - a)
        }
    } else {
        1.0
    }
}

/// Member `u_n` of the parity-split family: `1 - 2x` on `[0, 1/3]`, then a
/// slope that decays with `n`, with the even members holding a plateau up
/// to `2/3` first. `d_1(u_n, u_0)` is `1/(3(n+3))` for odd n and
/// `1/(6(n+3))` for even n.
pub fn parity_member(n: usize, grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::Bounded, |a| parity_endpoint(n, a))
}

/// The `d_p` limit `u_0`: cuts `[0, (1-a)/2]` above 1/3 and `[0, 1]` at or
/// below it.
pub fn parity_limit(grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::Bounded, |a| {
        if a > THIRD {
            (1.0 - a) / 2.0
        } else {
            1.0
        }
    })
}

/// Limit of the odd truncations at 1/3: `1 - 2x` on `[0, 1/3]` alone.
pub fn parity_v(grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::Bounded, |a| {
        if a > THIRD {
            (1.0 - a) / 2.0
        } else {
            THIRD
        }
    })
}

/// Limit of the even truncations at 1/3: the plateau reaches 2/3.
pub fn parity_w(grid: &AlphaGrid) -> FuzzySet {
    right_endpoint_family(grid, SupportKind::Bounded, |a| {
        if a > THIRD {
            (1.0 - a) / 2.0
        } else {
            2.0 * THIRD
        }
    })
}

pub fn parity_family(n_max: usize, grid: &AlphaGrid, p: PNorm) -> Family {
    let members = (1..=n_max).map(|n| parity_member(n, grid)).collect();
    let ids = (1..=n_max).map(|n| format!("u{n}")).collect();
    Family::new(members, ids, p).expect("parity family")
}

/// The equi-continuity counterexample: member `k` has cut `[0, 1]` at
/// levels `>= 2^-k` and `[0, 2^(k/p)]` below, so each member is p-mean
/// left-continuous but the family modulus stays near 1 at `h ~ 2^-k`.
/// Guard levels sit an absolute 1e-9 below each dyadic threshold.
pub fn spike_family(k_max: usize, p: PNorm) -> Family {
    let mut levels = Vec::with_capacity(2 * k_max + 1);
    for j in (1..=k_max).rev() {
        let step = 2f64.powi(-(j as i32));
        levels.push(step - JUMP_GUARD);
        levels.push(step);
    }
    levels.push(1.0);
    levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    levels.dedup();
    let grid = AlphaGrid::new(levels).expect("spike grid");

    let members: Vec<FuzzySet> = (1..=k_max)
        .map(|k| {
            let threshold = 2f64.powi(-(k as i32));
            let tall = 2f64.powf(k as f64 / p.get());
            right_endpoint_family(&grid, SupportKind::Bounded, |a| {
                if a >= threshold {
                    1.0
                } else {
                    tall
                }
            })
        })
        .collect();
    let ids = (1..=k_max).map(|k| format!("u{k}")).collect();
    Family::new(members, ids, p).expect("spike family")
}

/// `count` translates of the triangular number with cuts
/// `[t + a - 1, t + 1 - a]`, shifts equally spaced on `[0, shift_max]`.
/// The distance between translates is the shift distance for every p.
pub fn translate_family(count: usize, shift_max: f64, p: PNorm) -> Family {
    let grid = AlphaGrid::uniform(1024, 1.0 / 1024.0).expect("uniform grid");
    let members: Vec<FuzzySet> = (0..count)
        .map(|i| {
            let t = if count == 1 {
                0.0
            } else {
                shift_max * i as f64 / (count - 1) as f64
            };
            let cuts = grid
                .levels()
                .iter()
                .map(|&a| CutSet::interval(t + a - 1.0, t + 1.0 - a).unwrap())
                .collect();
            FuzzySet::new(grid.clone(), cuts, SupportKind::Bounded).unwrap()
        })
        .collect();
    let ids = (0..count).map(|i| format!("t{i}")).collect();
    Family::new(members, ids, p).expect("translate family")
}

/// Convenience: crisp points as a family.
pub fn crisp_point_family(xs: &[f64], p: PNorm) -> Result<Family> {
    let members = xs
        .iter()
        .map(|&x| FuzzySet::crisp(CutSet::point_1d(x).unwrap()))
        .collect();
    Family::with_default_ids(members, p)
}
