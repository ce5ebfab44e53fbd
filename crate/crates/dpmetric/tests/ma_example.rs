//! Closed-form checks on the exponential-decay family
//! `u_n = e^{-x} on [0, n]` and its unbounded-support limit `u = e^{-x}`:
//! cuts are `[0, min(n, -ln a)]` and `[0, -ln a]`, so
//! `d_1(u_n, u) = integral_0^{e^{-n}} (-ln a - n) da = e^{-n}` and
//! `d_1(u^{(1/n)}, u) = integral_0^{1/n} ln(1/(n a)) da = 1/n` exactly.

use dpmetric::{dp_distance, lp_extension_norm, p_mean_modulus, PNorm};
use levelset::{AlphaGrid, FuzzySet, SupportKind};
use setgeom::CutSet;

fn graded_grid(count: usize, n_max: usize) -> AlphaGrid {
    let base = AlphaGrid::geometric(count, 2f64.powi(-40)).unwrap();
    let mut extra: Vec<f64> = (1..=n_max).map(|n| (-(n as f64)).exp()).collect();
    extra.extend((1..=16).map(|n| 1.0 / n as f64));
    base.refine(&extra).unwrap()
}

fn decay_member(n: usize, grid: &AlphaGrid) -> FuzzySet {
    let cuts = grid
        .levels()
        .iter()
        .map(|&a| CutSet::interval(0.0, (-a.ln()).min(n as f64).max(0.0)).unwrap())
        .collect();
    FuzzySet::new(grid.clone(), cuts, SupportKind::Bounded).unwrap()
}

fn decay_limit(grid: &AlphaGrid) -> FuzzySet {
    let cuts = grid
        .levels()
        .iter()
        .map(|&a| CutSet::interval(0.0, (-a.ln()).max(0.0)).unwrap())
        .collect();
    FuzzySet::new(grid.clone(), cuts, SupportKind::LpTail).unwrap()
}

#[test]
fn cut_at_grid_level_is_exact() {
    let grid = graded_grid(4096, 10);
    let u = decay_limit(&grid);
    let a = (-2.0f64).exp();
    let cut = u.cut(a).unwrap();
    let expect = CutSet::interval(0.0, 2.0).unwrap();
    assert!(cut.approx_eq(&expect, 1e-12), "[u]_(e^-2) = [0, 2], got {cut:?}");
}

#[test]
fn distance_to_limit_matches_closed_form() {
    let grid = graded_grid(4096, 10);
    let u = decay_limit(&grid);
    for n in 1..=10usize {
        let un = decay_member(n, &grid);
        let d = dp_distance(&un, &u, PNorm::new(1.0).unwrap()).unwrap();
        let exact = (-(n as f64)).exp();
        let rel = (d - exact).abs() / exact;
        assert!(rel < 1e-3, "n={n}: d={d}, exact={exact}, rel={rel}");
    }
    // frozen spot value: e^{-2} = 0.13533528323661270
    let d2 = dp_distance(&decay_member(2, &grid), &u, PNorm::new(1.0).unwrap()).unwrap();
    assert!((d2 - 0.13533528323661270).abs() < 1e-4);
}

#[test]
fn truncation_density_is_one_over_n() {
    let grid = graded_grid(16384, 16);
    let u = decay_limit(&grid);
    let mut prev = f64::INFINITY;
    for n in [2usize, 4, 8, 16] {
        let t = u.truncate(1.0 / n as f64).unwrap();
        assert_eq!(t.support_kind(), SupportKind::Bounded);
        // truncation support is [0, ln n]
        let sup = t.support_cut().unwrap();
        assert!(sup.approx_eq(
            &CutSet::interval(0.0, (n as f64).ln()).unwrap(),
            1e-9
        ));
        let d = dp_distance(&t, &u, PNorm::new(1.0).unwrap()).unwrap();
        let exact = 1.0 / n as f64;
        assert!(
            (d - exact).abs() < 1e-6,
            "n={n}: d={d} vs exact {exact}"
        );
        assert!(d <= prev, "density distances must not increase");
        prev = d;
    }
}

#[test]
fn extension_norm_of_limit_is_one() {
    let grid = graded_grid(4096, 10);
    let u = decay_limit(&grid);
    let m = lp_extension_norm(&u, PNorm::new(1.0).unwrap());
    assert!((m - 1.0).abs() < 1e-4, "integral of -ln a over (0,1] is 1, got {m}");
}

#[test]
fn modulus_of_limit_matches_quadrature_oracle() {
    // omega(u, 0.1) at p=1 is integral_{0.1}^{1} ln(a/(a-0.1)) da, whose
    // antiderivative evaluates to 0.32508297339... The sampled object holds
    // cuts one grid cell to the right of the continuum between levels, so
    // the match is only as good as the grid ratio (~0.7% here).
    let grid = graded_grid(4096, 10);
    let u = decay_limit(&grid);
    let w = p_mean_modulus(&u, 0.1, PNorm::new(1.0).unwrap()).unwrap();
    assert!((w - 0.3250829733914482).abs() < 2e-3, "got {w}");
}
