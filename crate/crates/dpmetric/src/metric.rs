use crate::quad::{merge_levels, trapezoid_weights, weighted_lp};
use crate::{MetricError, PNorm, Result};
use levelset::{FuzzySet, SupportKind};
use setgeom::{hausdorff, GeomError};

/// The `d_p` distance. Grids are merged by refinement before integration;
/// integration runs over `(0, 1]`, so the 0-cut is never needed and
/// unbounded-support inputs are fine.
pub fn dp_distance(u: &FuzzySet, v: &FuzzySet, p: PNorm) -> Result<f64> {
    Ok(dp_distance_detail(u, v, p)?.value)
}

/// `dp_distance` plus the grid-merging report.
#[derive(Debug, Clone, PartialEq)]
pub struct DistDetail {
    pub value: f64,
    /// Number of merged quadrature nodes.
    pub merged_levels: usize,
    /// Mass of the segment below the merged grid floor, where both cut
    /// families are held constant by the step convention. For `LpTail`
    /// operands the true integrand is unknown there, so this is the honest
    /// remainder scale rather than an error bound.
    pub floor_mass: f64,
    /// Level-wise Hausdorff distance at the grid floor.
    pub floor_integrand: f64,
}

pub fn dp_distance_detail(u: &FuzzySet, v: &FuzzySet, p: PNorm) -> Result<DistDetail> {
    if u.dim() != v.dim() {
        return Err(MetricError::Geom(GeomError::DimMismatch(u.dim(), v.dim())));
    }
    let nodes = merge_levels(u.grid().levels(), v.grid().levels());
    let weights = trapezoid_weights(&nodes, true);
    let mut values = Vec::with_capacity(nodes.len());
    for &a in &nodes {
        values.push(hausdorff(u.cut_clamped(a), v.cut_clamped(a))?);
    }
    Ok(DistDetail {
        value: weighted_lp(&values, &weights, p.get()),
        merged_levels: nodes.len(),
        floor_mass: nodes[0],
        floor_integrand: values[0],
    })
}

/// `d_p(u, crisp origin)`: the L_p extension norm of condition (iv-2) and
/// the quantity bounded by a uniform p-mean bound. The level-wise distance
/// to `{0}` is the max norm over the cut, attained at interval endpoints or
/// polygon vertices.
pub fn lp_extension_norm(u: &FuzzySet, p: PNorm) -> f64 {
    let values: Vec<f64> = u.cuts().iter().map(|c| c.max_norm()).collect();
    weighted_lp(&values, u.grid().weights(), p.get())
}

/// The ball residual `|u|^r`: level-wise excess of the cut over the closed
/// origin ball of radius `r`, integrated in `L_p`. Zero exactly when the
/// support sits inside the ball, which needs the full support — `LpTail`
/// inputs are rejected.
pub fn ball_residual(u: &FuzzySet, r: f64, p: PNorm) -> Result<f64> {
    if !(r > 0.0) {
        return Err(MetricError::BadRadius(r));
    }
    if u.support_kind() == SupportKind::LpTail {
        return Err(MetricError::Level(levelset::LevelError::UnboundedSupport));
    }
    let values: Vec<f64> = u.cuts().iter().map(|c| c.excess_over_ball(r)).collect();
    Ok(weighted_lp(&values, u.grid().weights(), p.get()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use levelset::{AlphaGrid, FuzzySet, SupportKind};
    use setgeom::CutSet;

    fn p(x: f64) -> PNorm {
        PNorm::new(x).unwrap()
    }

    #[test]
    fn identity() {
        let u = FuzzySet::crisp(CutSet::interval(0.0, 1.0).unwrap());
        for q in [1.0, 2.0, 7.5] {
            assert_eq!(dp_distance(&u, &u, p(q)).unwrap(), 0.0);
        }
    }

    #[test]
    fn crisp_points_reduce_to_euclidean() {
        let a = FuzzySet::crisp(CutSet::point_1d(-1.5).unwrap());
        let b = FuzzySet::crisp(CutSet::point_1d(2.0).unwrap());
        for q in [1.0, 2.0, 4.0] {
            let d = dp_distance(&a, &b, p(q)).unwrap();
            assert!((d - 3.5).abs() < 1e-12, "constant integrand, got {d}");
        }
    }

    #[test]
    fn infinity_p_is_rejected() {
        assert!(PNorm::new(f64::INFINITY).is_err());
        assert!(PNorm::new(0.5).is_err());
        assert!(PNorm::new(f64::NAN).is_err());
        assert!(PNorm::new(1.0).is_ok());
    }

    #[test]
    fn extension_norm_examples() {
        let origin = FuzzySet::crisp_origin(1);
        assert_eq!(lp_extension_norm(&origin, p(1.0)), 0.0);
        let far = FuzzySet::crisp(CutSet::point_1d(-3.0).unwrap());
        assert_eq!(lp_extension_norm(&far, p(2.0)), 3.0);
    }

    #[test]
    fn ball_residual_examples() {
        // support inside the ball
        let inside = FuzzySet::crisp(CutSet::interval(-0.25, 0.5).unwrap());
        assert_eq!(ball_residual(&inside, 1.0, p(1.0)).unwrap(), 0.0);
        // crisp point at 2, r = 1: distance 1 for every p
        let pt = FuzzySet::crisp(CutSet::point_1d(2.0).unwrap());
        for q in [1.0, 2.0, 4.0] {
            assert_eq!(ball_residual(&pt, 1.0, p(q)).unwrap(), 1.0);
        }
        // lp_tail is rejected
        let grid = AlphaGrid::new(vec![0.5, 1.0]).unwrap();
        let tail = FuzzySet::new(
            grid,
            vec![
                CutSet::interval(0.0, 4.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::LpTail,
        )
        .unwrap();
        assert!(ball_residual(&tail, 1.0, p(1.0)).is_err());
    }

    #[test]
    fn dim_mismatch() {
        let a = FuzzySet::crisp(CutSet::point_1d(0.0).unwrap());
        let b = FuzzySet::crisp_origin(2);
        assert!(dp_distance(&a, &b, p(1.0)).is_err());
    }
}
