use crate::{AlphaGrid, LevelError, Result};
use setgeom::{CutSet, GEOM_TOL};

/// Whether the 0-cut is compact.
///
/// `LpTail` marks elements with a finite `L_p` extension norm whose support
/// is unbounded; their 0-cut is not stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportKind {
    Bounded,
    LpTail,
}

/// A validated fuzzy set: one compact cut per grid level, nested downward.
///
/// Values are immutable after construction; all operations are pure, so
/// sharing across threads is safe.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    grid: AlphaGrid,
    cuts: Vec<CutSet>,
    support: SupportKind,
}

impl FuzzySet {
    /// Validating constructor. Enforces one cut per level, uniform
    /// dimension, and nestedness `cuts[j] ⊇ cuts[k]` for `j < k` (checked on
    /// adjacent pairs, which implies the chain). Normality is structural:
    /// cuts are nonempty by construction, and an empty raw top level is
    /// reported as `EmptyTopCut` by the file loader.
    pub fn new(grid: AlphaGrid, cuts: Vec<CutSet>, support: SupportKind) -> Result<Self> {
        if cuts.len() != grid.len() {
            return Err(LevelError::CutCountMismatch {
                levels: grid.len(),
                cuts: cuts.len(),
            });
        }
        let dim = cuts[0].dim();
        if cuts.iter().any(|c| c.dim() != dim) {
            return Err(LevelError::MixedDims);
        }
        for (j, pair) in cuts.windows(2).enumerate() {
            if !pair[0].contains(&pair[1], GEOM_TOL) {
                return Err(LevelError::NestednessViolation {
                    lower: grid.levels()[j],
                    upper: grid.levels()[j + 1],
                });
            }
        }
        Ok(FuzzySet {
            grid,
            cuts,
            support,
        })
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn cuts(&self) -> &[CutSet] {
        &self.cuts
    }

    pub fn support_kind(&self) -> SupportKind {
        self.support
    }

    pub fn dim(&self) -> usize {
        self.cuts[0].dim()
    }

    /// The alpha-cut at `alpha` in `(0, 1]`: the stored cut at the smallest
    /// grid level `>= alpha` (step convention, exact at grid levels).
    pub fn cut(&self, alpha: f64) -> Result<&CutSet> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(LevelError::InvalidAlpha(alpha));
        }
        Ok(&self.cuts[self.grid.ceil_index(alpha)])
    }

    /// Step-floor evaluation that also accepts `alpha <= 0` (returns the
    /// bottom stored cut). Metric integrands use this for shifted levels.
    pub fn cut_clamped(&self, alpha: f64) -> &CutSet {
        if alpha <= self.grid.levels()[0] {
            &self.cuts[0]
        } else {
            &self.cuts[self.grid.ceil_index(alpha)]
        }
    }

    /// The 0-cut. For bounded support this is the closed union of all cuts,
    /// which under the step convention is the bottom stored cut; for
    /// `LpTail` it is not representable.
    pub fn support_cut(&self) -> Result<&CutSet> {
        match self.support {
            SupportKind::Bounded => Ok(&self.cuts[0]),
            SupportKind::LpTail => Err(LevelError::UnboundedSupport),
        }
    }

    /// The truncation `u^(alpha)`: cuts above `alpha` unchanged, every cut
    /// at a level `<= alpha` frozen to `cut(alpha)`. The result always has
    /// bounded support.
    pub fn truncate(&self, alpha: f64) -> Result<FuzzySet> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(LevelError::InvalidAlpha(alpha));
        }
        let frozen = self.cut(alpha)?.clone();
        let cuts = self
            .grid
            .levels()
            .iter()
            .zip(&self.cuts)
            .map(|(&l, c)| if l <= alpha { frozen.clone() } else { c.clone() })
            .collect();
        FuzzySet::new(self.grid.clone(), cuts, SupportKind::Bounded)
    }

    /// Debug view of the reconstructed membership value at a point: the
    /// largest grid level whose cut contains `x`, 0 when none does. On a
    /// finite grid this is a step function; no semantics between levels is
    /// promised.
    pub fn membership(&self, x: setgeom::Point) -> f64 {
        self.grid
            .levels()
            .iter()
            .zip(&self.cuts)
            .rev()
            .find(|(_, c)| c.dist_point(x) <= GEOM_TOL)
            .map(|(&l, _)| l)
            .unwrap_or(0.0)
    }

    /// The crisp fuzzy set of a single compact set on the trivial grid.
    pub fn crisp(cut: CutSet) -> FuzzySet {
        FuzzySet {
            grid: AlphaGrid::new(vec![1.0]).expect("trivial grid"),
            cuts: vec![cut],
            support: SupportKind::Bounded,
        }
    }

    /// The crisp origin of the given dimension.
    pub fn crisp_origin(dim: usize) -> FuzzySet {
        let cut = if dim == 1 {
            CutSet::point_1d(0.0).unwrap()
        } else {
            CutSet::points(vec![[0.0, 0.0]]).unwrap()
        };
        FuzzySet::crisp(cut)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid2() -> AlphaGrid {
        AlphaGrid::new(vec![0.5, 1.0]).unwrap()
    }

    #[test]
    fn nested_pair_is_valid() {
        let u = FuzzySet::new(
            grid2(),
            vec![
                CutSet::interval(0.0, 2.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::Bounded,
        );
        assert!(u.is_ok());
    }

    #[test]
    fn reversed_nesting_is_rejected_with_levels() {
        let err = FuzzySet::new(
            grid2(),
            vec![
                CutSet::interval(0.0, 1.0).unwrap(),
                CutSet::interval(0.0, 2.0).unwrap(),
            ],
            SupportKind::Bounded,
        )
        .unwrap_err();
        assert_eq!(
            err,
            LevelError::NestednessViolation {
                lower: 0.5,
                upper: 1.0
            }
        );
    }

    #[test]
    fn cut_uses_step_convention() {
        // triangular number on a grid containing 0.25: [alpha-1, 1-alpha]
        let levels: Vec<f64> = (1..=100).map(|i| i as f64 / 100.0).collect();
        let grid = AlphaGrid::new(levels.clone()).unwrap();
        let cuts = levels
            .iter()
            .map(|&a| CutSet::interval(a - 1.0, 1.0 - a).unwrap())
            .collect();
        let u = FuzzySet::new(grid, cuts, SupportKind::Bounded).unwrap();

        // peak: degenerate interval at the top level
        assert_eq!(u.cut(1.0).unwrap(), &CutSet::interval(0.0, 0.0).unwrap());
        // 0.25 is a grid level, so the cut there is exact
        assert_eq!(
            u.cut(0.25).unwrap(),
            &CutSet::interval(-0.75, 0.75).unwrap()
        );
        // between levels: smallest grid level >= alpha
        assert_eq!(
            u.cut(0.251).unwrap(),
            &CutSet::interval(-0.74, 0.74).unwrap()
        );
        // descending step function of alpha
        for pair in [(0.1, 0.9), (0.3, 0.31), (0.99, 1.0)] {
            assert!(u
                .cut(pair.0)
                .unwrap()
                .contains(u.cut(pair.1).unwrap(), 0.0));
        }
    }

    #[test]
    fn truncate_top_level_gives_crisp_family() {
        let u = FuzzySet::new(
            grid2(),
            vec![
                CutSet::interval(0.0, 2.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::Bounded,
        )
        .unwrap();
        let t = u.truncate(1.0).unwrap();
        for c in t.cuts() {
            assert_eq!(c, &CutSet::interval(0.0, 1.0).unwrap());
        }
        assert_eq!(t.support_kind(), SupportKind::Bounded);
    }

    #[test]
    fn truncation_composes_as_max_at_grid_levels() {
        let levels: Vec<f64> = (1..=16).map(|i| i as f64 / 16.0).collect();
        let grid = AlphaGrid::new(levels.clone()).unwrap();
        let cuts = levels
            .iter()
            .map(|&a| CutSet::interval(0.0, 2.0 - a).unwrap())
            .collect();
        let u = FuzzySet::new(grid, cuts, SupportKind::Bounded).unwrap();
        let a = 4.0 / 16.0;
        let b = 9.0 / 16.0;
        let lhs = u.truncate(a).unwrap().truncate(b).unwrap();
        let rhs = u.truncate(b).unwrap();
        assert_eq!(lhs, rhs);
        let sym = u.truncate(b).unwrap().truncate(a).unwrap();
        assert_eq!(sym, rhs);
    }

    #[test]
    fn unbounded_support_is_guarded() {
        let u = FuzzySet::new(
            grid2(),
            vec![
                CutSet::interval(0.0, 5.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::LpTail,
        )
        .unwrap();
        assert_eq!(u.support_cut(), Err(LevelError::UnboundedSupport));
        // truncation restores bounded support
        assert_eq!(
            u.truncate(0.5).unwrap().support_kind(),
            SupportKind::Bounded
        );
    }

    #[test]
    fn membership_debug_view() {
        let u = FuzzySet::new(
            grid2(),
            vec![
                CutSet::interval(0.0, 2.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::Bounded,
        )
        .unwrap();
        assert_eq!(u.membership([0.5, 0.0]), 1.0);
        assert_eq!(u.membership([1.5, 0.0]), 0.5);
        assert_eq!(u.membership([3.0, 0.0]), 0.0);
    }
}
