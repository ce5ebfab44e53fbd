use crate::{LevelError, Result};

/// A strictly increasing finite grid of membership levels in `(0, 1]` with
/// the top level pinned to exactly 1, plus per-node quadrature weights.
///
/// The weights implement a trapezoid rule on the nodes with the mass of the
/// bottom segment `(0, levels[0]]` attached to the first node (cuts are
/// constant below the grid floor by the step convention). They are strictly
/// positive and sum to 1, so every `(sum w_j x_j^p)^(1/p)` downstream is an
/// `L_p` norm against a probability measure on `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid {
    levels: Vec<f64>,
    weights: Vec<f64>,
}

impl AlphaGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(LevelError::BadGrid("no levels".into()));
        }
        for w in levels.windows(2) {
            if !(w[0] < w[1]) {
                return Err(LevelError::BadGrid(format!(
                    "levels not strictly increasing at {} -> {}",
                    w[0], w[1]
                )));
            }
        }
        if !(levels[0] > 0.0) || !levels[0].is_finite() {
            return Err(LevelError::BadGrid(format!(
                "lowest level {} must be in (0, 1]",
                levels[0]
            )));
        }
        if *levels.last().unwrap() != 1.0 {
            return Err(LevelError::BadGrid(format!(
                "top level must equal 1 exactly, got {}",
                levels.last().unwrap()
            )));
        }
        let weights = node_weights(&levels);
        Ok(AlphaGrid { levels, weights })
    }

    /// `count` uniformly spaced levels on `[alpha_min, 1]`.
    pub fn uniform(count: usize, alpha_min: f64) -> Result<Self> {
        if count < 2 {
            return Err(LevelError::BadGrid("uniform grid needs >= 2 levels".into()));
        }
        let mut levels: Vec<f64> = (0..count)
            .map(|i| alpha_min + (1.0 - alpha_min) * i as f64 / (count - 1) as f64)
            .collect();
        *levels.last_mut().unwrap() = 1.0;
        AlphaGrid::new(levels)
    }

    /// `count` geometrically spaced levels from `floor` up to 1.
    pub fn geometric(count: usize, floor: f64) -> Result<Self> {
        if count < 2 || !(floor > 0.0 && floor < 1.0) {
            return Err(LevelError::BadGrid("bad geometric grid parameters".into()));
        }
        let ln_floor = floor.ln();
        let mut levels: Vec<f64> = (0..count)
            .map(|i| (ln_floor * (1.0 - i as f64 / (count - 1) as f64)).exp())
            .collect();
        levels[0] = floor;
        *levels.last_mut().unwrap() = 1.0;
        AlphaGrid::new(levels)
    }

    /// Default grid for bounded-support sets: 1024 uniform levels on
    /// `[alpha_min, 1]`.
    pub fn default_bounded(alpha_min: f64) -> Result<Self> {
        AlphaGrid::uniform(1024, alpha_min)
    }

    /// Default grid for `LpTail` sets: uniform levels on `[alpha_min, 1]`
    /// plus the geometric tail `alpha_min * 2^-j` down to `2^-40`. A uniform
    /// grid near 0 under-resolves slowly decaying cut families, the tail
    /// does not.
    pub fn default_lp_tail(alpha_min: f64) -> Result<Self> {
        let mut levels: Vec<f64> = Vec::new();
        let mut a = alpha_min / 2.0;
        while a >= 2f64.powi(-40) {
            levels.push(a);
            a /= 2.0;
        }
        levels.reverse();
        let uniform = AlphaGrid::uniform(1024, alpha_min)?;
        levels.extend_from_slice(uniform.levels());
        AlphaGrid::new(levels)
    }

    /// The grid refined with extra levels (values outside `(0, 1]` are
    /// ignored, duplicates deduped).
    pub fn refine(&self, extra: &[f64]) -> Result<Self> {
        let mut levels = self.levels.clone();
        levels.extend(extra.iter().copied().filter(|a| *a > 0.0 && *a <= 1.0));
        levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
        levels.dedup();
        AlphaGrid::new(levels)
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the smallest level `>= alpha`, with a small absolute snap
    /// so that float drift from shifted-level arithmetic
    /// (`level + h - h`) cannot flip the lookup across a level. Levels
    /// meant to be distinct must be separated by more than the snap (jump
    /// guards use 1e-9 gaps); values at or below the grid floor map to the
    /// floor index.
    pub fn ceil_index(&self, alpha: f64) -> usize {
        let idx = self.levels.partition_point(|l| *l < alpha - LEVEL_SNAP);
        idx.min(self.levels.len() - 1)
    }
}

/// Absolute snap for level lookups, a few ulps of unit scale.
pub const LEVEL_SNAP: f64 = 1e-15;

/// Trapezoid node weights over `(0, 1]` for an ascending level set: the
/// bottom segment mass `levels[0]` goes to node 0, every cell
/// `(l_{j-1}, l_j]` contributes half its width to each bounding node.
pub fn node_weights(levels: &[f64]) -> Vec<f64> {
    let n = levels.len();
    let mut w = vec![0.0; n];
    w[0] = levels[0];
    for j in 1..n {
        let half = (levels[j] - levels[j - 1]) / 2.0;
        w[j - 1] += half;
        w[j] += half;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for grid in [
            AlphaGrid::uniform(7, 0.25).unwrap(),
            AlphaGrid::uniform(1024, 1e-3).unwrap(),
            AlphaGrid::geometric(64, 1e-6).unwrap(),
            AlphaGrid::default_lp_tail(1e-3).unwrap(),
            AlphaGrid::new(vec![1.0]).unwrap(),
        ] {
            let sum: f64 = grid.weights().iter().sum();
            assert!((sum - 1.0).abs() < 1e-12, "sum {sum}");
            assert!(grid.weights().iter().all(|w| *w > 0.0));
        }
    }

    #[test]
    fn top_level_must_be_one() {
        assert!(AlphaGrid::new(vec![0.5, 0.9]).is_err());
        assert!(AlphaGrid::new(vec![0.5, 1.0]).is_ok());
    }

    #[test]
    fn rejects_non_increasing_or_nonpositive() {
        assert!(AlphaGrid::new(vec![0.5, 0.5, 1.0]).is_err());
        assert!(AlphaGrid::new(vec![0.0, 1.0]).is_err());
        assert!(AlphaGrid::new(vec![-0.1, 1.0]).is_err());
    }

    #[test]
    fn ceil_index_is_exact_at_levels() {
        let g = AlphaGrid::new(vec![0.25, 0.5, 1.0]).unwrap();
        assert_eq!(g.ceil_index(0.25), 0);
        assert_eq!(g.ceil_index(0.26), 1);
        assert_eq!(g.ceil_index(0.5), 1);
        assert_eq!(g.ceil_index(0.75), 2);
        assert_eq!(g.ceil_index(1.0), 2);
        assert_eq!(g.ceil_index(0.1), 0);
    }
}
