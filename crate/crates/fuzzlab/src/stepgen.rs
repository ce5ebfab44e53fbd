//! Seeded random step families for the randomized suites. Members are
//! nested interval unions on a shared uniform grid, built top-down: the top
//! cut is one interval, each lower level pads the hull and may add an
//! extra component.

use crate::rng::SplitMix64;
use levelset::{AlphaGrid, FuzzySet, SupportKind};
use setgeom::{CutSet, Interval};

pub fn shared_grid(levels: usize) -> AlphaGrid {
    AlphaGrid::uniform(levels, 1.0 / levels as f64).expect("uniform grid")
}

pub fn random_step_fuzzy(rng: &mut SplitMix64, grid: &AlphaGrid) -> FuzzySet {
    let center = rng.range(-2.0, 2.0);
    let halfwidth = rng.range(0.1, 1.0);
    let mut parts = vec![Interval::new(center - halfwidth, center + halfwidth).unwrap()];
    let mut cuts: Vec<CutSet> = vec![CutSet::Intervals(parts.clone())];
    for _ in 1..grid.len() {
        let lo = parts.first().unwrap().lo - rng.range(0.0, 0.2);
        let hi = parts.last().unwrap().hi + rng.range(0.0, 0.2);
        let mut next = parts.clone();
        next.push(Interval::new(lo, parts.first().unwrap().lo).unwrap());
        next.push(Interval::new(parts.last().unwrap().hi, hi).unwrap());
        if rng.next_f64() < 0.3 {
            let c = rng.range(-4.0, 4.0);
            let w = rng.range(0.05, 0.55);
            next.push(Interval::new(c - w, c + w).unwrap());
        }
        let cut = CutSet::intervals(next).expect("nonempty");
        let CutSet::Intervals(normalized) = &cut else {
            unreachable!()
        };
        parts = normalized.clone();
        cuts.push(cut);
    }
    cuts.reverse();
    FuzzySet::new(grid.clone(), cuts, SupportKind::Bounded).expect("nested by construction")
}

pub fn random_family(seed: u64, count: usize, levels: usize) -> Vec<FuzzySet> {
    let grid = shared_grid(levels);
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| random_step_fuzzy(&mut rng, &grid)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_families_validate_and_are_deterministic() {
        let a = random_family(7, 10, 32);
        let b = random_family(7, 10, 32);
        assert_eq!(a, b);
        let c = random_family(8, 10, 32);
        assert_ne!(a, c);
    }
}
