//! Seeded star polygons for the kernel and closedness suites: radial
//! polygons around the origin (jittered angles, random radii) are
//! star-shaped with the origin in the kernel by construction, and scaling
//! about the origin yields convergent star-shaped sequences.

use crate::rng::SplitMix64;
use setgeom::CutSet;

pub fn random_star_polygon(rng: &mut SplitMix64, vertices: usize) -> CutSet {
    loop {
        let vs: Vec<[f64; 2]> = (0..vertices)
            .map(|i| {
                let jitter = rng.range(-0.3, 0.3);
                let ang = 2.0 * std::f64::consts::PI * (i as f64 + 0.5 + jitter)
                    / vertices as f64;
                let r = rng.range(0.35, 1.0);
                [r * ang.cos(), r * ang.sin()]
            })
            .collect();
        // jitter keeps angles increasing, so the loop is simple; retry on
        // the rare degenerate draw
        if let Ok(cut @ CutSet::Polygon(_)) = CutSet::polygon(vs) {
            return cut;
        }
    }
}

/// Scales a polygon about the origin; for star polygons containing the
/// origin in the kernel this preserves star-shapedness.
pub fn scaled(cut: &CutSet, factor: f64) -> CutSet {
    match cut {
        CutSet::Polygon(poly) => CutSet::polygon(
            poly.vertices()
                .iter()
                .map(|v| [v[0] * factor, v[1] * factor])
                .collect(),
        )
        .expect("scaled polygon stays valid"),
        CutSet::Points(pts) => {
            CutSet::points(pts.iter().map(|v| [v[0] * factor, v[1] * factor]).collect())
                .expect("scaled cloud stays valid")
        }
        CutSet::Intervals(_) => unreachable!("2-d only"),
    }
}

/// A star-polygon sequence converging to `limit` in the Hausdorff metric.
pub fn convergent_sequence(limit: &CutSet, len: usize) -> Vec<CutSet> {
    (1..=len)
        .map(|n| {
            let s = 1.0 - 1.0 / ((n as f64 + 2.0) * (n as f64 + 2.0));
            scaled(limit, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use setgeom::{hausdorff, is_star_shaped};

    #[test]
    fn radial_polygons_are_star_shaped() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..10 {
            let p = random_star_polygon(&mut rng, 9);
            assert!(is_star_shaped(&p).unwrap());
            // the origin is a kernel point of a radial polygon
            let k = setgeom::kernel(&p).unwrap();
            assert!(k.dist_point([0.0, 0.0]) <= 1e-9);
        }
    }

    #[test]
    fn scaled_sequences_converge() {
        let mut rng = SplitMix64::new(3);
        let limit = random_star_polygon(&mut rng, 7);
        let seq = convergent_sequence(&limit, 12);
        let mut prev = f64::INFINITY;
        for a in &seq {
            let d = hausdorff(a, &limit).unwrap();
            assert!(d <= prev);
            prev = d;
        }
        assert!(prev < 5e-3);
    }
}
