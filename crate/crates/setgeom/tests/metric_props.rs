//! Property suite: the Hausdorff distance is a metric on cut sets up to
//! tolerance — symmetry exact, identity within tolerance, triangle
//! inequality within 1e-9 on randomized triples, for interval unions and
//! planar point clouds.

use proptest::prelude::*;
use setgeom::{hausdorff, CutSet, Interval};

fn arb_union() -> impl Strategy<Value = CutSet> {
    prop::collection::vec((-10.0..10.0f64, 0.0..3.0f64), 1..5).prop_map(|parts| {
        CutSet::intervals(
            parts
                .into_iter()
                .map(|(lo, w)| Interval::new(lo, lo + w).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

fn arb_cloud() -> impl Strategy<Value = CutSet> {
    prop::collection::vec(prop::array::uniform2(-5.0..5.0f64), 1..8)
        .prop_map(|pts| CutSet::points(pts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn union_symmetry_and_identity(a in arb_union(), b in arb_union()) {
        prop_assert_eq!(hausdorff(&a, &b).unwrap(), hausdorff(&b, &a).unwrap());
        prop_assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        if hausdorff(&a, &b).unwrap() == 0.0 {
            prop_assert!(a.approx_eq(&b, 1e-9));
        }
    }

    #[test]
    fn union_triangle(a in arb_union(), b in arb_union(), c in arb_union()) {
        let ac = hausdorff(&a, &c).unwrap();
        let ab = hausdorff(&a, &b).unwrap();
        let bc = hausdorff(&b, &c).unwrap();
        prop_assert!(ac <= ab + bc + 1e-9, "{} > {} + {}", ac, ab, bc);
    }

    #[test]
    fn cloud_symmetry_and_triangle(a in arb_cloud(), b in arb_cloud(), c in arb_cloud()) {
        prop_assert_eq!(hausdorff(&a, &b).unwrap(), hausdorff(&b, &a).unwrap());
        prop_assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        let ac = hausdorff(&a, &c).unwrap();
        let ab = hausdorff(&a, &b).unwrap();
        let bc = hausdorff(&b, &c).unwrap();
        prop_assert!(ac <= ab + bc + 1e-9, "{} > {} + {}", ac, ab, bc);
    }
}
