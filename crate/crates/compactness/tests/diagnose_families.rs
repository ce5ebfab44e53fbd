//! Totally-boundedness diagnostics on the reference families: the spike
//! family must fail equi-left-continuity at eps = 0.5 with a witness near
//! the dyadic threshold of its tallest member, while the translate family
//! passes with a usable (eps, delta) table, and verdicts are monotone under
//! subsetting.

use compactness::{diagnose, instances, Family, Verdict};
use dpmetric::{p_mean_modulus, PNorm};

#[test]
fn singleton_family_is_equi_continuous() {
    let p = PNorm::new(1.0).unwrap();
    let family = instances::translate_family(1, 0.0, p);
    let rep = diagnose(&family, &[0.5, 0.1, 0.02], None).unwrap();
    assert_eq!(rep.verdict, Verdict::TotallyBoundedEvidence);
    for entry in &rep.equi {
        assert!(entry.delta.is_some(), "eps {} failed", entry.eps);
    }
}

#[test]
fn spike_family_fails_equi_continuity_at_one_half() {
    let k_max = 20;
    let p = PNorm::new(1.0).unwrap();
    let family = instances::spike_family(k_max, p);
    let rep = diagnose(&family, &[0.5], None).unwrap();
    assert_eq!(rep.verdict, Verdict::FailsEquiContinuity);
    assert!(rep.bound_m <= 4.0, "bound_m = {}", rep.bound_m);

    let entry = &rep.equi[0];
    assert!(entry.delta.is_none());
    let witness = entry.witness.as_ref().expect("failure witness");
    let threshold = 2f64.powi(-(k_max as i32));
    let grid_cell = threshold; // smallest h-grid spacing at the bottom
    assert!(
        witness.h <= threshold + grid_cell,
        "witness h = {} too high",
        witness.h
    );
    assert!(witness.omega >= 0.5);
    assert_eq!(witness.member, k_max - 1, "the tallest spike is the witness");

    // per-member modulus plateau: the witness member keeps omega ~ 1 at its
    // own dyadic scale (quadrature oracle for the plateau height)
    let w = p_mean_modulus(&family.members()[k_max - 1], threshold, p).unwrap();
    assert!((w - 1.0).abs() < 2e-3, "plateau height ~ 1, got {w}");
}

#[test]
fn translate_family_passes_with_nonempty_table() {
    let p = PNorm::new(1.0).unwrap();
    let family = instances::translate_family(50, 1.0, p);
    let rep = diagnose(&family, &[0.5, 0.1, 0.02], None).unwrap();
    assert_eq!(rep.verdict, Verdict::TotallyBoundedEvidence);
    for entry in &rep.equi {
        let delta = entry.delta.expect("table entry");
        assert!(delta > 0.0);
    }
    // translation invariance: the modulus curve is shared, so delta for
    // eps = 0.02 is the first dyadic h with h(1-h) >= 0.02, namely 2^-5
    let d002 = rep.equi[2].delta.unwrap();
    assert_eq!(d002, 2f64.powi(-5));
}

#[test]
fn parity_family_passes_both_conditions() {
    // the sequence converges in d_p, so the finite family is bounded and
    // equi-left-continuous evidence at every tested epsilon
    let p = PNorm::new(1.0).unwrap();
    let grid = instances::parity_grid(64, 24);
    let family = instances::parity_family(20, &grid, p);
    let rep = diagnose(&family, &[0.5, 0.1, 0.02], None).unwrap();
    assert_eq!(rep.verdict, Verdict::TotallyBoundedEvidence);
    assert!(rep.bound_m <= 1.0 + 1e-9);
    for entry in &rep.equi {
        assert!(entry.delta.is_some());
    }
}

#[test]
fn verdict_is_monotone_under_subsetting() {
    let p = PNorm::new(1.0).unwrap();
    let family = instances::translate_family(50, 1.0, p);
    let rep = diagnose(&family, &[0.1, 0.02], None).unwrap();

    let sub = Family::new(
        family.members()[..20].to_vec(),
        family.ids()[..20].to_vec(),
        p,
    )
    .unwrap();
    let sub_rep = diagnose(&sub, &[0.1, 0.02], None).unwrap();
    assert_eq!(sub_rep.verdict, Verdict::TotallyBoundedEvidence);
    assert!(sub_rep.bound_m <= rep.bound_m + 1e-12);
    for (a, b) in rep.equi.iter().zip(&sub_rep.equi) {
        // the subfamily passes with at least the same delta
        assert!(b.delta.unwrap() >= a.delta.unwrap());
    }
}

#[test]
fn report_serializes_with_stable_fields() {
    let p = PNorm::new(1.0).unwrap();
    let family = instances::translate_family(3, 1.0, p);
    let rep = diagnose(&family, &[0.5], None).unwrap();
    let json = serde_json::to_string(&rep).unwrap();
    assert!(json.starts_with("{\"bound_m\":"));
    assert!(json.contains("\"verdict\":"));
    assert!(json.contains("\"note\":"));
}
