//! Ratio checks at the per-inequality level: families sized as in the
//! operation examples rather than the full acceptance sweep.

use kawahara_core::norms::{run_estimate_check, EstimateId, EstimateProfile, NormParams};
use kawahara_core::spectral::DispersionParams;

fn setup() -> (DispersionParams, NormParams, EstimateProfile) {
    let params = DispersionParams::new(1.0, 0.0).unwrap();
    let np = NormParams::with_epsilon(0.1, &params).unwrap();
    (params, np, EstimateProfile::default())
}

#[test]
fn l4_spacetime_over_fifty_bumps_is_resolution_stable() {
    let (params, np, profile) = setup();
    let report =
        run_estimate_check(EstimateId::L4SpaceTime, 50, &profile, &np, &params, 21).unwrap();
    assert_eq!(report.skipped, 0);
    assert!(
        report.resolution_slope().abs() <= 0.1,
        "slope {}",
        report.resolution_slope()
    );
}

#[test]
fn maximal_xsb_pair_is_resolution_stable() {
    // s = 1/4, b = 1/2 + eps
    let (params, np, profile) = setup();
    let report =
        run_estimate_check(EstimateId::MaximalXsb, 20, &profile, &np, &params, 22).unwrap();
    assert!(
        report.resolution_slope().abs() <= 0.1,
        "slope {}",
        report.resolution_slope()
    );
}

#[test]
fn free_wave_energy_constant_is_bounded_over_family() {
    // the measured constant for the free-wave energy bound stays below a
    // fixed number across 20 samples and is identical at both resolutions
    let (params, np, profile) = setup();
    let report =
        run_estimate_check(EstimateId::FreeWaveEnergy, 20, &profile, &np, &params, 23).unwrap();
    assert!(report.max_ratio() < 10.0, "constant {}", report.max_ratio());
    assert!(report.resolution_slope().abs() <= 0.1);
    // every sample produced a usable ratio
    assert_eq!(report.samples.len(), 40);
}
