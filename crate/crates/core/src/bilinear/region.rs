//! Frequency-region decomposition of the bilinear interaction
//! `{(xi1, xi2): |xi1| >= |xi2|}`, relative to the threshold `a`.

use crate::error::CoreError;
use crate::Result;

/// The six interaction regions, classified first-match in this order (the
/// regions cover the half-space; the deterministic order makes overlaps
/// reproducible).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionLabel {
    /// `|xi1| <= 4a`
    Omega1,
    /// `|xi1| > 4a`, `|xi1| > 4|xi2|`, `|xi2| <= a`
    Omega2,
    /// `|xi1| > 4a`, `|xi1| > 4|xi2|`, `|xi2| > a`
    Omega3,
    /// `|xi1| > 4a`, `|xi2| <= |xi1| <= 4|xi2|`, `xi1 xi2 >= 0`
    Omega4,
    /// as `Omega4` with `xi1 xi2 < 0` and `4|xi| >= |xi2|`, `xi = xi1 + xi2`
    Omega5,
    /// as `Omega4` with `xi1 xi2 < 0` and `4|xi| < |xi2|`
    Omega6,
}

/// Classify `(xi1, xi2)` with `|xi1| >= |xi2|` (the caller swaps otherwise,
/// exploiting symmetry of the product).
pub fn region_classify(xi1: f64, xi2: f64, a: f64) -> Result<RegionLabel> {
    if xi1.abs() < xi2.abs() {
        return Err(CoreError::invalid_input(
            "region classification requires |xi1| >= |xi2|",
        ));
    }
    let label = if xi1.abs() <= 4.0 * a {
        RegionLabel::Omega1
    } else if xi1.abs() > 4.0 * xi2.abs() {
        if xi2.abs() <= a {
            RegionLabel::Omega2
        } else {
            RegionLabel::Omega3
        }
    } else if xi1 * xi2 >= 0.0 {
        RegionLabel::Omega4
    } else if 4.0 * (xi1 + xi2).abs() >= xi2.abs() {
        RegionLabel::Omega5
    } else {
        RegionLabel::Omega6
    };
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_cases() {
        let a = 1.3;
        assert_eq!(region_classify(a, 0.0, a).unwrap(), RegionLabel::Omega1);
        assert_eq!(
            region_classify(8.0 * a, 0.5 * a, a).unwrap(),
            RegionLabel::Omega2
        );
        // xi = a, 4|xi| = 4a < 7a = |xi2|
        assert_eq!(
            region_classify(8.0 * a, -7.0 * a, a).unwrap(),
            RegionLabel::Omega6
        );
        assert_eq!(
            region_classify(8.0 * a, 3.0 * a, a).unwrap(),
            RegionLabel::Omega4
        );
        // |xi1| > 4|xi2| with |xi2| > a
        assert_eq!(
            region_classify(8.0 * a, -1.5 * a, a).unwrap(),
            RegionLabel::Omega3
        );
        // comparable opposite-sign frequencies, 4|xi| = 12a >= 5a
        assert_eq!(
            region_classify(8.0 * a, -5.0 * a, a).unwrap(),
            RegionLabel::Omega5
        );
    }

    #[test]
    fn precondition_enforced() {
        assert!(region_classify(1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn classification_total_on_million_samples() {
        let a = 1.0;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1_000_000 {
            let x: f64 = rng.gen_range(-50.0..50.0);
            let y: f64 = rng.gen_range(-50.0..50.0);
            let (xi1, xi2) = if x.abs() >= y.abs() { (x, y) } else { (y, x) };
            region_classify(xi1, xi2, a).expect("total on the half-space");
        }
    }
}
