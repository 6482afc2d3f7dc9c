//! Two-resolution ratio reports: the desk-scale rendering of "the constant
//! in this inequality does not blow up under grid refinement".

/// One evaluated sample of an inequality.
#[derive(Debug, Clone, Copy)]
pub struct RatioSample {
    pub sample_id: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    /// spatial resolution (number of grid points) the sample was evaluated at
    pub resolution: usize,
}

/// Result of evaluating an inequality over a family at two resolutions.
#[derive(Debug, Clone)]
pub struct RatioReport {
    pub label: String,
    pub samples: Vec<RatioSample>,
    /// samples skipped because the right-hand side vanished
    pub skipped: usize,
    pub max_ratio_base: f64,
    pub max_ratio_fine: f64,
}

impl RatioReport {
    /// `log2` growth of the measured constant from resolution `M` to `2M`.
    /// Near zero means the discrete inequality is resolution-stable.
    pub fn resolution_slope(&self) -> f64 {
        (self.max_ratio_fine / self.max_ratio_base).log2()
    }

    pub fn max_ratio(&self) -> f64 {
        self.max_ratio_base.max(self.max_ratio_fine)
    }
}

/// Evaluate `(lhs, rhs)` for `n_samples` family members at the base and the
/// doubled resolution. `eval(sample_id, fine)` returns `None` when the
/// sample cannot be evaluated (zero right-hand side): it is skipped and
/// counted.
pub fn two_resolution_report(
    label: impl Into<String>,
    n_samples: usize,
    base_resolution: usize,
    mut eval: impl FnMut(usize, bool) -> Option<(f64, f64)>,
) -> RatioReport {
    let mut samples = Vec::with_capacity(2 * n_samples);
    let mut skipped = 0;
    let mut max_base = 0.0f64;
    let mut max_fine = 0.0f64;
    for id in 0..n_samples {
        for fine in [false, true] {
            let resolution = if fine {
                2 * base_resolution
            } else {
                base_resolution
            };
            match eval(id, fine) {
                Some((lhs, rhs)) if rhs > 0.0 => {
                    let ratio = lhs / rhs;
                    if fine {
                        max_fine = max_fine.max(ratio);
                    } else {
                        max_base = max_base.max(ratio);
                    }
                    samples.push(RatioSample {
                        sample_id: id,
                        lhs,
                        rhs,
                        ratio,
                        resolution,
                    });
                }
                _ => skipped += 1,
            }
        }
    }
    RatioReport {
        label: label.into(),
        samples,
        skipped,
        max_ratio_base: max_base,
        max_ratio_fine: max_fine,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_norms_give_unit_ratio() {
        let report = two_resolution_report("identity", 1, 64, |_, _| Some((2.5, 2.5)));
        assert_eq!(report.max_ratio(), 1.0);
        assert_eq!(report.resolution_slope(), 0.0);
        assert_eq!(report.samples.len(), 2);
    }

    #[test]
    fn zero_rhs_skipped_and_counted() {
        let report = two_resolution_report("skippy", 3, 64, |id, _| {
            if id == 1 {
                Some((1.0, 0.0))
            } else {
                Some((1.0, 2.0))
            }
        });
        assert_eq!(report.skipped, 2);
        assert_eq!(report.samples.len(), 4);
    }
}
