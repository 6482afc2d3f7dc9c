//! Smooth even bump `eta`: identically 1 on `[-1, 1]`, identically 0 outside
//! `(-2, 2)`, glued by `exp(1 - 1/(1 - r^2))` with `r = |x| - 1` in between.

/// The fixed smooth cutoff profile. A unit type: the profile is part of the
/// crate's reproducibility contract, so there is exactly one of it.
#[derive(Debug, Clone, Copy, Default)]
pub struct CutoffEta;

impl CutoffEta {
    pub fn eval(&self, x: f64) -> f64 {
        eta(x)
    }
}

/// Evaluate the bump at `x`.
pub fn eta(x: f64) -> f64 {
    let r = x.abs() - 1.0;
    if r <= 0.0 {
        1.0
    } else if r >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - r * r)).exp()
    }
}

/// Time-window taper for a signal stored on `[0, t_len]`.
///
/// The samples live on a finite window that is zero-padded before the
/// time transform, so the taper must vanish at both window ends; otherwise
/// the jump at the padding seam leaks into every modulation weight. This is
/// `eta` recentred at the window midpoint and scaled to a quarter window:
/// identically 1 on the middle half, smoothly 0 at `t = 0` and `t = t_len`.
pub fn window_taper(t: f64, t_len: f64) -> f64 {
    eta((t - 0.5 * t_len) / (0.25 * t_len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plateau_and_support() {
        assert_eq!(eta(0.5), 1.0);
        assert_eq!(eta(-1.0), 1.0);
        assert_eq!(eta(3.0), 0.0);
        assert_eq!(eta(2.0), 0.0);
        let v = eta(1.5);
        assert!(v > 0.0 && v < 1.0);
        assert_eq!(CutoffEta.eval(1.5), v);
    }

    #[test]
    fn even_and_monotone_on_roll_off() {
        let mut prev = eta(1.0);
        for i in 1..=100 {
            let x = 1.0 + i as f64 / 100.0;
            let v = eta(x);
            assert_eq!(v, eta(-x));
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn taper_vanishes_at_window_ends() {
        let t_len = 0.3;
        assert_eq!(window_taper(0.0, t_len), 0.0);
        assert_eq!(window_taper(t_len, t_len), 0.0);
        assert_eq!(window_taper(0.5 * t_len, t_len), 1.0);
        assert_eq!(window_taper(0.3 * t_len, t_len), 1.0);
    }
}
