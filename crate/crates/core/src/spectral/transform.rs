//! Shared FFT plumbing. A process-wide planner caches plans per length;
//! the helpers run unnormalized transforms in place.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type PlanKey = (usize, bool);
type PlanCache = (FftPlanner<f64>, HashMap<PlanKey, Arc<dyn Fft<f64>>>);

fn planner_cache() -> &'static Mutex<PlanCache> {
    static CACHE: OnceLock<Mutex<PlanCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new((FftPlanner::new(), HashMap::new())))
}

fn plan(len: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    let mut guard = planner_cache().lock().expect("fft planner poisoned");
    let (planner, map) = &mut *guard;
    map.entry((len, forward))
        .or_insert_with(|| {
            if forward {
                planner.plan_fft_forward(len)
            } else {
                planner.plan_fft_inverse(len)
            }
        })
        .clone()
}

/// In-place unnormalized forward DFT: `X_k = sum_j x_j e^{-2 pi i jk/n}`.
pub fn fft_forward(buf: &mut [Complex64]) {
    plan(buf.len(), true).process(buf);
}

/// In-place unnormalized inverse DFT: `x_j = sum_k X_k e^{+2 pi i jk/n}`.
pub fn fft_inverse(buf: &mut [Complex64]) {
    plan(buf.len(), false).process(buf);
}
