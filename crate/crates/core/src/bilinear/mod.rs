//! Bilinear estimates for `d/dx(u1 u2)` in `X_{s,b}` scales: frequency-region
//! classification, the reduced kernels, lattice verification of the two
//! bilinear theorems, and the indicator-rectangle counterexample family that
//! exhibits blow-up below the critical Sobolev index.

mod counterexample;
mod kernel;
mod product;
mod region;
mod sharpness;
mod verify;

pub use counterexample::CounterexamplePair;
pub use kernel::{kernel_k, KernelKind};
pub use product::bilinear_lhs;
pub use region::{region_classify, RegionLabel};
pub use sharpness::{sharpness_scan, ScanPoint, SlopeRow, SlopeTable};
pub use verify::{verify_estimate, BilinearTheorem};
