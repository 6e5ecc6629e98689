//! Finite-dimensional evidence for non-compact commutators of bounded
//! transforms built from self-adjoint extensions of Dirac-type operators.
//!
//! Two models are provided:
//!
//! * [`interval`]: `-i d/dx` on `[0, 1]` with periodic boundary conditions,
//!   the compression `P+ x P-` in the Fourier basis, and the witness
//!   sequence `xi_m` together with its image `zeta_m`.
//! * [`disc`]: the Dirac operator on the unit disc with the boundary
//!   projection `P_0`, the compression `P+ r e^{-i theta} P-` in the
//!   normalized Bessel eigenbasis, and the analogous witness sequence.
//!
//! [`index`] computes the kernel dimensions and index of the APS-type
//! extensions `D_{P_N}`, and [`analysis`] turns compressions into singular
//! value sweeps and pass/fail witness reports. [`quadrature`] is an
//! independent oracle for every closed-form disc matrix element.

pub mod analysis;
pub mod cli;
pub mod disc;
pub mod error;
pub mod index;
pub mod interval;
pub mod matrix;
pub mod quadrature;
pub mod report;
pub mod specfun;
pub mod spinor;
pub mod summation;
pub mod tolerances;
pub mod witness;

pub use error::{Error, Result};
