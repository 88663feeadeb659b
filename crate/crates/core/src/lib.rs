//! List interpolation of sparse polynomials from black-box evaluations that
//! may contain a bounded number of errors.
//!
//! Polynomials are sparse either in the power (Laurent) basis or in the
//! Chebyshev basis of the first kind, with coefficients in a prime field
//! GF(p). Given a sparsity bound `B`, a degree bound `D` and an error bound
//! `E`, the decoders probe
//!
//! * `floor(4E/3 + 2) * B` points in the power basis, correcting two errors
//!   per block of `4B` points through a bivariate Pham system, or
//! * `floor(3E/2 + 2) * B` points in the Chebyshev basis, correcting one
//!   error per block of `3B` points through a Hankel+Toeplitz determinant,
//!
//! and return every sparse interpolant that disagrees with at most `E` of
//! the probes. The true polynomial is always on the list.
//!
//! ```
//! use spinterp::blackbox::{make_instance, InstanceConfig};
//! use spinterp::decode::decode_power_e;
//! use spinterp::sparse::Basis;
//!
//! let cfg = InstanceConfig { p: 10007, basis: Basis::Power, b: 2, d: 50, e: 2, t: None };
//! let (inst, mut oracle) = make_instance(&cfg, 7).unwrap();
//! let res = decode_power_e(&mut oracle, 2, 50, 2, inst.field, inst.seed).unwrap();
//! assert_eq!(res.probes_used, 8);
//! assert!(res.candidates.iter().any(|c| c.poly == inst.hidden));
//! ```

pub mod blackbox;
pub mod decode;
mod error;
pub mod fixtures;
pub mod format;
pub mod generator;
pub mod pham;
pub mod poly;
pub mod prony;
pub mod scalar;
pub mod selftest;
pub mod sparse;

pub use error::{Error, Result};
pub use poly::{BiPoly, UniPoly, Var};
pub use scalar::{Felt, PrimeField};
pub use sparse::{Basis, SparsePoly};
