//! High-precision evaluation of Euler-type sums, parametric digamma functions
//! weighted by a sequence, and the hyperbolic series built from them, together
//! with a registry of identities among these objects and a harness that checks
//! each one numerically.
//!
//! ```no_run
//! use eulerforge::numkernel::{zeta, PrecisionContext};
//! use eulerforge::eulersums::{euler_sum, SumSpec};
//!
//! let ctx = PrecisionContext::new(40).unwrap();
//! let s12: SumSpec = "S[1;2]".parse().unwrap();
//! let v = euler_sum(&s12, &ctx).unwrap();
//! let z3 = zeta(3, &ctx).unwrap();
//! assert!(ctx.close(&v, &(z3 * 2)));
//! ```

pub mod error;
pub mod numkernel;
pub mod seqcore;
pub mod digamma;
pub mod eulersums;
pub mod identities;
pub mod cli;

pub use error::{Error, Result};
pub use numkernel::{PrecisionContext, Real};
