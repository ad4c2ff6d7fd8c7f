//! Exact intersection numbers on moduli spaces of degree 2 and 3 admissible
//! covers of the projective line.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: exact truncated power series over the rationals, with the
//!   trigonometric expansions and exponential-generating-function helpers the
//!   other modules consume.
//! - [`hurwitz`]: brute-force monodromy enumeration (Hurwitz numbers).
//! - [`hodge`]: the genus recursions for `L_2`, `L_3`, the integrals `I_d`,
//!   `J_d`, their generating functions and the closed forms they satisfy.
//! - [`localization`]: reduced fixed-locus contributions and the identities
//!   obtained by summing them.
//!
//! All arithmetic is exact; nothing passes through floating point.

pub mod combinatorics;
pub mod error;
pub mod hodge;
pub mod hurwitz;
pub mod localization;
pub mod series;

pub use error::{Error, Result};
pub use series::{Rational, TruncatedSeries};
