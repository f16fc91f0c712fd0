//! Exact simplicity tests for scalar generalized Verma modules attached to
//! parabolic subalgebras of abelian type.

pub mod ehw;
pub mod error;
pub mod jantzen;
pub mod ratvec;
pub mod rootdata;
pub mod scan;
pub mod tables;
pub mod weyl;

pub use error::{Error, Result};
pub use jantzen::{classify_scalar, SimplicityVerdict, Verdict};
pub use ratvec::{Rational, Weight};
pub use rootdata::{build_datum, HermitianCase, ParabolicRootDatum};
