//! Generalized NTU sequences over `F_{p^m}` and their interleaved binary
//! variants: construction, linear complexity, autocorrelation, and the
//! closed forms that predict them.

pub mod bits;
pub mod correlate;
pub mod error;
pub mod gf;
pub mod lincomp;
pub mod seqgen;
pub mod theorems;

pub use bits::BitVec;
pub use correlate::{CorrelationProfile, autocorrelation_profile, cross_correlation_profile};
pub use error::{Error, Result};
pub use gf::{CyclotomicContext, ExtFieldContext, ExtFieldElement, PrimeField, PrimeFieldElement};
pub use lincomp::{DensePoly, Gf2Poly, LcMethod, LcReport};
pub use seqgen::{NtuFamily, NtuParams, SeqKind, SeqTag, SymbolSequence};
pub use theorems::{Basis, Quantity, ReportRow, Status, VerificationReport};
