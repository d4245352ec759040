//! Sum-of-digits functions on GF(p^r).
//!
//! The crate builds finite fields with an arbitrary ordered basis, evaluates
//! the Thue–Morse and Rudin–Shapiro digit functions, counts the pattern sets
//! `{ξ : T(f(ξ + α_i)) = c_i}` exactly, checks the known deviation bounds for
//! those counts, and constructs certified empty patterns.

pub mod binomials;
pub mod bounds;
pub mod construct;
pub mod digitfn;
pub mod error;
pub mod field;
pub mod linalg;
pub mod pattern;
pub mod poly;
pub mod sweep;

pub use bounds::{bound_report, Bound, BoundCheckReport, TheoremId};
pub use construct::{ConstructionId, CounterexampleCertificate};
pub use digitfn::DigitFunctionKind;
pub use error::{Error, Result};
pub use field::{build_field, FieldContext, FieldElement, FieldSpec};
pub use pattern::{count_pattern, PatternSpec};
pub use poly::{parse_function, parse_polynomial, DensePolynomial, FieldFunction, RationalMonomial};
