//! Exact projective invariants of rational curves over `ℚ(i)`.
//!
//! ```
//! use projcurve::ProjectiveCurve;
//!
//! let f = ProjectiveCurve::monomial(&[0, 2, 3, 5]).unwrap();
//! let report = f.plucker_report().unwrap();
//! assert_eq!(report.lhs, report.rhs);
//! ```
//!
//! The guide in `book/` walks through the library chapter by chapter.

pub mod error;
pub mod field;
pub mod linalg;
pub mod multipoly;
pub mod place;
pub mod poly;
mod modular;
pub mod wronskian;
pub mod curve;
pub mod contact;
pub mod klein;
pub mod classification;

pub use error::{Error, ParseError, Result};
pub use field::FieldElem;
pub use multipoly::MultiPoly;
pub use place::{Divisor, Place};
pub use poly::{RatFunction, UniPoly};
pub use curve::{PluckerReport, ProjectiveCurve, RamificationProfile};
pub use contact::{contact_family, contact_ramification_report, is_contact, recover_beta, SymplecticForm};
pub use klein::{
    build_w_model, complete_null, klein_forward, klein_inverse, model_change, NullCurve, NullModel, WModel,
};
pub use classification::{enumerate_profiles, verify_by_name, VERIFIERS};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numbers.md")]
    mod numbers {}
    #[doc = include_str!("../../../book/src/divisors.md")]
    mod divisors {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/contact.md")]
    mod contact {}
    #[doc = include_str!("../../../book/src/klein.md")]
    mod klein {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
