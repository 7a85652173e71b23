//! Weight spectra of F_(q^m)-linear rank-metric codes.
//!
//! The crate computes `L_rk(n, m, k, q)`, the largest number of distinct
//! nonzero rank weights an `[n, k]` code over F_(q^m)/F_q can have, builds
//! codes attaining it, and checks spectra three ways: exhaustive enumeration
//! of projective codewords, explicit witness codewords, and the q-system
//! description of weights.
//!
//! ```
//! use std::sync::Arc;
//! use rankspectra::{constructions::construct, field::ExtField, formulas::lrk};
//!
//! let field = Arc::new(ExtField::new(2, 1, 7).unwrap());
//! let built = construct(field, 7, 2, None).unwrap();
//! let report = built.code.weight_spectrum_exhaustive(1_000_000).unwrap();
//! assert_eq!(report.weights.len(), lrk(7, 7, 2, 2).unwrap());
//! ```

pub mod code;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod formulas;
pub mod geometry;
pub mod json;
pub mod linalg;
pub mod suites;

pub use code::{RankMetricCode, SpectrumMethod, SpectrumReport, DEFAULT_POINT_LIMIT};
pub use enumerate::Execution;
pub use error::{Error, Result};
pub use field::{BaseElem, BaseField, ExtElem, ExtField, FieldDescriptor};
