//! Exact arithmetic: finite fields, polynomials, rational functions and
//! linear algebra.

pub mod ext;
pub mod factor;
pub mod fq;
pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod ratfun;
pub mod ring;

pub use ext::{ExtElem, ExtField};
pub use fq::{FieldSpec, Fq};
pub use linalg::Matrix;
pub use mpoly::{MPoly, MPolyRing, MRatFun, MRatFunField};
pub use ratfun::{kernel_basis, CPoly, RatFun, RatFunField};
pub use ring::{Field, Ring};
