//! Gröbner bases in free associative algebras and their skew 2-nomial
//! quotients.

pub mod binomial;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod order;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod quotient;
pub mod rewrite;
pub mod scalar;
pub mod word;

pub use error::{Error, Result};
pub use order::{ExponentOrder, ExponentScheme, Grading, MonomialOrder, QuotientOrder, WordOrder, WordOrderKind};
pub use poly::Poly;
pub use presentation::Presentation;
pub use rewrite::{DivisionResult, QuotientTerm};
pub use scalar::{Field, Scalar};
pub use word::{Side, Word};
