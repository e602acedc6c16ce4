//! Explicit constructions on finite categories and finite-set-valued functors.

pub mod adjoint;
pub mod category;
pub mod colimits;
pub mod error;
pub mod fixtures;
pub mod flat;
pub mod functor;
pub mod generate;
pub mod json;
pub mod karoubi;
pub mod kan;
pub mod setfun;
pub mod sites;
pub mod suites;
pub mod unionfind;

pub use category::{validate_category, CategoryDescription, FinCat};
pub use error::{CatError, Result};
pub use functor::{comma_category, full_subcategory, Comma, FinFunctor};
pub use setfun::{SetFunctor, NatTransformation};
pub use colimits::{colimit, colimit_filtered, limit, tensor, QuotientSet};
