//! Characters, class functions and bentness on small finite groups.

pub mod bent;
pub mod chars;
pub mod class_fn;
pub mod construct;
pub mod cplx;
pub mod criteria;
pub mod error;
pub mod group;
pub mod ledger;
pub mod search;

pub use bent::{is_bent, BentReport, Verdict};
pub use chars::CharacterTable;
pub use class_fn::ClassFunction;
pub use cplx::C64;
pub use error::{Error, Result};
pub use group::{Group, NamedGroup};
