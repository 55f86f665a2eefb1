//! Thompson–Higman groups `G_{k,1}` and their subgroups `F`, `T` and the
//! length-preserving subgroup, with elements represented as bijections
//! between finite maximal prefix codes.

pub mod circuit;
pub mod cli;
pub mod deciders;
pub mod error;
pub mod factor;
pub mod gadgets;
pub mod gens;
pub mod genword;
pub mod order;
pub mod subgroups;
pub mod table;
pub mod words;

pub use error::{Error, Result};
pub use table::{Element, ElementTable};
pub use words::{PrefixCode, Word};
