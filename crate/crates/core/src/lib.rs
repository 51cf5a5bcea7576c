//! Self-similar actions of groups on rooted trees.
//!
//! Groups act on strings over `{0, .., m-1}` from the right, and products
//! compose left to right. Representations come from explicit wreath
//! recursions ([`tree::SelfSimilarMachine`]), finite Mealy automata
//! ([`mealy`]), or are built from a group model with virtual endomorphisms
//! ([`engine`]).

pub mod catalog;
pub mod cli;
pub mod engine;
pub mod error;
pub mod handle;
pub mod mealy;
pub mod models;
pub mod perm;
pub mod tree;
pub mod word;

pub use error::{Error, Result};
pub use perm::Perm;
pub use word::{GenSymbol, GroupWord};
