//! Substitution words, their letter-position tables, the mex rules that
//! regenerate them, and the Wythoff-type games whose P-positions they encode.
//!
//! The crate is `no_std` with `alloc`; file formats and the command line live
//! in the companion `splythoff` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod games;
pub mod sequences;
pub mod substitution;
pub mod tables;

pub use error::{Error, Result};
pub use games::{GameRules, Position};
pub use substitution::{Letter, Substitution, WordStream};
