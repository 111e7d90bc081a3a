//! File formats, the verification suite, experiments, a parallel
//! Sprague-Grundy sweep and the `splythoff` command line, built on
//! `splythoff-core`.

pub mod app;
pub mod experiment;
pub mod format;
pub mod golden;
pub mod play;
pub mod sg;
pub mod tables;
pub mod verify;
