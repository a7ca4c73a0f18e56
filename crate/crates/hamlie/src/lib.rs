//! Std companion to `hamlie-core`: JSON formats, the representation cache,
//! rayon drivers and the `hamlie` command-line tool.

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod repspec;

pub use hamlie_core as core;
