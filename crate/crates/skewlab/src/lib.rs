//! File formats, reports, acceptance suites and the command line for
//! [`skewlab_core`].

pub mod cli;
pub mod io;
pub mod report;
pub mod suites;

pub use skewlab_core as core;
