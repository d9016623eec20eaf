//! File formats, JSON certificates and corpus verification on top of
//! `wheelworks-core`, plus the `wheelworks` command-line tool.

pub mod cert;
pub mod io;
pub mod verify;

pub use wheelworks_core as core;
