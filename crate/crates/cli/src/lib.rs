//! File formats, reports, corpus generation and the `ifd` command line on
//! top of `ifd-core`.

pub mod app;
pub mod batch;
pub mod corpus;
pub mod format;

pub use app::{run, Output};
