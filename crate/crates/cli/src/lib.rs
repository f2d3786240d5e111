//! File formats, corpus specs and DOT export for the `mycdist` tool.

pub mod corpus;
pub mod dot;
pub mod format;
