//! File formats, SVG rendering, reports and the command-line front end for
//! [`cubefold_core`].

pub mod cli;
pub mod format;
pub mod report;
pub mod svg;
