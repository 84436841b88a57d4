//! Command-line front end for [`threeterm`]: configuration documents,
//! reports and SVG figures.

pub mod commands;
pub mod doc;
pub mod error;
pub mod render;
pub mod report;

pub use error::CliError;
