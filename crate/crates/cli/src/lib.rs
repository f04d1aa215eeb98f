//! Loading, checking and reporting on manifold documents.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use document::{Loaded, ManifoldDocument, SolitonBlock};
pub use error::CliError;
pub use report::Report;
