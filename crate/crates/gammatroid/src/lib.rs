//! Matrix files, law reports and the command-line front end for
//! [`gammatroid_core`].

pub mod cli;
pub mod matrix_file;
pub mod report;

pub use matrix_file::{MatrixFile, ParseError};
