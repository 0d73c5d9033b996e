//! Command-line front end for `edone-core`: spec parsers, the certificate
//! and atlas file formats, and the `edone` subcommands.

pub mod cli;
pub mod formats;
pub mod parse;

pub use parse::{parse_elem, parse_field_spec, parse_group_spec, parse_matrix};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not a prime power")]
    NonPrimePower(u64),
    #[error("{0}")]
    Core(edone_core::Error),
    #[error("malformed file: {0}")]
    Format(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<edone_core::Error> for InputError {
    fn from(e: edone_core::Error) -> Self {
        InputError::Core(e)
    }
}
