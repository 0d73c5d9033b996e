//! Decisions and certificates for essential dimension one of finite groups,
//! with exact field and 2×2 matrix arithmetic and a classifier for finite
//! subgroups of SL2 over small finite fields.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod classify;
pub mod edone;
pub mod error;
pub mod fields;
pub mod groups;
pub mod mat2;
pub mod poly;

pub use error::{Error, Result};
