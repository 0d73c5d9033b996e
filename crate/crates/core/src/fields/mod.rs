//! Field descriptions and concrete field arithmetic.

pub mod concrete;
pub mod finite;
pub mod fp_poly;
pub mod number;
pub mod spec;

pub use concrete::{build_realization, ConcreteField, FieldElem, FieldKind, Requirements};
pub use finite::FqField;
pub use number::NumberField;
pub use spec::FieldSpec;
