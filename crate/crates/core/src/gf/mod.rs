//! Finite fields and polynomial arithmetic over them.

pub mod embed;
pub mod field;
pub mod fp_poly;
pub mod matrix;
pub mod numth;
pub mod upoly;

pub use embed::{embedding, Embedding};
pub use field::{FieldCtx, FieldElement, FieldSpec, TABLE_LIMIT};
pub use upoly::Poly;
