//! Toolkit for scattered linearized polynomials over finite fields, the rank
//! metric codes they define, and the plane curves attached to them.

pub mod error;
pub mod gf;

pub use error::{Error, Result};
pub mod curve;
pub mod linpoly;
pub mod mrd;
pub mod scatter;
pub mod verify;
