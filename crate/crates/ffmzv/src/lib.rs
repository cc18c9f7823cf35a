pub mod algebra;
pub mod curve;
pub mod data;
pub mod error;
pub mod ffunction;
pub mod powersum;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
