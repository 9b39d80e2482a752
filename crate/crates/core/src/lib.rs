pub mod cli;
pub mod error;
pub mod hecke;
pub mod koszul;
pub mod linalg;
pub mod orbit;
pub mod rea;
pub mod scalar;
pub mod symfun;

pub use error::{Error, Result};
