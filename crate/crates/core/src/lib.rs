pub mod algebra;
pub mod augcat;
pub mod augment;
pub mod cli;
pub mod dga;
pub mod diagram;
pub mod error;
pub mod library;
pub mod obstruct;
pub mod rulings;

pub use error::{Error, Result};
