pub mod cli;
pub mod conjlab;
pub mod error;
pub mod gf3m;
pub mod permtest;
pub mod polyring;

pub use error::{Error, Result};
