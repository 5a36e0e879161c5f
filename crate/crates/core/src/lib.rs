pub mod cartan;
pub mod central;
pub mod cli;
pub mod error;
pub mod freealg;
pub mod hopf;
pub mod pairing;
pub mod qfield;
pub mod rep;

pub use error::{Error, Result};
