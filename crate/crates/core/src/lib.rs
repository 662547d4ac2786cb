//! Exact integer computer algebra for graded Chow ring presentations.

pub mod bundle;
pub mod error;
pub mod group;
pub mod ideal;
pub mod pipeline;
pub mod ring;

pub use error::{Error, Result};
