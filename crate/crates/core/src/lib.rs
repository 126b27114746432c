pub mod cli;
pub mod collapse;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod search;
pub mod simplicial;

pub use error::{Error, Result};
