//! Exact combinatorics of the free wreath products `H_N^+(Γ)`: fusion rules
//! on words over a discrete group, decorated non-crossing partitions and their
//! linear maps, dimension polynomials and multiplier eigenvalues.

pub mod dims;
pub mod error;
pub mod fusion;
pub mod groups;
pub mod linmaps;
pub mod ncpart;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
