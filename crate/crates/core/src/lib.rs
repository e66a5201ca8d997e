//! Exact classification of Lie bialgebra structures on the two-dimensional
//! Galilei algebra and of the Poisson–Lie structures on the Galilei group.

pub mod bialgebra;
pub mod error;
pub mod exact_algebra;
pub mod galilei_orbits;
pub mod lie_core;
pub mod par;
pub mod poisson_group;
pub mod sampling;
pub mod sweeps;
pub mod verify;

pub use error::{Error, ParseError, Result};
