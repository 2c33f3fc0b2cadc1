//! Uniformly twisted knots and links.
//!
//! From a planar graph embedded in the sphere with disk multiplicities this
//! crate assembles the closed fake surface P = P_v ∪ P_h, applies the uniform
//! ±-smoothing to obtain the vertical surface F_v, the horizontal surface F_h
//! and the link K = ∂F_v, produces a planar diagram of K, and verifies the
//! computable consequences of the construction: Euler characteristics,
//! orientability, connectivity, boundary-slope distance and polynomial
//! invariants.

pub mod error;
pub mod planar_map;
pub mod fake_surface;

pub use error::{Error, Result};
