//! Exact computer algebra for signed valued quivers: mutation of
//! generalized skew-symmetrizable matrices over `Z[t]/(t^2-1)`, Dynkin
//! classification, root systems, companion bases, and the Lie algebra
//! presentations attached to mutation-Dynkin quivers.
//!
//! Vertex indices are 0-based in the Rust API and 1-based in every text or
//! JSON interface.

pub mod algebra;
pub mod cartan;
pub mod class;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod presentation;
pub mod quiver;
pub mod ring;
pub mod roots;

pub use error::{Error, Result};
pub use matrix::{CycleReport, GssMatrix};
pub use quiver::{Arrow, SignedValuedQuiver};
pub use ring::TElem;
