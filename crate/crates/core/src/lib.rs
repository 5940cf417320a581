//! Resolution-graph invariants of normal surface singularities.
//!
//! Starting from the weighted dual graph of a simple-normal-crossings
//! resolution this crate computes, in exact arithmetic:
//!
//! - the intersection form and its definiteness,
//! - the fundamental cycle `Z_num` (Laufer's computation sequence),
//! - the anticanonical cycle `Z_K` and arithmetic genera,
//! - rational / minimally elliptic / simple elliptic / numerically Gorenstein
//!   classification,
//! - Steenbrink's smoothability obstruction `μ₋ = 10 p_g - b₁(link) + Z_K² + |I|`,
//!
//! and plans the ruled-surface data `(e, a)` of the "sweeping the cone"
//! smoothing of a non-normal singularity whose Milnor fiber is a disc bundle
//! of prescribed negative Euler number over an elliptic curve.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod smoothability;
pub mod sweep;

pub use cycles::{
    anticanonical_cycle, arithmetic_genus, enumerate_subcycles, fundamental_cycle, pairing,
    CanonicalDegrees, Cycle, RationalCycle,
};
pub use error::{Error, Result, ValidationError};
pub use graph::{parse_graph, parse_inline, DualGraph, IntersectionMatrix, Vertex};
