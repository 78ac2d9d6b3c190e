//! Deterministic NGSO constellation analysis toolkit.
//!
//! Builds Walker star/delta constellations, propagates them on circular
//! orbits in an Earth-fixed frame, and evaluates ground coverage, RF link
//! budgets, phased-array and Butler-matrix beam models, inter-plane ISL
//! matching, and ground-to-ground routing with a packet-level simulator.

pub mod antenna;
pub mod constants;
pub mod coverage;
pub mod error;
pub mod link;
pub mod matching;
pub mod orbits;
pub mod presets;
pub mod routing;

pub use constants::PhysicalConstants;
pub use error::Error;
