//! Command-line and HTTP front ends for quiverkit.

pub mod payload;
pub mod server;
