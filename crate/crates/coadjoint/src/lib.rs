//! Oracles, verification sweeps, JSON encodings and the command-line front
//! end for [`coadjoint_core`].

pub mod ball;
pub mod cli;
pub mod json;
pub mod lattice_file;
pub mod oracle;
pub mod sweep;

pub use coadjoint_core as core;
