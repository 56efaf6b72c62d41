//! Command-line front end and susceptibility-data pipeline for the
//! trimer entanglement library.

pub mod commands;
pub mod pipeline;
pub mod render;
