//! Command-line companion to `locopt-core`: file formats, seeded
//! instance generators, the subcommand implementations, and the
//! verification harness.

pub mod commands;
pub mod gen;
pub mod io;
pub mod verify;
