//! Command line front end and HTTP session service for the `mutalg` library.

pub mod api;
pub mod commands;
pub mod input;
pub mod state;
