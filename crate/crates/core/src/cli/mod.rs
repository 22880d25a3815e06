pub mod args;
mod commands;

pub use commands::{exit_code, run};
