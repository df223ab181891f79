//! Command-line surface and benchmark harness over `cdsreg-core`.

pub mod bench;
pub mod cli;
pub mod error;

pub use bench::{run_bench, BenchConfig, BenchEntry, BenchReport, Method, Task};
pub use cli::run;
pub use error::CliError;
