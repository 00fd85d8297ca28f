mod cache;
mod commands;
mod config;
mod output;
mod render;

use std::panic;
use std::process::ExitCode;

use clap::Parser;

use crate::commands::Status;
use crate::config::{Cli, CliConfig};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();

    let cli = Cli::parse();
    let cfg = match CliConfig::from_cli(cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Status::Usage as u8);
        }
    };

    // arithmetic overflow and other broken invariants panic deep inside the
    // library; they are internal failures, not crashes
    let status = match panic::catch_unwind(|| commands::run(&cfg)) {
        Ok(Ok(status)) => status,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.status()
        }
        Err(_) => Status::Internal,
    };
    ExitCode::from(status as u8)
}
