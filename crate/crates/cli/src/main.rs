//! `pcd`: relative arc density tests from the command line.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 data error.

// Negated comparisons are how NaN gets rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod io;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Test(a) => commands::test(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Curves(a) => commands::curves(a),
        Command::Efficacy(a) => commands::efficacy(a),
        Command::MeshInfo(a) => commands::mesh_info(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pcd: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
