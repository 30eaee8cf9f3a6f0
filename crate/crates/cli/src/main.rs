//! `demazure`: command-line front end for Demazure characters, polytopes,
//! faces, semigroup cones and saturation sweeps.
//!
//! Exit status: 0 when every check passes, 1 on a mathematical discrepancy,
//! 2 on usage or input errors.

mod args;
mod cache;
mod commands;
mod emit;
mod error;
mod sweep;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Status;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Char(a) => commands::char_cmd(a),
        Command::Polytope(a) => commands::polytope_cmd(a),
        Command::Points(a) => commands::points_cmd(a),
        Command::Segment(a) => commands::segment_cmd(a),
        Command::Faces(a) => commands::faces_cmd(a),
        Command::Cone(a) => commands::cone_cmd(a),
        Command::Hilbert(a) => commands::hilbert_cmd(a),
        Command::Saturate(a) => commands::saturate_cmd(a),
        Command::Sweep(a) => sweep::sweep_cmd(a),
        Command::Table(a) => commands::table_cmd(a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Discrepancy) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
