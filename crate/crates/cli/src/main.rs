use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dgal_cli::{output_option, render, run, verify, write_atomic, CliError};

#[derive(Parser)]
#[command(name = "dgal", version, about = "Exact telescoping, obstruction and group certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file and write its certificate.
    Run {
        problem: PathBuf,
        /// Output path; defaults to `options.output` in the problem, else stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recheck a certificate file.
    Verify { certificate: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn report(e: &CliError) -> ExitCode {
    print!("{}", render(&e.to_json()));
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run { problem, output } => {
            let text = match read(&problem) {
                Ok(t) => t,
                Err(e) => return report(&e),
            };
            let cert = match run(&text) {
                Ok(c) => c,
                Err(e) => return report(&e),
            };
            let rendered = render(&cert);
            match output.or_else(|| output_option(&text).map(PathBuf::from)) {
                Some(path) => {
                    if let Err(e) = write_atomic(&path, &rendered) {
                        return report(&CliError::Io(e));
                    }
                }
                None => print!("{rendered}"),
            }
            ExitCode::SUCCESS
        }
        Command::Verify { certificate } => {
            let result = read(&certificate).and_then(|t| verify(&t));
            match result {
                Ok(()) => {
                    println!("verified");
                    ExitCode::SUCCESS
                }
                Err(e) => report(&e),
            }
        }
    }
}
