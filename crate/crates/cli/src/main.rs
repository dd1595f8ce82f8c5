use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lattice_cover_cli::run_cli(
        std::env::args_os(),
        &mut io::stdout(),
        &mut io::stderr(),
    ))
}
