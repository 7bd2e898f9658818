use std::process::ExitCode;

fn main() -> ExitCode {
    critgroup::cli::run(std::env::args_os())
}
