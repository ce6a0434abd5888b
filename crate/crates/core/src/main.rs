use std::process::ExitCode;

fn main() -> ExitCode {
    trinolab::cli::main_with_args(std::env::args_os())
}
