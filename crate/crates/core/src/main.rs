use std::process::ExitCode;

fn main() -> ExitCode {
    fredholm_witness::cli::main_with_args(std::env::args_os())
}
