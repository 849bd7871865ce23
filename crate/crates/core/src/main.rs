use std::process::ExitCode;

fn main() -> ExitCode {
    cliffbell::cli::main()
}
