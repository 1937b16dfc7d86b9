use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = qudit_swap::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    status.into()
}
