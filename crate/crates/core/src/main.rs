use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = thompson::cli::run(std::env::args_os(), &mut std::io::stdin());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.code as u8)
}
