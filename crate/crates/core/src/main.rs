use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = dessin_cover::cli::run(std::env::args_os(), &mut std::io::stdin());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
