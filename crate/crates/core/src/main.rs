use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout().lock();
    let code = caustics::cli::run(&args, &mut stdout);
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
