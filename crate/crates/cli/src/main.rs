use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (outcome, pretty) = circlepath_cli::run(std::env::args().collect());
    let text = outcome.render(pretty);
    if outcome.to_stderr {
        eprint!("{text}");
    } else {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(text.as_bytes());
        let _ = out.flush();
    }
    ExitCode::from(outcome.code as u8)
}
