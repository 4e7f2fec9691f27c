use std::process::ExitCode;

use fractal_mis_cli::{parse_args, run};

fn main() -> ExitCode {
    let cmd = match parse_args(std::env::args_os().skip(1)) {
        Ok(cmd) => cmd,
        Err(e) => e.exit(),
    };
    let result = run(&cmd).and_then(|outcome| {
        outcome.output.emit(cmd.out.as_deref())?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
