mod cli;
mod commands;
mod error;
mod input;
mod render;

use std::process::ExitCode;

use clap::Parser;

use cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bits = commands::precision(&cli);
    let result = commands::run(&cli, bits).and_then(|out| {
        let meta = cli.meta.then(|| render::metadata(bits));
        render::write(&out, cli.format, cli.out.as_deref(), bits, meta)?;
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("incgamma: verification failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("incgamma: {e}");
            ExitCode::from(e.code())
        }
    }
}
