use std::process::ExitCode;

use archi_cli::config::Cli;
use archi_cli::EXIT_USAGE;
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    if let Some(n) = cli.run.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("archi: cannot start {n} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    let doc = archi_cli::run(&cli);
    let text = doc.render(cli.run.format);
    match &cli.run.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("archi: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if let Some(e) = &doc.error {
        eprintln!("archi: {e}");
    }
    ExitCode::from(doc.exit_code as u8)
}
