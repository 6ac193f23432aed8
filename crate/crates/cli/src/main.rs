use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use semihopf_cli::{run, Cli};
use serde_json::json;

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = json!({ "format_version": 1, "result": out.json });
                emit(&serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            if cli.json {
                emit(&json!({ "format_version": 1, "error": e.to_string() }).to_string());
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
