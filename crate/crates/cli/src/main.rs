use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use symlab_cli::report::{render, write_dir};
use symlab_cli::{parse_config, run, Format, EXIT_CONFIG};

/// Run symbolic-power containment experiments from a JSON config.
///
/// Exit status: 0 all verified, 1 a counterexample was found, 2 something was
/// inconclusive (and nothing refuted), 3 configuration or usage error.
#[derive(Parser, Debug)]
#[command(name = "symlab", version)]
struct Cli {
    /// Experiment configuration (JSON).
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Default degree window; overrides `limits.max_degree`.
    #[arg(long, value_name = "N")]
    max_degree: Option<i64>,
    /// Worker threads; overrides `limits.jobs`.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Seed for corpora without their own; overrides the config `seed`.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Write `report.<format>` and `timing.json` here instead of printing to stdout.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("symlab: {msg}");
    ExitCode::from(EXIT_CONFIG as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG as u8) } else { ExitCode::SUCCESS };
        }
    };
    let text = match fs::read_to_string(&cli.config) {
        Ok(t) => t,
        Err(e) => return fail(format_args!("cannot read {}: {e}", cli.config.display())),
    };
    let mut config = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    if let Some(d) = cli.max_degree {
        if d < 0 {
            return fail("--max-degree must be nonnegative");
        }
        config.limits.max_degree = Some(d);
    }
    if let Some(s) = cli.seed {
        config.seed = Some(s);
    }
    let jobs = cli.jobs.map(|j| j as usize);
    let bundle = run(&config, jobs);
    let written = match &cli.out {
        Some(dir) => write_dir(&bundle, cli.format, dir).map(|p| eprintln!("wrote {}", p.display())),
        None => render(&bundle, cli.format).and_then(|body| {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            Ok(out.flush()?)
        }),
    };
    if let Err(e) = written {
        return fail(e);
    }
    ExitCode::from(bundle.exit_code() as u8)
}
