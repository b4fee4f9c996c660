use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spincent::commands::{self, ExportKind};
use spincent::config::{resolve_max_n, BackendArg, LabelArg, OutputFormat, RunConfig, MAX_N_ENV};
use spincent::report::write_report;
use spincent::CliError;

/// Exact centralizers of spin(r) in so(N) and the supporting checks.
#[derive(Parser)]
#[command(name = "spincent", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// d_r and v_r for r = 1..=R (default 16).
    Dims(Common),
    /// Centralizer of one embedding, identified against the catalog.
    Centralize(Common),
    /// Run a verification suite: prop1, thm1, thm2, lemma, table2, decomp, gamma, phi or all.
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Write exact matrices as JSON.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// r (for verify: largest r or n to include)
    #[arg(long)]
    r: Option<usize>,
    /// Multiplicity m (m₁ when r ≡ 0 mod 4)
    #[arg(long)]
    m: Option<usize>,
    /// Second multiplicity m₂ for r ≡ 0 mod 4
    #[arg(long)]
    m2: Option<usize>,
    #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,
    /// Size guard on N; defaults to $SPINCENT_MAX_N, then 128
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Seed for sampled checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Label of Δ̃_r^± for r ≡ 0 mod 4
    #[arg(long, value_enum)]
    label: Option<LabelArg>,
}

impl Common {
    fn config(&self, command: &str) -> Result<RunConfig, CliError> {
        let env = std::env::var(MAX_N_ENV).ok();
        Ok(RunConfig {
            command: command.to_string(),
            r: self.r,
            m: self.m,
            m2: self.m2,
            backend: self.backend,
            max_n: resolve_max_n(self.max_n, env.as_deref())?,
            format: self.format,
            out: self.out.clone(),
            seed: self.seed,
            label: self.label,
        })
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (cfg, report) = match &cli.command {
        Command::Dims(c) => {
            let cfg = c.config("dims")?;
            let rep = commands::dims(&cfg)?;
            (cfg, rep)
        }
        Command::Centralize(c) => {
            let cfg = c.config("centralize")?;
            let rep = commands::centralize(&cfg)?;
            (cfg, rep)
        }
        Command::Verify { suite, common } => {
            let cfg = common.config(&format!("verify {suite}"))?;
            let rep = commands::verify(&cfg, suite)?;
            (cfg, rep)
        }
        Command::Export { kind, common } => {
            let cfg = common.config("export")?;
            let set = commands::export(&cfg, *kind)?;
            let mut w = sink(&cfg.out)?;
            writeln!(w, "{}", set.to_json()?)?;
            return Ok(0);
        }
    };
    let mut w = sink(&cfg.out)?;
    write_report(&report, cfg.format, &mut w)?;
    w.flush()?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
