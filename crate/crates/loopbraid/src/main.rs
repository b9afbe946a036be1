//! Thin command-line front end: flags and an optional JSON job file are
//! merged into a job spec, dispatched to the library, and the result is
//! printed in machine (JSON) or table form.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use loopbraid::cli::{
    cmd_baxter, cmd_cyclicity, cmd_extremal, cmd_gtl_check, cmd_hecke, cmd_info, cmd_orbit,
    cmd_poles, cmd_qloop_hecke, cmd_qloop_orbit, cmd_verify, render_table, CliError, JobResult,
    JobSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Machine,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "loopbraid",
    about = "Exact braid-group actions on Yangian and quantum loop algebra character data",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct CommonArgs {
    /// Simple Lie type, e.g. A1, B3, G2
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: Option<String>,
    /// Deformation parameter as an exact rational, e.g. 1, 2, -1/2
    #[arg(long)]
    hbar: Option<String>,
    /// JSON job file supplying type/hbar/p/q/word/options
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
    /// Word letters, comma-separated 1-based node indices, e.g. 1,2,1
    #[arg(long, value_name = "WORD")]
    word: Option<String>,
    /// A 1-based node index
    #[arg(long)]
    node: Option<usize>,
    /// Random seed for verification suites
    #[arg(long)]
    seed: Option<u64>,
    /// Case count for verification suites
    #[arg(long)]
    count: Option<usize>,
    /// Truncation order (series commands)
    #[arg(long)]
    order: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value = "machine")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan data, Casimir constant and quantized Cartan coefficients
    Info(CommonArgs),
    /// Monic braid orbit of a tuple along a word
    Orbit(CommonArgs),
    /// Pole sets of the module attached to p
    Poles(CommonArgs),
    /// Baxter polynomials and the factorization verdict
    Baxter(CommonArgs),
    /// Eigenvalue data and polynomials at an extremal weight
    Extremal(CommonArgs),
    /// Tensor-product cyclicity verdict for (p, q)
    Cyclicity(CommonArgs),
    /// Exact Hecke matrix model: verify relations and dump matrices
    Hecke(CommonArgs),
    /// Run a verification suite
    Verify {
        /// One of: braid-relations, difference-oracle, hecke,
        /// factorization, cyclicity-equivalence, qloop, gtl, all
        suite: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Braid orbit of a q-side l-weight along a word
    QloopOrbit(CommonArgs),
    /// Hecke relations over the rational function field in q
    QloopHecke(CommonArgs),
    /// Truncated intertwining check between the two braid actions
    GtlCheck(CommonArgs),
}

fn build_job(common: &CommonArgs) -> Result<JobSpec, CliError> {
    let mut job = match &common.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Schema(format!("cannot read {}: {}", path, e)))?;
            serde_json::from_str::<JobSpec>(&text)
                .map_err(|e| CliError::Schema(format!("bad job file: {}", e)))?
        }
        None => JobSpec::new(""),
    };
    if let Some(t) = &common.lie_type {
        job.lie_type = t.clone();
    }
    if job.lie_type.is_empty() {
        return Err(CliError::Schema(
            "a Lie type is required (--type or job file)".into(),
        ));
    }
    if let Some(h) = &common.hbar {
        job.hbar = Some(h.clone());
    }
    if let Some(w) = &common.word {
        let letters = w
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Schema(format!("cannot parse word `{}`", w)))?;
        job.word = Some(letters);
    }
    if let Some(n) = common.node {
        job.node = Some(n);
    }
    if let Some(s) = common.seed {
        job.options.seed = Some(s);
    }
    if let Some(c) = common.count {
        job.options.count = Some(c);
    }
    if let Some(o) = common.order {
        job.options.order = Some(o);
    }
    Ok(job)
}

fn run(args: &Args) -> Result<(JobResult, Format), CliError> {
    let (result, fmt) = match &args.command {
        Command::Info(c) => (cmd_info(&build_job(c)?)?, c.format),
        Command::Orbit(c) => (cmd_orbit(&build_job(c)?)?, c.format),
        Command::Poles(c) => (cmd_poles(&build_job(c)?)?, c.format),
        Command::Baxter(c) => (cmd_baxter(&build_job(c)?)?, c.format),
        Command::Extremal(c) => (cmd_extremal(&build_job(c)?)?, c.format),
        Command::Cyclicity(c) => (cmd_cyclicity(&build_job(c)?)?, c.format),
        Command::Hecke(c) => (cmd_hecke(&build_job(c)?)?, c.format),
        Command::Verify { suite, common } => {
            (cmd_verify(suite, &build_job(common)?)?, common.format)
        }
        Command::QloopOrbit(c) => (cmd_qloop_orbit(&build_job(c)?)?, c.format),
        Command::QloopHecke(c) => (cmd_qloop_hecke(&build_job(c)?)?, c.format),
        Command::GtlCheck(c) => (cmd_gtl_check(&build_job(c)?)?, c.format),
    };
    Ok((result, fmt))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok((result, fmt)) => {
            match fmt {
                Format::Machine => println!("{}", result.to_machine()),
                Format::Table => print!("{}", render_table(&result)),
            }
            if result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
