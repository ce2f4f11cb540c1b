use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use gradarg::io::{
    run_session, DistributionMode, OutputFormat, SemanticsKind, Session, SessionOptions,
};
use gradarg::{LogicSystem, PhiFunction};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Phi,
    Coherent,
    Faithful,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LogicArg {
    Goedel,
    Lukasiewicz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn parse_phi(s: &str) -> Result<PhiFunction, String> {
    if s == "sigmoid" {
        return Ok(PhiFunction::SigmoidNearest);
    }
    let threshold = s
        .strip_prefix("step:")
        .ok_or_else(|| format!("expected `sigmoid` or `step:<threshold>`, got `{s}`"))?;
    match threshold.parse::<f64>() {
        Ok(t) if t.is_finite() => Ok(PhiFunction::StepThreshold(t)),
        _ => Err(format!("invalid step threshold `{threshold}`")),
    }
}

/// Model-checks graded conditionals and computes probabilities over the
/// many-valued labellings of a weighted argumentation graph.
#[derive(Debug, Parser)]
#[command(name = "gradarg", version)]
struct Cli {
    /// Graph file
    #[arg(long)]
    graph: PathBuf,
    /// Query file
    #[arg(long)]
    queries: PathBuf,
    /// Resolution: degrees range over {0, 1/n, ..., 1}
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Default φ for arguments without an override: `sigmoid` or `step:T`
    #[arg(long, default_value = "sigmoid", value_parser = parse_phi)]
    phi: PhiFunction,
    #[arg(long, value_enum, default_value_t = SemanticsArg::Phi)]
    semantics: SemanticsArg,
    #[arg(long, value_enum, default_value_t = LogicArg::Goedel)]
    logic: LogicArg,
    /// `uniform` or a file of `<index> <weight>` lines
    #[arg(long, default_value = "uniform")]
    dist: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Maximum number of labellings; also bounds --verify
    #[arg(long)]
    cap: Option<usize>,
    /// Cross-check the enumeration against exhaustive search
    #[arg(long)]
    verify: bool,
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<String, String> {
    let graph_text = read(&cli.graph)?;
    let queries_text = read(&cli.queries)?;
    let distribution = if cli.dist == "uniform" {
        DistributionMode::Uniform
    } else {
        let path = PathBuf::from(&cli.dist);
        DistributionMode::Explicit {
            name: cli.dist.clone(),
            text: read(&path)?,
        }
    };
    let options = SessionOptions {
        resolution: cli.n,
        semantics: match cli.semantics {
            SemanticsArg::Phi => SemanticsKind::Phi,
            SemanticsArg::Coherent => SemanticsKind::Coherent,
            SemanticsArg::Faithful => SemanticsKind::Faithful,
        },
        default_phi: cli.phi,
        logic: match cli.logic {
            LogicArg::Goedel => LogicSystem::Goedel,
            LogicArg::Lukasiewicz => LogicSystem::Lukasiewicz,
        },
        distribution,
        cap: cli.cap,
        verify: cli.verify,
    };
    let format = match cli.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
    };
    let session =
        Session::prepare(&graph_text, &queries_text, &options).map_err(|e| e.to_string())?;
    let report = run_session(&session).map_err(|e| e.to_string())?;
    Ok(report.render(format))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
