use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use revpref::analysis::{analyze, render_text, AnalysisOptions};
use revpref::generators::{
    correspondence_at, correspondence_count, fixture, from_preference, parse_ranking, sample,
};
use revpref::verifier::{verify, Claim, Coverage};
use revpref::{ingest_dataset, ChoiceError, CompletionPolicy, PartialChoiceDataset, Universe};

/// Revealed-preference analysis of finite choice data.
#[derive(Parser)]
#[command(name = "revpref", version)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable rendering of the JSON report.
    #[arg(long, global = true)]
    text: bool,
    /// Fill unobserved menus before the V-axiom and delta checks
    /// (`full-menu` chooses the whole menu, `fail` rejects partial data).
    #[arg(long, global = true, value_name = "POLICY")]
    complete: Option<CompletionPolicy>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every checker on a dataset file.
    Analyze {
        path: PathBuf,
        /// List every menu where rationalization fails.
        #[arg(long)]
        all_failures: bool,
    },
    /// Exhaustively check a claim over every correspondence on n alternatives.
    Verify(VerifyArgs),
    /// Write datasets: a named fixture, random samples, an index range, or
    /// the choices induced by a ranking.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// prop-tau, prop-rho, theorem1, lemma1, warp or delta.
    #[arg(long)]
    claim: Claim,
    #[arg(long)]
    n: usize,
    /// Split the enumeration into K index ranges (run in parallel unless
    /// --shard picks one).
    #[arg(long, value_name = "K")]
    shards: Option<u128>,
    /// Run only range i of --shards.
    #[arg(long, value_name = "I", requires = "shards")]
    shard: Option<u128>,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// example1, example2, luce-raiffa or set-reference.
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
    /// Number of random correspondences (with --n and --seed).
    #[arg(long, requires = "n")]
    count: Option<usize>,
    /// Correspondences by enumeration index, as `lo..hi` (with --n).
    #[arg(long, value_name = "LO..HI", requires = "n")]
    range: Option<IndexRange>,
    /// A ranking such as `a>b~k>d`; `~` joins indifferent alternatives.
    #[arg(long, value_name = "RANKING")]
    from_preference: Option<String>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write one pretty-printed file per dataset into DIR instead of one
    /// JSON line per dataset on standard output.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy)]
struct IndexRange {
    lo: u128,
    hi: u128,
}

impl std::str::FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<u128>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IndexRange { lo, hi })
    }
}

enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Data(ChoiceError),
}

impl From<ChoiceError> for Failure {
    fn from(err: ChoiceError) -> Self {
        Failure::Data(err)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg.trim_end()),
            Failure::Io(path, err) => write!(f, "{}: {err}", path.display()),
            Failure::Data(err) => write!(f, "{err}"),
        }
    }
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "Usage",
            Failure::Io(..) => "Io",
            Failure::Data(err) => err.kind(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => return fail(Failure::Usage(err.to_string())),
    };
    match run(cli) {
        Ok(code) => code,
        Err(failure) => fail(failure),
    }
}

fn fail(failure: Failure) -> ExitCode {
    let report = json!({ "error": { "kind": failure.kind(), "message": failure.to_string() } });
    eprintln!("{report}");
    ExitCode::from(1)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze { path, all_failures } => {
            let text = fs::read_to_string(&path).map_err(|e| Failure::Io(path.clone(), e))?;
            let data = ingest_dataset(&text)?;
            let report = analyze(
                &data,
                AnalysisOptions {
                    completion: cli.complete,
                    all_failures,
                },
            )?;
            let value = report.to_value();
            if cli.text {
                emit(&render_text(&value));
            } else {
                emit(&(serde_json::to_string_pretty(&value).expect("json") + "\n"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let coverage = match (args.shards, args.shard) {
                (None, _) => Coverage::Sequential,
                (Some(shards), None) => Coverage::Parallel { shards },
                (Some(shards), Some(shard)) => Coverage::Slice { shards, shard },
            };
            let report = verify(args.claim, args.n, coverage)?;
            if cli.text {
                emit(&format!(
                    "{} n={}: {} instances, {} satisfying, {} counterexamples, {}\n",
                    report.claim,
                    report.n,
                    report.instances,
                    report.satisfying,
                    report.counterexamples.len(),
                    if report.verified {
                        "verified"
                    } else {
                        "NOT verified"
                    }
                ));
            } else {
                emit(&(report.to_json_string() + "\n"));
            }
            Ok(if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Generate(args) => {
            let datasets = generate(&args)?;
            match &args.out {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.clone(), e))?;
                    for (name, data) in &datasets {
                        write_dataset(dir, name, data)?;
                    }
                }
                None => {
                    for (_, data) in &datasets {
                        emit(&(data.to_json_string() + "\n"));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Write to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(err) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!(
            "{}",
            json!({ "error": { "kind": "Io", "message": err.to_string() } })
        );
        std::process::exit(1);
    }
}

fn write_dataset(dir: &Path, name: &str, data: &PartialChoiceDataset) -> Result<(), Failure> {
    let path = dir.join(format!("{name}.json"));
    fs::write(&path, data.to_json_pretty() + "\n").map_err(|e| Failure::Io(path, e))
}

/// Named datasets in output order.
fn generate(args: &GenerateArgs) -> Result<Vec<(String, PartialChoiceDataset)>, Failure> {
    let source = &args.source;
    if let Some(name) = &source.fixture {
        return Ok(vec![(name.clone(), fixture(name)?.dataset)]);
    }
    if let Some(ranking) = &source.from_preference {
        let (universe, weak) = parse_ranking(ranking)?;
        let c = from_preference(&weak.strict_part())?;
        let data = PartialChoiceDataset::from_correspondence(universe, &c)?;
        return Ok(vec![("preference".into(), data)]);
    }
    let n = args
        .n
        .ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let universe = Universe::lettered(n)?;
    let wrap = |name: String, c| -> Result<_, Failure> {
        Ok((
            name,
            PartialChoiceDataset::from_correspondence(universe.clone(), &c)?,
        ))
    };
    if let Some(count) = source.count {
        return sample(n, count, args.seed)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| wrap(format!("sample-{}-{i}", args.seed), c))
            .collect();
    }
    if let Some(IndexRange { lo, hi }) = source.range {
        let count = correspondence_count(n);
        if hi > count {
            return Err(ChoiceError::IndexOutOfRange { index: hi, count }.into());
        }
        return (lo..hi)
            .map(|i| wrap(format!("index-{i}"), correspondence_at(n, i)?))
            .collect();
    }
    unreachable!("clap requires one source")
}
