//! `palcomb` — Manacher arrays from the command line: compute, fingerprint,
//! graph, reconstruct, encode/decode, counter-array and duplication-tree
//! conversions, and the exhaustive census.
//!
//! Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
//! 1 usage or parse error, 2 unrealizable input, 3 k out of range.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use palcomb::{
    build_restriction_graph, census_csv, fingerprint_of, to_dot, Census, CompactEnvelope,
    CounterArray, DupTree, DuplicationHistory, Error, ManacherArray, Text, TreeSpec,
};

#[derive(Parser)]
#[command(name = "palcomb", version, about = "Manacher array toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the Manacher array of a text
    Manacher { text: String },
    /// Compute the palindromic fingerprint of a text
    Fingerprint { text: String },
    /// Build the restriction graph of a text or of an array file
    Graph {
        text: Option<String>,
        /// Read the array from a JSON file ("-" for stdin)
        #[arg(long)]
        array: Option<PathBuf>,
        /// Emit Graphviz DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Reconstruct a text from an array file
    Reconstruct {
        /// JSON array file ("-" for stdin)
        #[arg(long)]
        array: PathBuf,
        /// Exact alphabet size to use
        #[arg(long)]
        k: Option<usize>,
    },
    /// Encode a text's array into the compact bit envelope
    Encode { text: String },
    /// Decode a compact envelope file back into the full array
    Decode { file: PathBuf },
    /// Counter array of a text or of a compact envelope file
    Counter {
        text: Option<String>,
        /// Read a compact envelope from a JSON file ("-" for stdin)
        #[arg(long)]
        compact: Option<PathBuf>,
    },
    /// Rooted tandem duplication trees
    Trees {
        #[command(subcommand)]
        cmd: TreesCmd,
    },
    /// Shortest palindromic Zimin word of a given degree
    Zimin {
        #[arg(long)]
        degree: usize,
    },
    /// Largest degree k such that some suffix matches the degree-k pattern
    ZiminDegree { text: String },
    /// Minimal string length whose array forces k symbols
    Alpha { k: usize },
    /// Shortest string whose array needs exactly k symbols
    TightExample { k: usize },
    /// Enumerate distinct arrays and verify the counting bounds
    Census(CensusArgs),
}

#[derive(Subcommand)]
enum TreesCmd {
    /// Recover the unique ordered event list of a tree file
    Decompose { file: PathBuf },
    /// Replay a history file into its tree
    Replay {
        file: PathBuf,
        /// Emit Graphviz DOT
        #[arg(long)]
        dot: bool,
        /// Emit nested JSON
        #[arg(long)]
        json: bool,
    },
    /// Number of distinct rooted duplication trees with n leaves
    Count { n: usize },
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    max_n: usize,
    /// CSV output (the default)
    #[arg(long)]
    csv: bool,
    /// JSON output
    #[arg(long)]
    json: bool,
    /// Also list the unrealizable counter arrays per length
    #[arg(long)]
    witnesses: bool,
    /// Raise the exhaustive-enumeration limit (default 12)
    #[arg(long)]
    limit: Option<usize>,
}

enum CliError {
    Usage(String),
    Input(Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(Error::KOutOfRange { .. }) => 3,
            CliError::Input(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

fn usage(msg: impl ToString) -> CliError {
    CliError::Usage(msg.to_string())
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn parse_text(s: &str) -> Result<Text, CliError> {
    s.parse::<Text>().map_err(usage)
}

/// JSON syntax and shape problems exit 1; value-level violations exit 2.
fn load_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let body = read_input(path)?;
    serde_json::from_str(&body).map_err(|e| usage(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
struct RawArrayFile {
    n: usize,
    radii: Vec<usize>,
}

fn load_array(path: &Path) -> Result<ManacherArray, CliError> {
    let raw: RawArrayFile = load_json(path)?;
    Ok(ManacherArray::from_parts(raw.n, raw.radii)?)
}

#[derive(Deserialize)]
struct RawEnvelopeFile {
    n: usize,
    bit_len: usize,
    bits: String,
}

fn load_envelope(path: &Path) -> Result<CompactEnvelope, CliError> {
    let raw: RawEnvelopeFile = load_json(path)?;
    Ok(CompactEnvelope::from_base64(raw.n, raw.bit_len, &raw.bits)?)
}

#[derive(Deserialize)]
struct RawHistoryFile {
    events: Vec<(usize, usize)>,
}

fn load_history(path: &Path) -> Result<DuplicationHistory, CliError> {
    let raw: RawHistoryFile = load_json(path)?;
    Ok(DuplicationHistory::from_pairs(&raw.events)?)
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value).map_err(usage)?;
    println!("{line}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Manacher { text } => {
            let arr = palcomb::compute_manacher(&parse_text(&text)?);
            json_line(&arr)
        }
        Cmd::Fingerprint { text } => {
            let f = fingerprint_of(&parse_text(&text)?);
            json_line(&f)
        }
        Cmd::Graph { text, array, dot } => {
            let arr = match (text, array) {
                (Some(t), None) => palcomb::compute_manacher(&parse_text(&t)?),
                (None, Some(path)) => load_array(&path)?,
                _ => return Err(usage("pass exactly one of <text> or --array FILE")),
            };
            let g = build_restriction_graph(&palcomb::array_to_fingerprint(&arr))?;
            if dot {
                print!("{}", to_dot(&g, None));
                Ok(())
            } else {
                json_line(&g.to_json())
            }
        }
        Cmd::Reconstruct { array, k } => {
            let arr = load_array(&array)?;
            let text = match k {
                None => palcomb::reconstruct_minimal(&arr)?.text.into_text(),
                Some(k) => palcomb::reconstruct_with_k(&arr, k)?,
            };
            println!("{text}");
            Ok(())
        }
        Cmd::Encode { text } => {
            json_line(&CompactEnvelope::encode_text(&parse_text(&text)?))
        }
        Cmd::Decode { file } => {
            let arr = load_envelope(&file)?.decode()?;
            json_line(&arr)
        }
        Cmd::Counter { text, compact } => {
            let counter: CounterArray = match (text, compact) {
                (Some(t), None) => palcomb::compact_to_counter(&palcomb::delta_array(
                    &parse_text(&t)?,
                )),
                (None, Some(path)) => {
                    let env = load_envelope(&path)?;
                    let delta = palcomb::decode_bits(&env.bits, env.n)?;
                    palcomb::compact_to_counter(&delta)
                }
                _ => return Err(usage("pass exactly one of <text> or --compact FILE")),
            };
            json_line(&counter)
        }
        Cmd::Trees { cmd } => match cmd {
            TreesCmd::Decompose { file } => {
                let spec: TreeSpec = load_json(&file)?;
                let tree = DupTree::from_spec(&spec)?;
                json_line(&palcomb::decompose(&tree)?)
            }
            TreesCmd::Replay { file, dot, json } => {
                if dot && json {
                    return Err(usage("--dot and --json are mutually exclusive"));
                }
                let tree = palcomb::replay(&load_history(&file)?);
                if dot {
                    print!("{}", tree.to_dot());
                } else if json {
                    #[derive(serde::Serialize)]
                    struct Out {
                        leaves: usize,
                        tree: TreeSpec,
                    }
                    json_line(&Out {
                        leaves: tree.leaf_count(),
                        tree: tree.to_spec(),
                    })?;
                } else {
                    print!("{}", tree.render_indented());
                }
                Ok(())
            }
            TreesCmd::Count { n } => {
                if n == 0 {
                    return Err(usage("trees have at least one leaf"));
                }
                println!("{}", palcomb::r_count(n));
                Ok(())
            }
        },
        Cmd::Zimin { degree } => {
            if degree == 0 || degree > 24 {
                return Err(usage("degree must be in 1..=24"));
            }
            println!("{}", palcomb::pal_zimin_word(degree));
            Ok(())
        }
        Cmd::ZiminDegree { text } => {
            println!("{}", palcomb::pal_zimin_suffix_degree(&parse_text(&text)?));
            Ok(())
        }
        Cmd::Alpha { k } => {
            if k == 0 || k > 60 {
                return Err(usage("k must be in 1..=60"));
            }
            println!("{}", palcomb::alpha(k));
            Ok(())
        }
        Cmd::TightExample { k } => {
            if !(2..=24).contains(&k) {
                return Err(usage("k must be in 2..=24"));
            }
            println!("{}", palcomb::tight_example(k));
            Ok(())
        }
        Cmd::Census(args) => {
            if args.csv && args.json {
                return Err(usage("--csv and --json are mutually exclusive"));
            }
            let mut census = Census::default();
            if let Some(limit) = args.limit {
                census.max_exhaustive = limit;
            }
            let rows = census.table(args.max_n)?;
            let witnesses: Option<Vec<(usize, Vec<CounterArray>)>> = if args.witnesses {
                let mut out = Vec::new();
                for n in 1..=args.max_n {
                    out.push((n, census.unrealizable_counters(n)?));
                }
                Some(out)
            } else {
                None
            };
            if args.json {
                #[derive(serde::Serialize)]
                struct Out {
                    rows: Vec<palcomb::CensusRow>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    witnesses: Option<Vec<WitnessRow>>,
                }
                #[derive(serde::Serialize)]
                struct WitnessRow {
                    n: usize,
                    counters: Vec<Vec<usize>>,
                }
                json_line(&Out {
                    rows,
                    witnesses: witnesses.map(|ws| {
                        ws.into_iter()
                            .map(|(n, cs)| WitnessRow {
                                n,
                                counters: cs.iter().map(|c| c.values().to_vec()).collect(),
                            })
                            .collect()
                    }),
                })?;
            } else {
                print!("{}", census_csv(&rows));
                if let Some(ws) = witnesses {
                    println!();
                    println!("n,counter");
                    for (n, cs) in ws {
                        for c in cs {
                            let vals = c
                                .values()
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ");
                            println!("{n},{vals}");
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Input(err) => eprintln!("error: {err}"),
            }
            ExitCode::from(e.code())
        }
    }
}
