use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quiverkit::dt::dt_invariant;
use quiverkit::search::{
    build_exchange_graph, catalog, enumerate_mutation_class, fixture, search_green_sequences, verify_sequence,
    SearchBounds, Want,
};
use quiverkit::{MutationState, Quiver, QuiverFile};
use quiverkit_cli::payload::{
    dt_payload, parse_sequence, to_json, CatalogEntry, ClassPayload, GraphPayload, ReportPayload, SearchPayload,
    StatePayload, verify_payload, DEFAULT_DEGREE,
};
use quiverkit_cli::server;

#[derive(Debug, Parser)]
#[command(name = "quiverkit", version, about = "Quiver mutation, green sequences and DT invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Quiver file: {"n", "arrows"} or {"matrix"}.
    #[arg(long, value_name = "FILE")]
    quiver: Option<PathBuf>,
    /// Catalog entry instead of a file.
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Quiver, String> {
        if let Some(name) = &self.fixture {
            return fixture(name).map(|f| f.quiver).map_err(|e| e.to_string());
        }
        let path = self.quiver.as_ref().expect("clap enforces a source");
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        QuiverFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long, default_value_t = 64)]
    max_depth: usize,
    #[arg(long, default_value_t = 100_000)]
    max_nodes: usize,
}

impl From<&Bounds> for SearchBounds {
    fn from(b: &Bounds) -> Self {
        SearchBounds {
            max_depth: b.max_depth,
            max_nodes: b.max_nodes,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mutate the framed quiver along a sequence and print the final state.
    Mutate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "", value_name = "LIST")]
        seq: String,
    },
    /// Compare the products of two sequences; exit 0 if equal, 1 if not.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LIST")]
        seq_a: String,
        #[arg(long, value_name = "LIST")]
        seq_b: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
    },
    /// Enumerate the mutation class up to isomorphism.
    Class {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10_000)]
        max_nodes: usize,
    },
    /// Classify a sequence, or search for maximal green sequences.
    Green {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LIST", conflicts_with = "search")]
        seq: Option<String>,
        /// Search (the default when no sequence is given).
        #[arg(long)]
        search: bool,
        /// Stop at the first sequence found.
        #[arg(long)]
        first: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Product of quantum dilogarithms along a sequence, or the invariant
    /// from a searched sequence when none is given.
    Dt {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LIST")]
        seq: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Oriented exchange graph.
    ExchangeGraph {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1000)]
        max_nodes: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// List the fixture catalog.
    Catalog,
    /// Run the HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Sessions are loaded from and saved to this file.
        #[arg(long, value_name = "FILE")]
        snapshot: Option<PathBuf>,
    },
}

enum Outcome {
    Ok(String),
    Unequal(String),
}

fn run(cmd: Command) -> Result<Outcome, String> {
    let e = |err: quiverkit::Error| err.to_string();
    let out = match cmd {
        Command::Mutate { source, seq } => {
            let q = source.load()?;
            let seq = parse_sequence(&seq)?;
            let state = MutationState::frame(&q).and_then(|s| s.apply_sequence(&seq)).map_err(e)?;
            to_json(&StatePayload::new(&state))
        }
        Command::Verify {
            source,
            seq_a,
            seq_b,
            degree,
        } => {
            let q = source.load()?;
            let p = verify_payload(&q, &parse_sequence(&seq_a)?, &parse_sequence(&seq_b)?, degree)
                .map_err(e)?;
            let json = to_json(&p);
            return Ok(if p.equal { Outcome::Ok(json) } else { Outcome::Unequal(json) });
        }
        Command::Class { source, max_nodes } => {
            let c = enumerate_mutation_class(&source.load()?, max_nodes).map_err(e)?;
            to_json(&ClassPayload::from(&c))
        }
        Command::Green {
            source,
            seq,
            search: _,
            first,
            bounds,
        } => {
            let q = source.load()?;
            match seq {
                Some(s) => {
                    let report = verify_sequence(&q, &parse_sequence(&s)?).map_err(e)?;
                    to_json(&ReportPayload::from(&report))
                }
                None => {
                    let want = if first { Want::First } else { Want::All };
                    let found = search_green_sequences(&q, (&bounds).into(), want).map_err(e)?;
                    to_json(&SearchPayload::from(&found))
                }
            }
        }
        Command::Dt {
            source,
            seq,
            degree,
            bounds,
        } => {
            let q = source.load()?;
            match seq {
                Some(s) => to_json(&dt_payload(&q, &parse_sequence(&s)?, degree).map_err(e)?),
                None => to_json(&dt_invariant(&q, degree, None, (&bounds).into()).map_err(e)?.to_record()),
            }
        }
        Command::ExchangeGraph {
            source,
            max_nodes,
            format,
        } => {
            let g = build_exchange_graph(&source.load()?, max_nodes).map_err(e)?;
            match format {
                Format::Dot => g.to_dot().trim_end().to_string(),
                Format::Json => to_json(&GraphPayload::from(&g)),
            }
        }
        Command::Catalog => {
            let entries: Vec<CatalogEntry> = catalog().iter().map(CatalogEntry::from).collect();
            to_json(&entries)
        }
        Command::Serve { port, snapshot } => {
            let rt = tokio::runtime::Runtime::new().map_err(|err| err.to_string())?;
            rt.block_on(server::serve(port, snapshot)).map_err(|err| err.to_string())?;
            String::new()
        }
    };
    Ok(Outcome::Ok(out))
}

/// Writes `text` to standard output; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok(text)) => {
            if !text.is_empty() {
                emit(&text);
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Unequal(text)) => {
            emit(&text);
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
