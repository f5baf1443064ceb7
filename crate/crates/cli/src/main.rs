use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};

use platcover::components;
use platcover_cli::catalog::{self, CATALOG};
use platcover_cli::input::{self, CoveringFile, NamedPlat};
use platcover_cli::report::{self, render, CatalogListing, CatalogReport};
use platcover_cli::{exit, exit_code};

#[derive(Parser)]
#[command(
    name = "platcover",
    version,
    about = "Plat presentations of links and their branched cyclic coverings"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components, conditions and linking matrix of a plat.
    Info {
        #[command(flatten)]
        plat: PlatSource,
        /// Per-component orientation seeds, e.g. `1:forward,2:backward`.
        #[arg(long, value_name = "COMPONENT:DIR,...")]
        seed_orientation: Option<String>,
    },
    /// Rewrite a plat into a special plat of the same link.
    Specialize {
        #[command(flatten)]
        plat: PlatSource,
    },
    /// Branched cyclic covering computations.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Built-in example plats.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Classify a covering by its component weights.
    Classify {
        #[command(flatten)]
        covering: CoveringSource,
    },
    /// Genus, Euler characteristic and bounds for a covering of a plat.
    Genus {
        #[command(flatten)]
        plat: PlatSource,
        #[command(flatten)]
        covering: CoveringSource,
        /// Fail instead of specializing a non-special plat.
        #[arg(long)]
        no_specialize: bool,
    },
    /// Genus bound from a bridge number and bridge bound from a genus.
    Bounds {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bridges: Option<u64>,
        #[arg(long)]
        genus: Option<u64>,
    },
    /// Whether a permutation of weighted branch points lifts to the cover.
    LiftCheck {
        #[arg(long)]
        p: u64,
        /// Branch point weights, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        /// One-based images of the points, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Args)]
struct PlatSource {
    /// Plat JSON file.
    file: Option<PathBuf>,
    /// Use a catalog entry instead of a file.
    #[arg(long, conflicts_with_all = ["file", "word"])]
    catalog: Option<String>,
    /// Inline braid word, e.g. "2 -1 2".
    #[arg(long, requires = "strands", conflicts_with = "file", allow_hyphen_values = true)]
    word: Option<String>,
    /// Strand count for --word.
    #[arg(long)]
    strands: Option<usize>,
}

impl PlatSource {
    fn load(&self) -> Result<NamedPlat> {
        match (&self.file, &self.catalog, &self.word) {
            (Some(path), None, None) => input::read_plat_file(path),
            (None, Some(name), None) => input::catalog_plat(name),
            (None, None, Some(word)) => {
                let strands = self.strands.ok_or_else(|| anyhow!("--word needs --strands"))?;
                Ok(NamedPlat {
                    name: None,
                    plat: platcover::PlatPresentation::parse(word, strands)?,
                })
            }
            _ => Err(anyhow!("give exactly one of a plat file, --catalog or --word")),
        }
    }
}

#[derive(Args)]
struct CoveringSource {
    /// Covering JSON file.
    #[arg(long, conflicts_with_all = ["p", "weights"])]
    covering: Option<PathBuf>,
    /// Covering degree.
    #[arg(long)]
    p: Option<u64>,
    /// Component weights, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i64>>,
}

impl CoveringSource {
    fn load(&self) -> Result<CoveringFile> {
        match (&self.covering, self.p, &self.weights) {
            (Some(path), None, None) => input::read_covering_file(path),
            (None, Some(p), Some(weights)) => Ok(CoveringFile {
                p,
                weights: weights.clone(),
            }),
            _ => Err(anyhow!("give either --covering FILE or both --p and --weights")),
        }
    }
}

fn run(cli: Cli) -> Result<String> {
    let json = !cli.text;
    match cli.command {
        Command::Info { plat, seed_orientation } => {
            let input = plat.load()?;
            let seeds = seed_orientation
                .map(|s| input::parse_seed_orientation(&s, components(&input.plat).mu()))
                .transpose()?;
            render(&report::info(&input, seeds.as_deref())?, json)
        }
        Command::Specialize { plat } => render(&report::specialize_report(&plat.load()?)?, json),
        Command::Cover(CoverCommand::Classify { covering }) => {
            render(&report::classify_report(&covering.load()?)?, json)
        }
        Command::Cover(CoverCommand::Genus {
            plat,
            covering,
            no_specialize,
        }) => render(
            &report::cover_report(&plat.load()?, &covering.load()?, !no_specialize)?,
            json,
        ),
        Command::Cover(CoverCommand::Bounds { p, bridges, genus }) => {
            render(&report::bounds_report(p, bridges, genus)?, json)
        }
        Command::Cover(CoverCommand::LiftCheck { p, weights, perm }) => {
            render(&report::lift_report(p, &weights, &perm)?, json)
        }
        Command::Catalog(CatalogCommand::List) => {
            render(&CatalogReport(CATALOG.iter().map(CatalogListing::from).collect()), json)
        }
        Command::Catalog(CatalogCommand::Show { name }) => {
            let entry = catalog::lookup(&name).ok_or_else(|| anyhow!("no catalog entry named {name:?}"))?;
            render(&CatalogListing::from(entry), json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::from(exit::OK)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
