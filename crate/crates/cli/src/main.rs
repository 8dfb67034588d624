//! `neutro`: command-line front end for neutrosophic models.

mod cognitive;
mod graphs;
mod input;
mod matrices;
mod ngraphs;
mod relations;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use neutro_core::Error;

use report::{Format, Report};

#[derive(Parser)]
#[command(name = "neutro", version, about = "Neutrosophic graphs, relations and cognitive maps")]
struct Cli {
    /// Output layout.
    #[arg(long, value_enum, default_value = "plain", global = true)]
    format: Format,
    /// Read inputs as bare CSV matrices instead of model files.
    #[arg(long, global = true)]
    from_csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical graph analysis and generation.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Neutrosophic graphs.
    #[command(subcommand)]
    Ngraph(NgraphCommand),
    /// Fuzzy and neutrosophic relations.
    #[command(subcommand)]
    Rel(RelCommand),
    /// Cognitive maps.
    #[command(subcommand)]
    Cm(CmCommand),
    /// Relational maps.
    #[command(subcommand)]
    Rm(RmCommand),
    /// Multiply a chain of relational maps.
    Link(LinkArgs),
    /// Render a model.
    #[command(subcommand)]
    Export(ExportCommand),
    /// Neutrosophic matrix arithmetic on CSV matrices.
    #[command(subcommand)]
    Matrix(MatrixCommand),
}

#[derive(Subcommand)]
pub enum GraphCommand {
    /// Report invariants; with no selection flags every section is shown.
    Analyze(graphs::AnalyzeArgs),
    /// Print a generated graph as a model file.
    Generate {
        /// `petersen`, `complete:N`, `complete-bipartite:T:S`, `cycle:N`,
        /// `path:N`, `star:N` or `wheel:N`.
        family: String,
    },
}

#[derive(Subcommand)]
pub enum NgraphCommand {
    /// Kind, degrees, components, tree and Euler properties.
    Classify { file: String },
    /// Neutrosophic vertex and edge colorings.
    Color { file: String },
    /// Print a neutrosophic Petersen graph as a model file.
    Petersen {
        /// Number of indeterminate vertices.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Number of indeterminate edges.
        #[arg(long, default_value_t = 0)]
        edge: usize,
    },
    /// Neutrosophic adjacency matrix.
    Adjacency { file: String },
    /// Classify a vertex sequence given by labels, e.g. `v1,v2,N1`.
    Walk { file: String, sequence: String },
}

#[derive(Subcommand)]
pub enum RelCommand {
    /// Max-min composition `P∘Q`.
    Compose { p: String, q: String },
    /// Transitive closure.
    Closure { r: String },
    /// Reflexivity, symmetry and transitivity family.
    Props {
        r: String,
        /// Threshold for ε-reflexivity, strictly between 0 and 1.
        #[arg(long, default_value = "1/2")]
        epsilon: String,
    },
    /// Relational join, listed as its nonzero triples.
    Join { p: String, q: String },
    /// Inverse relation.
    Inverse { r: String },
    /// Domain, range and height.
    Height { r: String },
    /// Check a homomorphism given as `x=y` pairs.
    Hom {
        r: String,
        q: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        strong: bool,
    },
}

#[derive(Subcommand)]
pub enum CmCommand {
    /// Iterate a state vector to its hidden pattern.
    Run(cognitive::CmRunArgs),
    /// Run every `{0, 1}` initial vector.
    Sweep(cognitive::SweepArgs),
    /// Look for paths of differing sign between the same concepts.
    Balance { model: String },
    /// Whether the map splits into a domain and range space.
    Convertible { model: String },
    /// Print the model with every `I` replaced by `0`.
    Degrade { model: String },
}

#[derive(Subcommand)]
pub enum RmCommand {
    /// Iterate a state vector through the map and its transpose.
    Run(cognitive::RmRunArgs),
}

#[derive(Args)]
pub struct LinkArgs {
    /// Relational models (or CSV matrices) in chain order.
    #[arg(required = true, num_args = 2..)]
    models: Vec<String>,
    /// Also print the sign-thresholded matrix.
    #[arg(long)]
    signed: bool,
    /// CSV matrix to diff the signed result against.
    #[arg(long)]
    diff: Option<String>,
}

#[derive(Subcommand)]
pub enum ExportCommand {
    /// Graphviz DOT.
    Dot { model: String },
}

#[derive(Subcommand)]
pub enum MatrixCommand {
    /// Product `AB`.
    Mul { a: String, b: String },
    /// Ranks of both split components.
    Rank { a: String },
    Transpose { a: String },
}

/// Distinct exit status per error class.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Shape(_) => 3,
        Error::TooLarge { .. } => 4,
        Error::NotFound(_) => 5,
        Error::Domain(_) => 1,
    }
}

fn run(cli: &Cli) -> neutro_core::Result<String> {
    let csv = cli.from_csv;
    let report: Report = match &cli.command {
        Command::Graph(GraphCommand::Analyze(args)) => graphs::analyze(args, csv)?,
        Command::Graph(GraphCommand::Generate { family }) => return graphs::generate_model(family),
        Command::Ngraph(NgraphCommand::Classify { file }) => ngraphs::classify(file, csv)?,
        Command::Ngraph(NgraphCommand::Color { file }) => ngraphs::color(file, csv)?,
        Command::Ngraph(NgraphCommand::Petersen { vertex, edge }) => return ngraphs::petersen(*vertex, *edge),
        Command::Ngraph(NgraphCommand::Adjacency { file }) => ngraphs::adjacency(file, csv)?,
        Command::Ngraph(NgraphCommand::Walk { file, sequence }) => ngraphs::walk(file, sequence, csv)?,
        Command::Rel(cmd) => relations::run(cmd, csv)?,
        Command::Cm(CmCommand::Run(args)) => cognitive::cm_run(args, csv)?,
        Command::Cm(CmCommand::Sweep(args)) => cognitive::sweep(args, csv)?,
        Command::Cm(CmCommand::Balance { model }) => cognitive::balance(model, csv)?,
        Command::Cm(CmCommand::Convertible { model }) => cognitive::convertible(model, csv)?,
        Command::Cm(CmCommand::Degrade { model }) => return cognitive::degrade(model, csv),
        Command::Rm(RmCommand::Run(args)) => cognitive::rm_run(args, csv)?,
        Command::Link(args) => cognitive::link(args, csv)?,
        Command::Export(ExportCommand::Dot { model }) => {
            return Ok(neutro_core::dot::to_dot(&input::any_model(model, csv)?))
        }
        Command::Matrix(cmd) => matrices::run(cmd)?,
    };
    Ok(report.render(cli.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
