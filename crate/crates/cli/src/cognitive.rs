use clap::Args;
use neutro_core::cognitive::{
    self, frm_convertible, CmRun, ConceptModel, HiddenPattern, PatternKind, RelationalModel, Side, StateVector,
};
use neutro_core::graph::Bipartiteness;
use neutro_core::model::{Model, ModelFile};
use neutro_core::{Error, NeutroMatrix, Result};

use crate::input;
use crate::report::{list, Report};
use crate::LinkArgs;

/// Largest model accepted by `cm sweep`.
const MAX_SWEEP_CONCEPTS: usize = 12;

#[derive(Args)]
pub struct CmRunArgs {
    model: String,
    /// Concepts switched on initially, e.g. `C1,C4`.
    #[arg(long, conflicts_with = "state")]
    on: Option<String>,
    /// Full initial vector, e.g. `"1 0 I 0"`.
    #[arg(long)]
    state: Option<String>,
    /// Concepts held on after every update; defaults to the file's clamp
    /// line, then to the initially-on concepts.
    #[arg(long, conflicts_with = "no_clamp")]
    clamp: Option<String>,
    /// Hold nothing on.
    #[arg(long)]
    no_clamp: bool,
    /// Replace every `I` weight by `0` first.
    #[arg(long)]
    degrade: bool,
}

#[derive(Args)]
pub struct SweepArgs {
    model: String,
    #[arg(long)]
    degrade: bool,
}

#[derive(Args)]
pub struct RmRunArgs {
    model: String,
    /// Space holding the initial vector.
    #[arg(long, value_enum, default_value = "domain")]
    side: SideArg,
    #[arg(long, conflicts_with = "state")]
    on: Option<String>,
    #[arg(long)]
    state: Option<String>,
    #[arg(long, conflicts_with = "no_clamp")]
    clamp: Option<String>,
    #[arg(long)]
    no_clamp: bool,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum SideArg {
    Domain,
    Range,
}

fn names_to_indices(text: &str, lookup: impl Fn(&str) -> Result<usize>) -> Result<Vec<usize>> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(lookup).collect()
}

fn initial_state(
    n: usize,
    on: &Option<String>,
    state: &Option<String>,
    lookup: impl Fn(&str) -> Result<usize>,
) -> Result<StateVector> {
    match (on, state) {
        (_, Some(s)) => s.parse(),
        (Some(names), None) => {
            let mut values = StateVector::zeros(n).values().to_vec();
            for i in names_to_indices(names, lookup)? {
                values[i] = cognitive::Activation::On;
            }
            Ok(StateVector::new(values))
        }
        (None, None) => Err(Error::Domain("give --on or --state".into())),
    }
}

fn resolve_clamp(
    clamp: &Option<String>,
    no_clamp: bool,
    file_clamp: Option<Vec<usize>>,
    lookup: impl Fn(&str) -> Result<usize>,
) -> Result<Option<Vec<usize>>> {
    if no_clamp {
        return Ok(Some(Vec::new()));
    }
    match clamp {
        Some(text) => names_to_indices(text, lookup).map(Some),
        None => Ok(file_clamp),
    }
}

fn pattern_lines(r: &mut Report, prefix: &str, p: &HiddenPattern) {
    r.line(format!("{prefix}pattern"), p.kind);
    match p.kind {
        PatternKind::FixedPoint => {
            r.line(format!("{prefix}fixed_point"), &p.states[0]);
        }
        PatternKind::LimitCycle => {
            r.block(format!("{prefix}cycle"), p.states.iter().map(ToString::to_string));
        }
    }
    r.line(format!("{prefix}steps_to_enter"), p.steps_to_enter);
}

fn run_report(model: &ConceptModel, run: &CmRun) -> Report {
    let mut r = Report::new();
    r.line("concepts", model.names().join(" "));
    r.line("initial", &run.initial);
    r.line("clamp", list(run.clamp.iter().map(|&i| &model.names()[i])));
    r.block(
        "trajectory",
        run.trajectory.iter().enumerate().map(|(i, s)| format!("A{}: {s}", i + 1)),
    );
    pattern_lines(&mut r, "", &run.pattern);
    r.line("iterations", run.iterations());
    r.line("fixed_point_verified", cognitive::is_consistent(model, run));
    r.block(
        "notes",
        run.notes.iter().map(|n| {
            format!(
                "update {} at {}: {} thresholds to {}",
                n.step,
                model.names()[n.concept],
                n.raw,
                n.result.symbol()
            )
        }),
    );
    r
}

fn load_cm(path: &str, degrade: bool, csv: bool) -> Result<(ConceptModel, Option<Vec<usize>>)> {
    let (model, clamp) = input::concept_model(path, csv)?;
    Ok((if degrade { cognitive::degrade(&model) } else { model }, clamp))
}

pub fn cm_run(args: &CmRunArgs, csv: bool) -> Result<Report> {
    let (model, file_clamp) = load_cm(&args.model, args.degrade, csv)?;
    let lookup = |name: &str| model.index_of(name);
    let s0 = initial_state(model.len(), &args.on, &args.state, lookup)?;
    let clamp = resolve_clamp(&args.clamp, args.no_clamp, file_clamp, lookup)?;
    let run = cognitive::cm_run(&model, &s0, clamp.as_deref())?;
    let mut r = run_report(&model, &run);
    if args.degrade {
        r.line("degraded", true);
    }
    Ok(r)
}

pub fn sweep(args: &SweepArgs, csv: bool) -> Result<Report> {
    let (model, _) = load_cm(&args.model, args.degrade, csv)?;
    if model.len() > MAX_SWEEP_CONCEPTS {
        return Err(Error::TooLarge {
            what: "concept count for a full sweep",
            actual: model.len(),
            limit: MAX_SWEEP_CONCEPTS,
        });
    }
    let mut lines = Vec::new();
    for s0 in StateVector::all_crisp(model.len()) {
        let run = cognitive::cm_run(&model, &s0, None)?;
        let pattern = match run.pattern.kind {
            PatternKind::FixedPoint => run.pattern.states[0].to_string(),
            PatternKind::LimitCycle => {
                format!("cycle {}", run.pattern.states.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "))
            }
        };
        lines.push(format!("{s0} -> {pattern}"));
    }
    let mut r = Report::new();
    r.line("concepts", model.names().join(" "));
    r.line("runs", lines.len());
    r.block("patterns", lines);
    Ok(r)
}

pub fn balance(path: &str, csv: bool) -> Result<Report> {
    let (model, _) = input::concept_model(path, csv)?;
    let b = cognitive::balance(&model)?;
    let mut r = Report::new();
    r.line("balanced", b.balanced);
    if let Some(witness) = b.witness {
        for (i, (path, sign)) in witness.iter().enumerate() {
            let names: Vec<&str> = path.iter().map(|&v| model.names()[v].as_str()).collect();
            r.line(format!("path_{}", i + 1), format!("{} ({sign})", names.join(" -> ")));
        }
    }
    Ok(r)
}

pub fn convertible(path: &str, csv: bool) -> Result<Report> {
    let (model, _) = input::concept_model(path, csv)?;
    let names = |vs: &[usize]| list(vs.iter().map(|&v| &model.names()[v]));
    let mut r = Report::new();
    match frm_convertible(&model) {
        Bipartiteness::Bipartite { left, right } => {
            r.line("convertible", true);
            r.line("domain", names(&left));
            r.line("range", names(&right));
        }
        Bipartiteness::OddCycle(cycle) => {
            r.line("convertible", false);
            r.line("odd_cycle", names(&cycle));
        }
    }
    Ok(r)
}

pub fn degrade(path: &str, csv: bool) -> Result<String> {
    let (model, _) = input::concept_model(path, csv)?;
    Ok(ModelFile::from(Model::Concept(cognitive::degrade(&model))).to_text())
}

pub fn rm_run(args: &RmRunArgs, csv: bool) -> Result<Report> {
    let (model, file_clamp) = input::relational_model(&args.model, csv)?;
    let side = match args.side {
        SideArg::Domain => Side::Domain,
        SideArg::Range => Side::Range,
    };
    let lookup = |name: &str| model.index_of(side, name);
    let s0 = initial_state(model.names(side).len(), &args.on, &args.state, lookup)?;
    let clamp = resolve_clamp(&args.clamp, args.no_clamp, file_clamp, lookup)?;
    let run = cognitive::rm_run(&model, &s0, side, clamp.as_deref())?;
    let mut r = Report::new();
    r.line("domain_concepts", model.domain_names().join(" "));
    r.line("range_concepts", model.range_names().join(" "));
    r.line("side", side);
    r.line("initial", &s0);
    r.line("clamp", list(run.clamp.iter().map(|&i| &model.names(side)[i])));
    r.block(
        "trajectory",
        run.trajectory.iter().enumerate().map(|(i, (d, g))| format!("{}: {d} | {g}", i + 1)),
    );
    pattern_lines(&mut r, "domain_", &run.domain);
    pattern_lines(&mut r, "range_", &run.range);
    Ok(r)
}

fn labeled_matrix(m: &NeutroMatrix, rows: &[String], cols: &[String]) -> Vec<String> {
    let mut out = vec![format!(", {}", cols.join(", "))];
    for (i, label) in rows.iter().enumerate() {
        let cells: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push(format!("{label}, {}", cells.join(", ")));
    }
    out
}

pub fn link(args: &LinkArgs, csv: bool) -> Result<Report> {
    let models: Vec<RelationalModel> = args
        .models
        .iter()
        .map(|p| input::relational_model(p, csv).map(|(m, _)| m))
        .collect::<Result<_>>()?;
    let matrices: Vec<NeutroMatrix> = models.iter().map(|m| m.weights().clone()).collect();
    let report = cognitive::link(&matrices)?;
    let first = &models[0];
    let rows = if report.first_transposed { first.range_names() } else { first.domain_names() };
    let cols = models.last().expect("at least two maps").range_names();
    let mut r = Report::new();
    r.line("chain", list(matrices.iter().map(|m| format!("{}x{}", m.rows(), m.cols()))));
    r.line("first_transposed", report.first_transposed);
    r.line("shape", format!("{}x{}", report.raw.rows(), report.raw.cols()));
    r.block("raw", labeled_matrix(&report.raw, rows, cols));
    if args.signed || args.diff.is_some() {
        r.block("signed", labeled_matrix(&report.signed, rows, cols));
    }
    if let Some(path) = &args.diff {
        let expected = input::read_matrix(path)?;
        if expected.shape() != report.signed.shape() {
            return Err(Error::Shape(format!(
                "diff target is {}x{}, signed result is {}x{}",
                expected.rows(),
                expected.cols(),
                report.signed.rows(),
                report.signed.cols()
            )));
        }
        let mut diffs = Vec::new();
        for i in 0..expected.rows() {
            for j in 0..expected.cols() {
                let (got, want) = (report.signed.get(i, j), expected.get(i, j));
                if got != want {
                    diffs.push(format!("({}, {}): computed {got}, expected {want}", rows[i], cols[j]));
                }
            }
        }
        r.line("differences", diffs.len());
        r.block("diff", diffs);
    }
    Ok(r)
}
