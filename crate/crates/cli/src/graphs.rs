use clap::Args;
use neutro_core::graph::{
    chromatic_polynomial, connectivity, degree_report, edge_coloring, eulerian, generate, hamiltonian, is_bipartite,
    metrics, spanning_tree_count, tutte, vertex_coloring, Bipartiteness, Family, Graph, TutteConfig,
};
use neutro_core::model::{Model, ModelFile};
use neutro_core::Result;

use crate::report::{list, optional, Report};

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Edge-list model file, `-`, or a family name such as `petersen`.
    source: String,
    #[arg(long)]
    degrees: bool,
    #[arg(long)]
    connectivity: bool,
    #[arg(long)]
    bipartite: bool,
    /// Girth, circumference and diameter.
    #[arg(long)]
    metrics: bool,
    /// Chromatic number and chromatic index.
    #[arg(long)]
    coloring: bool,
    /// Chromatic polynomial.
    #[arg(long)]
    polynomial: bool,
    /// Number of spanning trees.
    #[arg(long)]
    spanning_trees: bool,
    /// Randomized Tutte-matrix 1-factor test.
    #[arg(long)]
    tutte: bool,
    #[arg(long)]
    euler: bool,
    #[arg(long)]
    hamilton: bool,
    /// Seed for the Tutte test.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random evaluations in the Tutte test.
    #[arg(long, default_value_t = 20)]
    repetitions: usize,
}

impl AnalyzeArgs {
    fn none_selected(&self) -> bool {
        ![
            self.degrees,
            self.connectivity,
            self.bipartite,
            self.metrics,
            self.coloring,
            self.polynomial,
            self.spanning_trees,
            self.tutte,
            self.euler,
            self.hamilton,
        ]
        .contains(&true)
    }
}

/// Runs a section; with `strict` errors propagate, otherwise they are
/// reported under `key`.
fn section(report: &mut Report, key: &str, strict: bool, body: impl FnOnce(&mut Report) -> Result<()>) -> Result<()> {
    let mut part = Report::new();
    match body(&mut part) {
        Ok(()) => {
            report.extend(part);
            Ok(())
        }
        Err(e) if !strict => {
            report.line(key, format!("unavailable ({e})"));
            Ok(())
        }
        Err(e) => Err(e),
    }
}

fn edge_labels(g: &Graph) -> Vec<String> {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect()
}

pub fn analyze(args: &AnalyzeArgs, from_csv: bool) -> Result<Report> {
    let g = crate::input::graph(&args.source, from_csv)?;
    let all = args.none_selected();
    let strict = !all;
    let mut r = Report::new();
    r.line("vertices", g.vertex_count());
    r.line("edges", g.edges().len());
    if all || args.degrees {
        let d = degree_report(&g);
        r.line("degrees", list(&d.degrees));
        r.line("min_degree", optional(d.min));
        r.line("max_degree", optional(d.max));
    }
    if all || args.connectivity {
        let c = connectivity(&g);
        r.line("connected", c.is_connected);
        r.line("components", c.components.len());
        r.line("cut_vertices", list(&c.cut_vertices));
        let labels = edge_labels(&g);
        r.line("cut_edges", list(c.cut_edges.iter().map(|&e| &labels[e])));
    }
    if all || args.bipartite {
        match is_bipartite(&g) {
            Bipartiteness::Bipartite { left, right } => {
                r.line("bipartite", true);
                r.line("left", list(left));
                r.line("right", list(right));
            }
            Bipartiteness::OddCycle(cycle) => {
                r.line("bipartite", false);
                r.line("odd_cycle", list(cycle));
            }
        }
    }
    if all || args.metrics {
        section(&mut r, "metrics", strict, |r| {
            let m = metrics(&g)?;
            r.line("girth", optional(m.girth));
            r.line("circumference", optional(m.circumference));
            r.line("diameter", optional(m.diameter));
            Ok(())
        })?;
    }
    if all || args.coloring {
        section(&mut r, "chromatic_number", strict, |r| {
            let v = vertex_coloring(&g)?;
            r.line("chromatic_number", v.chromatic_number);
            r.line("vertex_colors", list(v.colors));
            Ok(())
        })?;
        section(&mut r, "chromatic_index", strict, |r| {
            let e = edge_coloring(&g)?;
            r.line("chromatic_index", e.chromatic_index);
            r.line("edge_colors", list(e.colors));
            Ok(())
        })?;
    }
    if all || args.polynomial {
        section(&mut r, "chromatic_polynomial", strict, |r| {
            r.line("chromatic_polynomial", chromatic_polynomial(&g)?);
            Ok(())
        })?;
    }
    if all || args.spanning_trees {
        section(&mut r, "spanning_trees", strict, |r| {
            r.line("spanning_trees", spanning_tree_count(&g)?);
            Ok(())
        })?;
    }
    if all || args.tutte {
        section(&mut r, "one_factor", strict, |r| {
            let config = TutteConfig {
                repetitions: args.repetitions,
                seed: args.seed,
            };
            let t = tutte(&g, &config)?;
            r.line("one_factor", t.has_one_factor);
            r.line("one_factor_exhaustive", optional(t.brute_force));
            r.line("tutte_seed", args.seed);
            r.line("tutte_repetitions", args.repetitions);
            Ok(())
        })?;
    }
    if all || args.euler {
        let e = eulerian(&g);
        r.line("eulerian", e.is_eulerian);
        if let Some(tour) = e.tour {
            let labels = edge_labels(&g);
            r.line("euler_tour", list(tour.iter().map(|&i| &labels[i])));
        }
    }
    if all || args.hamilton {
        section(&mut r, "hamiltonian", strict, |r| {
            let h = hamiltonian(&g)?;
            r.line("hamiltonian", h.is_hamiltonian);
            r.line("closure_complete", h.closure.edges().len() == g.vertex_count() * (g.vertex_count() - 1) / 2);
            if let Some(cycle) = h.cycle {
                r.line("hamilton_cycle", list(cycle));
            }
            Ok(())
        })?;
    }
    Ok(r)
}

pub fn generate_model(family: &str) -> Result<String> {
    let g = generate(family.parse::<Family>()?)?;
    Ok(ModelFile::from(Model::Graph(g)).to_text())
}
