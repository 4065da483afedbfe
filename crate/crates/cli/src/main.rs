mod input;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use randic_core::conditions::{balanced_bipartition, Checker, Comparison, ConditionReport, Verdict, DEFAULT_REL_TOL};
use randic_core::extremal::{ExtremalFamily, ExtremalSpec};
use randic_core::graph6::emit_graph6;
use randic_core::indices::zeroth_order_randic;
use randic_core::oracle::{hamiltonian_cycle, is_k_hamiltonian};
use randic_core::search::{soundness_search, SearchMode, SearchReport};
use randic_core::thresholds::{threshold_table, ThresholdRow, TABLE_COLUMNS};
use randic_core::{Alpha, Graph};

use input::InputArgs;
use render::{emit, opt, Format, Record};

const EXIT_INCONCLUSIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Randić-index Hamiltonicity conditions, extremal graphs and an exact oracle")]
struct Cli {
    /// Output format.
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Relative tolerance for threshold comparisons.
    #[arg(long, env = "RANDIC_TOL", default_value_t = DEFAULT_REL_TOL, global = true)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the zeroth-order general Randić index.
    Index {
        #[arg(long, short = 'a', allow_hyphen_values = true)]
        alpha: f64,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Evaluate an index condition for (k-)Hamiltonicity.
    Check {
        #[arg(long, short = 'a', allow_hyphen_values = true)]
        alpha: f64,
        #[arg(short = 'k', long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Theorem::Auto)]
        theorem: Theorem,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Evaluate the balanced bipartite index condition.
    CheckBipartite {
        #[arg(long, short = 'a', allow_hyphen_values = true)]
        alpha: f64,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Emit an extremal graph.
    Extremal {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Order, or vertices per side for bipartite-deleted.
        #[arg(long)]
        n: usize,
        #[arg(long, short = 'k', default_value_t = 0)]
        k: usize,
        /// |S| for bipartite-deleted.
        #[arg(long, short = 's')]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::G6)]
        emit: Emit,
    },
    /// Decide Hamiltonicity (k = 0) or k-Hamiltonicity exactly.
    Oracle {
        #[arg(short = 'k', long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Threshold quantities for one alpha.
    Thresholds {
        #[arg(long, short = 'a')]
        alpha: f64,
    },
    /// Threshold table for a list of alphas.
    Table {
        #[arg(long, value_delimiter = ',', required = true)]
        alphas: Vec<f64>,
    },
    /// Random soundness search of every checker against the oracle.
    Search {
        #[arg(long, value_enum, default_value_t = ModeArg::General)]
        mode: ModeArg,
        /// Order, or vertices per side in bipartite mode.
        #[arg(long)]
        n: usize,
        #[arg(short = 'k', long, default_value_t = 0)]
        k: usize,
        #[arg(long, short = 'a', allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// Edge probability.
        #[arg(long, short = 'p', default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write violating graphs here as graph6 lines.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "2.3")]
    T23,
    #[value(name = "2.4")]
    T24,
    #[value(name = "2.6")]
    T26,
    #[value(name = "2.7")]
    T27,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Kite,
    Split,
    BipartiteDeleted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    G6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    General,
    Bipartite,
}

fn alpha(a: f64) -> Result<Alpha> {
    Ok(Alpha::new(a)?)
}

fn comparison_symbol(c: Comparison) -> &'static str {
    match c {
        Comparison::GreaterThan => ">",
        Comparison::LessThan => "<",
    }
}

#[derive(Serialize)]
struct IndexRecord {
    graph6: String,
    alpha: f64,
    index: f64,
}

impl Record for IndexRecord {
    fn text(&self) -> String {
        self.index.to_string()
    }
    fn csv_header() -> Vec<&'static str> {
        vec!["graph6", "alpha", "index"]
    }
    fn csv_row(&self) -> Vec<String> {
        vec![self.graph6.clone(), self.alpha.to_string(), self.index.to_string()]
    }
}

#[derive(Serialize)]
struct CheckRecord {
    graph6: String,
    #[serde(flatten)]
    report: ConditionReport,
}

impl Record for CheckRecord {
    fn text(&self) -> String {
        let r = &self.report;
        let mut line = format!("{} [{}] index {}", r.verdict, r.theorem_tag, r.index_value);
        if let Some(t) = r.threshold {
            line += &format!(" {} {t}", comparison_symbol(r.comparison));
        }
        if r.tight {
            line += " (tight)";
        }
        if !r.notes.is_empty() {
            line += &format!("; {}", r.notes);
        }
        line
    }
    fn csv_header() -> Vec<&'static str> {
        vec!["graph6", "verdict", "theorem_tag", "index_value", "threshold", "comparison", "tight", "notes"]
    }
    fn csv_row(&self) -> Vec<String> {
        let r = &self.report;
        let cmp = match r.comparison {
            Comparison::GreaterThan => "greater_than",
            Comparison::LessThan => "less_than",
        };
        vec![
            self.graph6.clone(),
            r.verdict.to_string(),
            r.theorem_tag.clone(),
            r.index_value.to_string(),
            opt(r.threshold),
            cmp.to_string(),
            r.tight.to_string(),
            r.notes.clone(),
        ]
    }
}

#[derive(Serialize)]
struct OracleRecord {
    graph6: String,
    k: usize,
    /// Hamiltonian for `k = 0`, k-Hamiltonian otherwise.
    holds: bool,
    cycle: Option<Vec<usize>>,
}

impl Record for OracleRecord {
    fn text(&self) -> String {
        let property = if self.k == 0 { "Hamiltonian".to_string() } else { format!("{}-Hamiltonian", self.k) };
        match (&self.cycle, self.holds) {
            (Some(c), true) => {
                let cycle: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("{property}: {}", cycle.join(" "))
            }
            (_, true) => property,
            (_, false) => format!("not {property}"),
        }
    }
    fn csv_header() -> Vec<&'static str> {
        vec!["graph6", "k", "holds", "cycle"]
    }
    fn csv_row(&self) -> Vec<String> {
        let cycle = self
            .cycle
            .as_ref()
            .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        vec![self.graph6.clone(), self.k.to_string(), self.holds.to_string(), cycle]
    }
}

#[derive(Serialize)]
struct ExtremalRecord {
    family: ExtremalFamily,
    n: usize,
    k: usize,
    s: usize,
    order: usize,
    size: usize,
    graph6: String,
    #[serde(skip)]
    edges: String,
    #[serde(skip)]
    emit: Option<Emit>,
}

impl Record for ExtremalRecord {
    fn text(&self) -> String {
        match self.emit {
            Some(Emit::Edges) => self.edges.trim_end().to_string(),
            _ => self.graph6.clone(),
        }
    }
    fn csv_header() -> Vec<&'static str> {
        vec!["family", "n", "k", "s", "order", "size", "graph6"]
    }
    fn csv_row(&self) -> Vec<String> {
        vec![
            format!("{:?}", self.family),
            self.n.to_string(),
            self.k.to_string(),
            self.s.to_string(),
            self.order.to_string(),
            self.size.to_string(),
            self.graph6.clone(),
        ]
    }
}

impl Record for ThresholdRow {
    fn text(&self) -> String {
        let fixed = |v: Option<f64>| v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "-".into());
        format!(
            "alpha {}  x0 {}  x1 {}  x0-x1 {}  n0 {}  n1 {}  f0 {:.4}  f1 {:.4}",
            self.alpha,
            fixed(self.x0),
            fixed(self.x1),
            fixed(self.x0_minus_x1),
            self.n0.map_or("-".into(), |n| n.to_string()),
            self.n1.map_or("-".into(), |n| n.to_string()),
            self.f0,
            self.f1,
        )
    }
    fn csv_header() -> Vec<&'static str> {
        TABLE_COLUMNS.to_vec()
    }
    fn csv_row(&self) -> Vec<String> {
        vec![
            self.alpha.to_string(),
            opt(self.x0),
            opt(self.x1),
            opt(self.x0_minus_x1),
            opt(self.n0),
            opt(self.n1),
            self.f0.to_string(),
            self.f1.to_string(),
        ]
    }
}

struct SearchOutput(SearchReport);

impl Serialize for SearchOutput {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl Record for SearchOutput {
    fn text(&self) -> String {
        let r = &self.0;
        let p = &r.params;
        let mut lines = vec![format!(
            "{:?} n={} k={} alpha={} samples={} p={} seed={}",
            p.mode, p.n, p.k, p.alpha, p.samples, p.edge_prob, p.seed
        )];
        for c in &r.per_checker {
            let t = c.tally;
            lines.push(format!(
                "{:?}: guaranteed {} confirmed {} violations {} inconclusive {} not_applicable {}",
                c.checker, t.guaranteed, t.confirmed, t.violations, t.inconclusive, t.not_applicable
            ));
        }
        lines.push(format!("violations: {}", r.violation_count()));
        for v in &r.violations {
            lines.push(format!("{:?} {}", v.checker, v.graph6));
        }
        lines.join("\n")
    }
    fn csv_header() -> Vec<&'static str> {
        vec!["checker", "guaranteed", "confirmed", "violations", "inconclusive", "not_applicable"]
    }
    fn csv_row(&self) -> Vec<String> {
        unreachable!("search CSV is written row per checker")
    }
}

fn emit_search_csv<W: Write>(out: &mut W, r: &SearchReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SearchOutput::csv_header())?;
    for c in &r.per_checker {
        let t = c.tally;
        w.write_record([
            serde_json::to_value(c.checker)?.as_str().unwrap_or_default().to_string(),
            t.guaranteed.to_string(),
            t.confirmed.to_string(),
            t.violations.to_string(),
            t.inconclusive.to_string(),
            t.not_applicable.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn check_one(checker: &Checker, g: &Graph, k: usize, a: Alpha, theorem: Theorem) -> Result<ConditionReport> {
    let alpha_v = a.value();
    Ok(match theorem {
        Theorem::T23 => {
            if alpha_v <= 0.0 {
                bail!(format!("--theorem 2.3 needs alpha > 0, got {alpha_v}"));
            }
            checker.check_k_hamiltonian(g, k, a)?
        }
        Theorem::T24 => {
            if alpha_v >= 0.0 {
                bail!(format!("--theorem 2.4 needs alpha < 0, got {alpha_v}"));
            }
            checker.check_k_hamiltonian(g, k, a)?
        }
        Theorem::T26 => {
            if k == 0 {
                bail!("--theorem 2.6 needs k >= 1");
            }
            checker.check_large_n(g, k, a)?
        }
        Theorem::T27 => {
            if k != 0 {
                bail!("--theorem 2.7 needs k = 0");
            }
            checker.check_large_n(g, k, a)?
        }
        Theorem::Auto => {
            let large = checker.check_large_n(g, k, a)?;
            if large.verdict == Verdict::NotApplicable {
                checker.check_k_hamiltonian(g, k, a)?
            } else {
                large
            }
        }
    })
}

fn run(cli: Cli) -> Result<u8> {
    let checker = Checker::with_tolerance(cli.tol)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let format = cli.format;
    let code = match cli.command {
        Command::Index { alpha: a, input } => {
            let a = alpha(a)?;
            let records = input
                .graphs()?
                .iter()
                .map(|g| {
                    Ok(IndexRecord { graph6: emit_graph6(g), alpha: a.value(), index: zeroth_order_randic(g, a)? })
                })
                .collect::<Result<Vec<_>>>()?;
            emit(&mut out, format, &records)?;
            0
        }
        Command::Check { alpha: a, k, theorem, input } => {
            let a = alpha(a)?;
            let records = input
                .graphs()?
                .iter()
                .map(|g| Ok(CheckRecord { graph6: emit_graph6(g), report: check_one(&checker, g, k, a, theorem)? }))
                .collect::<Result<Vec<_>>>()?;
            emit(&mut out, format, &records)?;
            verdict_code(&records)
        }
        Command::CheckBipartite { alpha: a, input } => {
            let a = alpha(a)?;
            let graphs = input.graphs()?;
            for g in &graphs {
                balanced_bipartition(g).with_context(|| emit_graph6(g))?;
            }
            let records = graphs
                .iter()
                .map(|g| Ok(CheckRecord { graph6: emit_graph6(g), report: checker.check_bipartite(g, a)? }))
                .collect::<Result<Vec<_>>>()?;
            emit(&mut out, format, &records)?;
            verdict_code(&records)
        }
        Command::Extremal { family, n, k, s, emit: which } => {
            let spec = match family {
                FamilyArg::Kite => ExtremalSpec::kite(n, k),
                FamilyArg::Split => ExtremalSpec::split(n, k),
                FamilyArg::BipartiteDeleted => {
                    let s = s.context("bipartite-deleted needs --s")?;
                    ExtremalSpec::bipartite_deleted(n, s)
                }
            };
            let g = spec.build()?;
            let record = ExtremalRecord {
                family: spec.family,
                n: spec.n,
                k: spec.k,
                s: spec.s,
                order: g.order(),
                size: g.size(),
                graph6: emit_graph6(&g),
                edges: g.to_edge_list(),
                emit: Some(which),
            };
            emit(&mut out, format, &[record])?;
            0
        }
        Command::Oracle { k, input } => {
            let records = input
                .graphs()?
                .iter()
                .map(|g| {
                    let cycle = hamiltonian_cycle(g)?;
                    let holds = if k == 0 { cycle.hamiltonian } else { is_k_hamiltonian(g, k)? };
                    Ok(OracleRecord { graph6: emit_graph6(g), k, holds, cycle: cycle.cycle.filter(|_| holds) })
                })
                .collect::<Result<Vec<_>>>()?;
            emit(&mut out, format, &records)?;
            0
        }
        Command::Thresholds { alpha: a } => {
            let row = ThresholdRow::compute(alpha(a)?)?;
            emit(&mut out, format, &[row])?;
            0
        }
        Command::Table { alphas } => {
            let rows = threshold_table(&alphas)?;
            emit(&mut out, format, &rows)?;
            0
        }
        Command::Search { mode, n, k, alpha: a, samples, p, seed, report } => {
            let params = randic_core::search::SearchParams {
                mode: match mode {
                    ModeArg::General => SearchMode::General,
                    ModeArg::Bipartite => SearchMode::Bipartite,
                },
                n,
                k,
                alpha: a,
                samples,
                edge_prob: p,
                seed,
            };
            let result = soundness_search(&params)?;
            if let Some(path) = report {
                let mut f = BufWriter::new(
                    File::create(&path).with_context(|| format!("creating {}", path.display()))?,
                );
                for v in &result.violations {
                    writeln!(f, "{}", v.graph6)?;
                }
                f.flush()?;
            }
            let code = if result.violation_count() > 0 { EXIT_VIOLATION } else { 0 };
            if format == Format::Csv {
                emit_search_csv(&mut out, &result)?;
            } else {
                emit(&mut out, format, &[SearchOutput(result)])?;
            }
            code
        }
    };
    out.flush()?;
    Ok(code)
}

fn verdict_code(records: &[CheckRecord]) -> u8 {
    if records.iter().all(|r| r.report.is_guaranteed()) {
        0
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        // every failure after parsing is a bad input or parameter
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
