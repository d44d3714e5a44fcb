//! The `mvspec` command line.
//!
//! Exit codes: 0 success, 1 a mathematical failure (axiom violation, not a
//! filter, unexpected counterexample), 2 bad input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mvspec_core::filters::{
    classify, enumerate_implication_filters, enumerate_lattice_filters, enumerate_order_filters,
    FilterClassification, DEFAULT_UPSET_BUDGET,
};
use mvspec_core::harness::{default_suite_algebras, registry, select, ProductOfChains, Suite, SuiteConfig};
use mvspec_core::spectrum::{kernel, plus};
use mvspec_core::{Algebra, ElementSet, QuotientMap, SubordinateFamily};

use crate::dot::{render_dot, Highlight};
use crate::dsl::{self, Environment, ErrorKind};
use crate::report::{report_json, report_text, SuiteEcho};
use crate::runner::{run_theorems, thread_count, RunOptions};

#[derive(Debug, Parser)]
#[command(name = "mvspec", version, about = "Finite MV-algebras, subordinate filters and kernels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every algebra in a definition file is an MV-algebra.
    Check {
        file: PathBuf,
        /// Only report on this algebra.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Kernel, F⁺ and the subordinate family of a filter.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        filter: String,
        /// Write the family's inclusion diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the statement registry over a suite of algebras.
    Theorems {
        /// Definition file whose algebras form the suite.
        file: Option<PathBuf>,
        /// Include the built-in suite (the default when no file is given).
        #[arg(long, value_enum)]
        suite: Option<SuiteKind>,
        /// Statement ids, comma separated: `T-06`, `T-07(1)`, `T-06:repaired`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Random products of chains to check after the suite.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest random sample.
        #[arg(long, default_value_t = 64)]
        max_size: usize,
        /// Up-sets enumerated per algebra before falling back to sampling.
        #[arg(long, default_value_t = DEFAULT_UPSET_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall-clock time per statement.
        #[arg(long)]
        timings: bool,
        /// Print the registry and exit.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate the filters of an algebra.
    ListFilters {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = FilterKind::Order)]
        kind: FilterKind,
        /// Only prime filters.
        #[arg(long)]
        prime: bool,
        #[arg(long, default_value_t = DEFAULT_UPSET_BUDGET)]
        budget: usize,
    },
    /// Hasse diagram as Graphviz DOT.
    Render {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        /// Fill the nodes of this filter.
        #[arg(long)]
        filter: Option<String>,
        /// Output path; standard output when absent.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteKind {
    Builtin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterKind {
    Order,
    Lattice,
    Implication,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Fail {
    /// Exit 1.
    Math(String),
    /// Exit 2.
    Input(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Math(_) => 1,
            Fail::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fail::Math(m) | Fail::Input(m) => m,
        }
    }
}

type Outcome = Result<u8, Fail>;

/// Parses `args` and runs the command, writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code() as u8;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file, algebra } => cmd_check(&file, algebra.as_deref(), out),
        Command::Spectrum { file, algebra, filter, dot } => {
            cmd_spectrum(&file, algebra.as_deref(), &filter, dot.as_deref(), out)
        }
        Command::Theorems { file, suite, only, samples, seed, max_size, budget, json, timings, list } => {
            if list {
                return cmd_list_statements(out);
            }
            let config = TheoremsConfig {
                file,
                builtin: suite.is_some(),
                only,
                samples,
                seed,
                max_size,
                budget,
                json,
                timings,
            };
            cmd_theorems(&config, out)
        }
        Command::ListFilters { file, algebra, kind, prime, budget } => {
            cmd_list_filters(&file, &algebra, kind, prime, budget, out)
        }
        Command::Render { file, algebra, filter, dot } => {
            cmd_render(&file, &algebra, filter.as_deref(), dot.as_deref(), out)
        }
    }
}

fn io_fail(path: &Path, e: std::io::Error) -> Fail {
    Fail::Input(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Fail> {
    out.write_all(text.as_bytes()).map_err(|e| Fail::Input(format!("cannot write output: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| io_fail(path, e))
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| io_fail(path, e))
}

fn load(path: &Path) -> Result<Environment, Fail> {
    dsl::load(&read(path)?).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn algebra<'a>(env: &'a Environment, name: &str, path: &Path) -> Result<&'a Algebra, Fail> {
    env.algebra(name).ok_or_else(|| Fail::Input(format!("{}: no algebra named '{name}'", path.display())))
}

fn cmd_check(path: &Path, only: Option<&str>, out: &mut dyn Write) -> Outcome {
    let text = read(path)?;
    let env = match dsl::load(&text) {
        Ok(env) => env,
        Err(e) => {
            if let ErrorKind::AxiomViolations(vs) = &e.kind {
                let mut msg = format!("{}: line {}, column {}: not an MV-algebra", path.display(), e.pos.line, e.pos.column);
                for v in vs {
                    msg.push_str(&format!("\n  {v}"));
                }
                return Err(Fail::Math(msg));
            }
            return Err(Fail::Input(format!("{}: {e}", path.display())));
        }
    };
    let names: Vec<&str> = match only {
        Some(name) => {
            algebra(&env, name, path)?;
            vec![name]
        }
        None => env.algebras().iter().map(|(n, _)| n.as_str()).collect(),
    };
    let mut failed = false;
    for name in names {
        let alg = env.algebra(name).expect("name checked");
        let violations = alg.check_axioms();
        if violations.is_empty() {
            emit(out, &format!("{name}: ok, {} elements\n", alg.size()))?;
        } else {
            failed = true;
            emit(out, &format!("{name}: {} violation(s)\n", violations.len()))?;
            for v in violations {
                emit(out, &format!("  {v}\n"))?;
            }
        }
    }
    Ok(u8::from(failed))
}

fn describe_class(c: &FilterClassification) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    format!(
        "nonempty {}, up-closed {}, contains top {}, meet-closed {}, ⊗-closed {}, proper {}, prime {}",
        yn(c.nonempty),
        yn(c.up_closed),
        yn(c.contains_top),
        yn(c.meet_closed),
        yn(c.otimes_closed),
        yn(c.proper),
        yn(c.prime)
    )
}

fn set_text(alg: &Algebra, s: &ElementSet) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        alg.format_set(s)
    }
}

/// Why `s` is not an order filter, with an element that shows it.
fn not_a_filter_reason(alg: &Algebra, s: &ElementSet) -> String {
    if s.is_empty() {
        return "the set is empty".into();
    }
    for x in s.iter() {
        if let Some(y) = alg.elements().find(|&y| alg.leq(x, y) && !s.contains(y)) {
            return format!("not upward closed: {} is in the set but {} ≥ {} is not", alg.name(x), alg.name(y), alg.name(x));
        }
    }
    "not upward closed".into()
}

fn cmd_spectrum(path: &Path, alg_name: Option<&str>, filter: &str, dot: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let env = load(path)?;
    let f = env
        .filter(filter)
        .ok_or_else(|| Fail::Input(format!("{}: no filter named '{filter}'", path.display())))?;
    if let Some(name) = alg_name.filter(|n| *n != f.algebra) {
        algebra(&env, name, path)?;
        return Err(Fail::Input(format!("filter '{filter}' is defined on '{}', not '{name}'", f.algebra)));
    }
    let alg = algebra(&env, &f.algebra, path)?;
    let class = classify(alg, &f.set);
    let mut text = format!("algebra {} ({} elements), filter {} = {}\n", f.algebra, alg.size(), filter, set_text(alg, &f.set));
    text.push_str(&format!("classification: {}\n", describe_class(&class)));
    if !class.order_filter() {
        emit(out, &text)?;
        return Err(Fail::Math(format!("{filter} is not an order filter: {}", not_a_filter_reason(alg, &f.set))));
    }
    text.push_str(&format!("kind: {}{}\n", class.kind().unwrap_or("order filter"), if class.prime { ", prime" } else { "" }));
    let k = kernel(alg, &f.set).map_err(|e| Fail::Math(e.to_string()))?;
    let p = plus(alg, &f.set).map_err(|e| Fail::Math(e.to_string()))?;
    text.push_str(&format!("K(F) = {}\n", set_text(alg, &k)));
    text.push_str(&format!("F+ = {}\n", set_text(alg, &p)));

    let family = SubordinateFamily::new(alg, &f.set);
    text.push_str(&format!(
        "subordinate family: {} distinct, {}\n",
        family.len(),
        if family.is_total() { "totally ordered" } else { "not totally ordered" }
    ));
    for m in family.members() {
        let from: Vec<usize> =
            alg.elements().filter(|&a| mvspec_core::spectrum::subordinate(alg, &f.set, a) == m.set).collect();
        let from = ElementSet::from_elements(alg.size(), from);
        text.push_str(&format!(
            "  F_{} = {}  for a in {}\n",
            alg.name(m.representative),
            set_text(alg, &m.set),
            alg.format_set(&from)
        ));
    }
    let covers: Vec<String> = family
        .covers()
        .iter()
        .map(|&(i, j)| {
            let name = |i: usize| format!("F_{}", alg.name(family.members()[i].representative));
            format!("{} ⊂ {}", name(i), name(j))
        })
        .collect();
    text.push_str(&format!("covers: {}\n", if covers.is_empty() { "none".into() } else { covers.join(", ") }));
    let q = QuotientMap::new(alg, &k).map_err(|e| Fail::Math(format!("kernel is not an implication filter: {e}")))?;
    let m = q.quotient().size();
    text.push_str(&format!("L/K(F): {m} element{}\n", if m == 1 { "" } else { "s" }));
    emit(out, &text)?;
    if let Some(p) = dot {
        write_file(p, &render_dot(alg, Some(Highlight::Family(&family))))?;
    }
    Ok(0)
}

struct TheoremsConfig {
    file: Option<PathBuf>,
    builtin: bool,
    only: Vec<String>,
    samples: u64,
    seed: u64,
    max_size: usize,
    budget: usize,
    json: Option<PathBuf>,
    timings: bool,
}

fn cmd_list_statements(out: &mut dyn Write) -> Outcome {
    for s in registry() {
        let id = match s.variant {
            Some(v) => format!("{}:{}", s.id, v.as_str()),
            None => s.id.to_string(),
        };
        emit(out, &format!("{id:<22} {}\n", s.description))?;
    }
    Ok(0)
}

fn cmd_theorems(cfg: &TheoremsConfig, out: &mut dyn Write) -> Outcome {
    let statements = select(&cfg.only).map_err(|e| Fail::Input(e.to_string()))?;
    let generator = ProductOfChains::new(cfg.max_size).map_err(|e| Fail::Input(e.to_string()))?;
    let threads = thread_count().map_err(Fail::Input)?;

    let mut algebras = Vec::new();
    let mut sources = Vec::new();
    if cfg.builtin || cfg.file.is_none() {
        algebras.extend(default_suite_algebras());
        sources.push("builtin".to_string());
    }
    if let Some(path) = &cfg.file {
        let env = load(path)?;
        algebras.extend(env.algebras().iter().map(|(_, a)| a.clone()));
        sources.push(path.display().to_string());
    }
    let mut config = SuiteConfig::with_algebras(algebras);
    config.upset_budget = cfg.budget;
    config.samples = cfg.samples;
    config.seed = cfg.seed;
    config.max_sample_size = cfg.max_size;
    config.only = cfg.only.clone();
    let suite = Suite::build(&config).map_err(|e| Fail::Input(e.to_string()))?;

    let opts = RunOptions { samples: cfg.samples, seed: cfg.seed, generator, threads, timings: cfg.timings };
    let reports = run_theorems(&statements, &suite, &opts).map_err(|e| Fail::Math(format!("internal error: {e}")))?;

    emit(out, &report_text(&reports))?;
    if let Some(path) = &cfg.json {
        let echo = SuiteEcho {
            source: sources.join("+"),
            algebras: config
                .algebras
                .iter()
                .map(|a| a.label().unwrap_or("<unlabelled>").to_string())
                .collect(),
            upset_budget: config.upset_budget,
            samples: config.samples,
            seed: config.seed,
            max_sample_size: config.max_sample_size,
            only: config.only.clone(),
        };
        write_file(path, &report_json(&echo, &reports))?;
    }
    Ok(u8::from(reports.iter().any(|r| r.is_unexpected_failure())))
}

fn cmd_list_filters(path: &Path, name: &str, kind: FilterKind, prime: bool, budget: usize, out: &mut dyn Write) -> Outcome {
    let env = load(path)?;
    let alg = algebra(&env, name, path)?;
    let filters = match kind {
        FilterKind::Order => enumerate_order_filters(alg, budget),
        FilterKind::Lattice => enumerate_lattice_filters(alg, budget),
        FilterKind::Implication => Ok(enumerate_implication_filters(alg)),
    }
    .map_err(|e| Fail::Input(format!("{e}; raise --budget to enumerate further")))?;
    let mut shown = 0;
    let mut text = String::new();
    for f in &filters {
        let c = classify(alg, f);
        if prime && !c.prime {
            continue;
        }
        shown += 1;
        let mut tags = vec![c.kind().unwrap_or("order filter")];
        if c.prime {
            tags.push("prime");
        }
        if !c.proper {
            tags.push("improper");
        }
        text.push_str(&format!("{}  {}\n", set_text(alg, f), tags.join(", ")));
    }
    let kind_name = match kind {
        FilterKind::Order => "order",
        FilterKind::Lattice => "lattice",
        FilterKind::Implication => "implication",
    };
    text.push_str(&format!("{shown} {}{kind_name} filter(s) of {name}\n", if prime { "prime " } else { "" }));
    emit(out, &text)?;
    Ok(0)
}

fn cmd_render(path: &Path, name: &str, filter: Option<&str>, dot: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let env = load(path)?;
    let alg = algebra(&env, name, path)?;
    let set = match filter {
        Some(fname) => {
            let f = env
                .filter(fname)
                .ok_or_else(|| Fail::Input(format!("{}: no filter named '{fname}'", path.display())))?;
            if f.algebra != name {
                return Err(Fail::Input(format!("filter '{fname}' is defined on '{}', not '{name}'", f.algebra)));
            }
            Some(&f.set)
        }
        None => None,
    };
    let text = render_dot(alg, set.map(Highlight::Set));
    match dot {
        Some(p) => write_file(p, &text)?,
        None => emit(out, &text)?,
    }
    Ok(0)
}
