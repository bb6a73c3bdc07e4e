//! The `srbetti` command line.
//!
//! Exit codes: 0 on success, 1 when a check requested on the command line
//! fails (`--expect-none`, a torsion witness in `verify`, a `selftest`
//! mismatch), 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use srbetti_core::betti::{
    char_dependence, eagon_reiner_betti, hochster_betti_graph, stanley_reisner_betti, BettiDiagram,
    CharDependenceReport,
};
use srbetti_core::complexes::{alexander_dual_of_graph, flag_complex, parse_facets, SimplicialComplex};
use srbetti_core::fixtures;
use srbetti_core::graphs::{emit_graph6, parse_graph6, Constraints, Graph};
use srbetti_core::homology::{field_homology_dims, integral_reduced_homology};
use srbetti_core::search::{enumerated, graph6_records, scan, verify_minimality, ScanConfig, SourceItem};
use srbetti_core::taylor::taylor_betti;
use srbetti_core::{Error, Field};

#[derive(Parser, Debug)]
#[command(name = "srbetti", version, about = "Betti numbers of edge ideals and torsion in flag complexes")]
struct Cli {
    /// Worker threads for parallel engines.
    #[arg(long, env = "SRBETTI_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// A graph in graph6.
    #[arg(long)]
    g6: Option<String>,
    /// A file with one graph6 string per line.
    #[arg(long)]
    g6_file: Option<PathBuf>,
    /// A file of facets, one per line as vertex numbers from 0.
    #[arg(long)]
    facets: Option<PathBuf>,
    /// A bundled example: g12, h11, g1..g4, rp2_6, rp2_12.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Hochster,
    EagonReiner,
    Taylor,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    M2,
    Json,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers of the Stanley-Reisner ring.
    Betti {
        #[command(flatten)]
        input: Input,
        /// 0 or a prime.
        #[arg(long = "char", default_value = "0", value_parser = parse_field)]
        field: Field,
        /// Graph input only; by default Hochster below 13 vertices, Eagon-Reiner above.
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        #[arg(long, value_enum, default_value = "m2")]
        format: Format,
    },
    /// Reduced homology of the complex, or of the flag complex of a graph.
    Homology {
        #[command(flatten)]
        input: Input,
        /// Integral homology (the default).
        #[arg(long, conflicts_with = "field")]
        integral: bool,
        /// Dimensions over this field instead.
        #[arg(long = "char", value_parser = parse_field)]
        field: Option<Field>,
        #[arg(long, value_enum, default_value = "m2")]
        format: Format,
    },
    /// Facets of the Alexander dual.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Which Betti numbers depend on the characteristic, and why.
    Dependence {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "m2")]
        format: Format,
        /// Exit with status 1 if anything depends on the characteristic.
        #[arg(long)]
        expect_none: bool,
    },
    /// Prune candidate graphs and look for torsion in the survivors.
    Scan {
        /// graph6 input, `-` for standard input.
        #[arg(long, required_unless_present = "enumerate", conflicts_with = "enumerate")]
        g6_file: Option<PathBuf>,
        /// Generate all graphs on this many vertices instead.
        #[arg(long)]
        enumerate: Option<usize>,
        #[arg(long, requires = "enumerate")]
        connected: bool,
        #[arg(long, requires = "enumerate", default_value_t = 0)]
        min_degree: usize,
        #[arg(long, requires = "enumerate")]
        max_degree: Option<usize>,
        /// Only compute homology in degrees 1..=max(1, n - 6).
        #[arg(long)]
        window: bool,
        /// JSONL journal; classes already in it are not recomputed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Exit with status 1 if a witness is found.
        #[arg(long)]
        expect_none: bool,
    },
    /// Check that no graph on n <= 10 vertices has field-dependent Betti numbers.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Recompute the bundled reference tables.
    Selftest,
}

enum Loaded {
    Graphs(Vec<Graph>),
    Complex(SimplicialComplex),
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Loaded, Error> {
    if let Some(s) = &input.g6 {
        return Ok(Loaded::Graphs(vec![parse_graph6(s.trim())?]));
    }
    if let Some(p) = &input.g6_file {
        let text = read(p)?;
        let mut graphs = Vec::new();
        for item in graph6_records(text.as_bytes()) {
            graphs.push(item.map_err(|e| Error::Precondition(format!("{}:{}: {}", p.display(), e.line, e.message)))?);
        }
        return Ok(Loaded::Graphs(graphs));
    }
    if let Some(p) = &input.facets {
        return Ok(Loaded::Complex(parse_facets(&read(p)?, None)?));
    }
    let name = input.fixture.as_deref().unwrap_or_default();
    match name {
        "rp2_6" => Ok(Loaded::Complex(fixtures::rp2_6())),
        "rp2_12" => Ok(Loaded::Complex(fixtures::rp2_12())),
        _ => fixtures::graph(name)
            .map(|g| Loaded::Graphs(vec![g]))
            .ok_or_else(|| Error::Precondition(format!("unknown fixture {name:?}"))),
    }
}

fn graphs_only(loaded: Loaded) -> Result<Vec<Graph>, Error> {
    match loaded {
        Loaded::Graphs(g) => Ok(g),
        Loaded::Complex(_) => Err(Error::Precondition("this command needs a graph, not a facet list".into())),
    }
}

fn pooled<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    match jobs {
        Some(j) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(f)),
        None => Ok(f()),
    }
}

fn graph_betti(g: &Graph, field: Field, engine: Option<Engine>) -> Result<BettiDiagram, Error> {
    let engine = engine.unwrap_or(if g.n() >= 13 { Engine::EagonReiner } else { Engine::Hochster });
    match engine {
        Engine::Hochster => hochster_betti_graph(g, field),
        Engine::EagonReiner => eagon_reiner_betti(g, field),
        Engine::Taylor => taylor_betti(g, field),
    }
}

fn emit_diagram(out: &mut dyn Write, d: &BettiDiagram, format: Format) -> std::io::Result<()> {
    match format {
        Format::M2 => write!(out, "{}", d.to_m2()),
        Format::Json => writeln!(out, "{}", d.to_json()),
    }
}

fn dependence_json(g: &Graph, r: &CharDependenceReport) -> serde_json::Value {
    let entries: Vec<serde_json::Value> =
        r.dependent_entries().into_iter().map(|((i, d), ps)| json!([i, d, ps.into_iter().collect::<Vec<_>>()])).collect();
    json!({
        "g6": emit_graph6(g),
        "independent": r.is_independent(),
        "primes": r.primes().into_iter().collect::<Vec<_>>(),
        "entries": entries,
        "witnesses": r.witnesses,
    })
}

fn dependence_text(out: &mut dyn Write, r: &CharDependenceReport) -> std::io::Result<()> {
    if r.is_independent() {
        return writeln!(out, "independent of characteristic");
    }
    let primes: Vec<String> = r.primes().iter().map(u64::to_string).collect();
    writeln!(out, "depends on characteristic {}", primes.join(", "))?;
    for ((i, d), ps) in r.dependent_entries() {
        let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
        writeln!(out, "  beta_{i},{d}: p = {}", ps.join(", "))?;
    }
    for w in &r.witnesses {
        let set: Vec<String> = w.subset.iter().map(usize::to_string).collect();
        let tors: Vec<String> = w.factors.iter().map(|t| format!("Z/{t}")).collect();
        writeln!(out, "  torsion {} in degree {} on {{{}}}", tors.join(" + "), w.degree, set.join(","))?;
    }
    Ok(())
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    CheckFailed,
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, Error> {
    let jobs = cli.jobs;
    match cli.command {
        Command::Betti { input, field, engine, format } => match load(&input)? {
            Loaded::Complex(delta) => {
                if engine.is_some() {
                    return Err(Error::Precondition("--engine applies only to graph input".into()));
                }
                let d = pooled(jobs, || stanley_reisner_betti(&delta, field))??;
                emit_diagram(out, &d, format)?;
            }
            Loaded::Graphs(graphs) => {
                for (k, g) in graphs.iter().enumerate() {
                    let d = pooled(jobs, || graph_betti(g, field, engine))??;
                    if graphs.len() > 1 && format == Format::M2 {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", emit_graph6(g))?;
                    }
                    emit_diagram(out, &d, format)?;
                }
            }
        },
        Command::Homology { input, integral: _, field, format } => {
            let complexes: Vec<SimplicialComplex> = match load(&input)? {
                Loaded::Complex(c) => vec![c],
                Loaded::Graphs(gs) => gs.iter().map(flag_complex).collect(),
            };
            for delta in &complexes {
                match field {
                    None => {
                        let groups = pooled(jobs, || integral_reduced_homology(delta))?;
                        match format {
                            Format::M2 => {
                                for h in &groups {
                                    writeln!(out, "H~_{} = {h}", h.degree)?;
                                }
                            }
                            Format::Json => writeln!(out, "{}", json!({ "field": "Z", "groups": groups }))?,
                        }
                    }
                    Some(f) => {
                        let dims = field_homology_dims(delta, f);
                        let shown: Vec<(isize, usize)> =
                            dims.as_slice().iter().enumerate().map(|(k, &x)| (k as isize - 1, x)).collect();
                        match format {
                            Format::M2 => {
                                for (j, x) in shown {
                                    writeln!(out, "dim H~_{j} = {x}")?;
                                }
                            }
                            Format::Json => {
                                writeln!(out, "{}", json!({ "field": f.characteristic().to_string(), "dims": dims.as_slice() }))?
                            }
                        }
                    }
                }
            }
        }
        Command::Dual { input } => {
            let dual = match load(&input)? {
                Loaded::Complex(c) => c.alexander_dual()?,
                Loaded::Graphs(gs) => match gs.as_slice() {
                    [g] => alexander_dual_of_graph(g)?,
                    _ => return Err(Error::Precondition("dual takes exactly one graph".into())),
                },
            };
            write!(out, "{}", dual.to_facet_text())?;
        }
        Command::Dependence { input, format, expect_none } => {
            let graphs = graphs_only(load(&input)?)?;
            let mut dependent = false;
            for g in &graphs {
                let r = pooled(jobs, || char_dependence(g))??;
                dependent |= !r.is_independent();
                match format {
                    Format::M2 => {
                        if graphs.len() > 1 {
                            write!(out, "{}: ", emit_graph6(g))?;
                        }
                        dependence_text(out, &r)?;
                    }
                    Format::Json => writeln!(out, "{}", dependence_json(g, &r))?,
                }
            }
            if expect_none && dependent {
                return Ok(Outcome::CheckFailed);
            }
        }
        Command::Scan { g6_file, enumerate, connected, min_degree, max_degree, window, checkpoint, expect_none } => {
            let config = ScanConfig { window, jobs, checkpoint, ..Default::default() };
            let report = match (g6_file, enumerate) {
                (Some(p), _) if p.as_os_str() == "-" => scan(graph6_records(std::io::stdin().lock()), &config)?,
                (Some(p), _) => {
                    let file = fs::File::open(&p).map_err(|e| Error::Precondition(format!("{}: {e}", p.display())))?;
                    scan(graph6_records(BufReader::new(file)), &config)?
                }
                (None, Some(n)) => {
                    let mut c = if connected { Constraints::connected() } else { Constraints::default() };
                    c = c.degrees(min_degree, max_degree.unwrap_or(usize::MAX));
                    let source: Box<dyn Iterator<Item = SourceItem>> = Box::new(enumerated(n, c));
                    scan(source, &config)?
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            for e in &report.errors {
                writeln!(err, "line {}: {}", e.line, e.message)?;
            }
            writeln!(out, "{}", report.to_json_with_stats())?;
            if expect_none && !report.witnesses.is_empty() {
                return Ok(Outcome::CheckFailed);
            }
        }
        Command::Verify { n, window, checkpoint } => {
            let config = ScanConfig { window, jobs, checkpoint, ..Default::default() };
            match verify_minimality(n, &config) {
                Ok(r) => {
                    writeln!(
                        out,
                        "n={n}: {} graphs, {} pass the non-neighbourhood conditions, {} survive every rule, no torsion",
                        r.enumerated, r.nonneighbor_passed, r.survivors
                    )?;
                }
                Err(Error::WitnessFound { g6, primes }) => {
                    writeln!(err, "torsion witness {g6} with primes {primes:?}")?;
                    return Ok(Outcome::CheckFailed);
                }
                Err(e) => return Err(e),
            }
        }
        Command::Selftest => {
            let mut failed = false;
            for name in fixtures::table_names() {
                for field in [Field::Rational, Field::Prime(2)] {
                    let d = match name {
                        "rp2_6" => stanley_reisner_betti(&fixtures::rp2_6(), field)?,
                        _ => pooled(jobs, || hochster_betti_graph(&fixtures::graph(name).expect("bundled"), field))??,
                    };
                    let ok = Some(d.to_m2().as_str()) == fixtures::table(name, field);
                    failed |= !ok;
                    writeln!(out, "{name} char {}: {}", field.characteristic(), if ok { "PASS" } else { "FAIL" })?;
                }
            }
            if failed {
                return Ok(Outcome::CheckFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::CheckFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
