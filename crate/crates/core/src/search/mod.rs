//! Exhaustive search for small graphs whose flag complexes have torsion.

mod journal;
mod prune;

pub use journal::{ClassRecord, TorsionSummary};
pub use prune::{allowed_five, allowed_four, prune, PruneVerdict, Rule};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::BufRead;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::flag_complex;
use crate::error::{Error, Result};
use crate::graphs::{canonical_form, parse_graph6, Constraints, Graph, GraphEnumerator};
use crate::homology::{integral_homology_window, integral_reduced_homology};
use crate::linalg::prime_divisors;
use journal::Journal;

/// A source line that could not be turned into a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub line: usize,
    pub message: String,
}

pub type SourceItem = std::result::Result<Graph, RecordError>;

/// Graphs from graph6 text, one per line. Blank lines and `>>graph6<<`
/// headers are skipped.
pub fn graph6_records<R: BufRead>(reader: R) -> impl Iterator<Item = SourceItem> {
    reader.lines().enumerate().filter_map(|(k, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(RecordError { line: k + 1, message: e.to_string() })),
        };
        let t = line.trim().trim_start_matches(">>graph6<<");
        if t.is_empty() {
            return None;
        }
        Some(parse_graph6(t).map_err(|e| RecordError { line: k + 1, message: e.to_string() }))
    })
}

/// All graphs on `n` vertices meeting `constraints`, one per class.
pub fn enumerated(n: usize, constraints: Constraints) -> impl Iterator<Item = SourceItem> {
    GraphEnumerator::new(n, constraints).map(Ok)
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Only compute `H̃_j` for `1 ≤ j ≤ max(1, n - 6)`. Off by default.
    pub window: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    /// Inputs buffered between journal flushes.
    pub batch: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { window: false, jobs: None, checkpoint: None, batch: 4096 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g6: String,
    pub primes: Vec<u64>,
    pub degrees: Vec<isize>,
}

/// Facts about a run that are allowed to differ between equal scans.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunStats {
    pub elapsed_ms: u128,
    pub workers: usize,
    pub classes_from_checkpoint: usize,
    pub journal_warnings: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchReport {
    /// Vertex count shared by every input, if there is one.
    pub n: Option<usize>,
    pub enumerated: usize,
    /// Connected pieces examined after isolated vertices were dropped and
    /// disconnected inputs split.
    pub components: usize,
    pub survivors: usize,
    /// Pieces meeting both non-neighbourhood conditions, whatever the
    /// other rules say.
    pub nonneighbor_passed: usize,
    pub isolated_vertices_stripped: usize,
    pub inputs_split: usize,
    pub pruned_by: BTreeMap<Rule, usize>,
    pub witnesses: Vec<Witness>,
    pub errors: Vec<RecordError>,
    #[serde(skip)]
    pub stats: RunStats,
}

impl SearchReport {
    /// The deterministic part of the report.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_with_stats(&self) -> serde_json::Value {
        let mut v = self.to_json();
        v["stats"] = serde_json::to_value(&self.stats).expect("stats serialize");
        v
    }
}

/// Connected pieces with at least one edge, and the number of isolated
/// vertices dropped.
fn pieces(g: &Graph) -> (Vec<Graph>, usize) {
    let comps = g.connected_components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    let parts = comps.into_iter().filter(|c| c.len() > 1).map(|c| g.induced_subgraph(c)).collect();
    (parts, isolated)
}

fn examine(g: &Graph, verdict: PruneVerdict, window: bool) -> ClassRecord {
    let mut torsion = TorsionSummary::default();
    if verdict.keep {
        let delta = flag_complex(g);
        let groups = if window {
            integral_homology_window(&delta, 1, 1.max(g.n() as isize - 6))
        } else {
            integral_reduced_homology(&delta)
        };
        let mut primes = BTreeSet::new();
        for h in groups.iter().filter(|h| !h.torsion.is_empty()) {
            torsion.degrees.push(h.degree);
            primes.extend(h.torsion.iter().flat_map(prime_divisors));
        }
        torsion.primes = primes.into_iter().collect();
    }
    ClassRecord { g6: canonical_form(g).graph6(), verdict: verdict.reasons, torsion }
}

/// Prunes every input, computes integral homology of the survivors and
/// collects torsion. Each isomorphism class is examined once; with a
/// checkpoint, classes already in the journal are not recomputed.
pub fn scan(source: impl Iterator<Item = SourceItem>, config: &ScanConfig) -> Result<SearchReport> {
    let started = Instant::now();
    let pool = match config.jobs {
        Some(j) => Some(
            rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().map_err(|e| Error::Precondition(e.to_string()))?,
        ),
        None => None,
    };
    let mut report = scan_inner(source, config, pool.as_ref())?;
    report.stats.workers = config.jobs.unwrap_or_else(rayon::current_num_threads);
    report.stats.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

fn in_pool<T: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn scan_inner(
    source: impl Iterator<Item = SourceItem>,
    config: &ScanConfig,
    pool: Option<&rayon::ThreadPool>,
) -> Result<SearchReport> {
    let (mut journal, (mut known, warnings)) = match &config.checkpoint {
        Some(p) => Journal::open(p)?,
        None => (Journal::disabled(), (HashMap::new(), Vec::new())),
    };
    let mut report = SearchReport::default();
    report.stats.journal_warnings = warnings;
    let mut sizes = BTreeSet::new();
    let mut reused = BTreeSet::new();
    let mut witnesses: BTreeMap<String, Witness> = BTreeMap::new();
    let mut source = source.peekable();
    let mut batch = Vec::with_capacity(config.batch.max(1));
    while source.peek().is_some() {
        batch.clear();
        batch.extend(source.by_ref().take(config.batch.max(1)));
        let graphs: Vec<&Graph> = batch
            .iter()
            .filter_map(|item| match item {
                Ok(g) => Some(g),
                Err(e) => {
                    report.errors.push(e.clone());
                    None
                }
            })
            .collect();
        let split: Vec<(Vec<(String, Graph)>, usize)> = in_pool(pool, || {
            graphs
                .par_iter()
                .map(|g| {
                    let (parts, isolated) = pieces(g);
                    (parts.into_iter().map(|p| (canonical_form(&p).graph6(), p)).collect(), isolated)
                })
                .collect()
        });
        // New classes in order of first appearance.
        let mut fresh: Vec<(String, &Graph)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (parts, _) in &split {
            for (key, p) in parts {
                if known.contains_key(key) {
                    if !seen.contains(key) {
                        reused.insert(key.clone());
                    }
                } else if seen.insert(key.clone()) {
                    fresh.push((key.clone(), p));
                }
            }
        }
        let records: Vec<ClassRecord> =
            in_pool(pool, || fresh.par_iter().map(|(_, p)| examine(p, prune(p), config.window)).collect());
        journal.append(&records)?;
        for r in records {
            known.insert(r.g6.clone(), r);
        }
        for (g, (parts, isolated)) in graphs.iter().zip(&split) {
            report.enumerated += 1;
            sizes.insert(g.n());
            report.isolated_vertices_stripped += isolated;
            if parts.len() > 1 {
                report.inputs_split += 1;
            }
            for (key, _) in parts {
                let r = &known[key];
                report.components += 1;
                if !r.verdict.iter().any(|x| matches!(x, Rule::NonneighborConditionS4 | Rule::NonneighborConditionS5)) {
                    report.nonneighbor_passed += 1;
                }
                if r.verdict.is_empty() {
                    report.survivors += 1;
                } else {
                    for rule in &r.verdict {
                        *report.pruned_by.entry(*rule).or_insert(0) += 1;
                    }
                }
                if !r.torsion.primes.is_empty() {
                    witnesses.entry(key.clone()).or_insert_with(|| Witness {
                        g6: key.clone(),
                        primes: r.torsion.primes.clone(),
                        degrees: r.torsion.degrees.clone(),
                    });
                }
            }
        }
    }
    report.n = if sizes.len() == 1 { sizes.into_iter().next() } else { None };
    report.witnesses = witnesses.into_values().collect();
    report.stats.classes_from_checkpoint = reused.len();
    Ok(report)
}

/// Degree bounds a minimal counterexample on `n` vertices satisfies.
pub fn minimality_constraints(n: usize) -> Constraints {
    Constraints::connected().degrees(2, n.saturating_sub(5))
}

/// Scans every connected graph on `n ≤ 10` vertices with degrees in
/// `[2, n - 5]` and fails if any survivor has torsion.
pub fn verify_minimality(n: usize, config: &ScanConfig) -> Result<SearchReport> {
    if n > 10 {
        return Err(Error::Precondition(format!("minimality is checked for at most 10 vertices, got {n}")));
    }
    let source: Box<dyn Iterator<Item = SourceItem>> =
        if n < 7 { Box::new(std::iter::empty()) } else { Box::new(enumerated(n, minimality_constraints(n))) };
    let report = scan(source, config)?;
    if let Some(w) = report.witnesses.first() {
        return Err(Error::WitnessFound { g6: w.g6.clone(), primes: w.primes.clone() });
    }
    Ok(report)
}
