//! Graded Betti numbers of Stanley–Reisner rings.

mod dependence;
mod engines;
mod shortcuts;

pub use dependence::{char_dependence, CharDependenceReport, TorsionWitness};
pub use engines::{eagon_reiner_betti, hochster_betti_graph, stanley_reisner_betti, HOCHSTER_MAX_VERTICES};
pub use shortcuts::{
    betti_top_strand, dominating_vertex_identity, hilbert_consistency, k_polynomial, linear_strand_betti,
    linear_strand_length,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// `β_{i,d}` indexed by homological index `i` and internal degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    field: Field,
    n_vars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    field: String,
    entries: Vec<[u64; 3]>,
    totals: Vec<u64>,
}

impl BettiDiagram {
    /// The diagram of the polynomial ring itself: only `β_{0,0} = 1`.
    pub fn new(field: Field, n_vars: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        BettiDiagram { field, n_vars, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, i: usize, d: usize) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, d: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, d)).or_insert(0) += count;
        }
    }

    /// Nonzero entries `((i, d), β_{i,d})` in order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().filter(|(_, &c)| c > 0).map(|(&k, &c)| (k, c))
    }

    /// Merges another diagram by entrywise addition, except that `β_{0,0}`
    /// is kept at one.
    pub(crate) fn absorb(&mut self, other: &BettiDiagram) {
        for ((i, d), c) in other.entries() {
            if (i, d) != (0, 0) {
                self.add(i, d, c);
            }
        }
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries().map(|((i, _), _)| i).max().unwrap_or(0)
    }

    /// Largest `d - i` over the nonzero entries.
    pub fn regularity(&self) -> usize {
        self.entries().map(|((i, d), _)| d.saturating_sub(i)).max().unwrap_or(0)
    }

    /// `β_i = Σ_d β_{i,d}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.projective_dimension() + 1];
        for ((i, _), c) in self.entries() {
            t[i] += c;
        }
        t
    }

    /// Same entries regardless of the field tag.
    pub fn same_numbers(&self, other: &BettiDiagram) -> bool {
        self.entries().eq(other.entries())
    }

    /// Macaulay2 layout: a `total:` line, then one line per row
    /// `r = d - i` down to the last nonzero row, columns right-aligned and
    /// zeros shown as `.`.
    pub fn to_m2(&self) -> String {
        let totals = self.totals();
        let rows = self.regularity() + 1;
        let cell = |r: usize, i: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            c => c.to_string(),
        };
        let widths: Vec<usize> = (0..totals.len())
            .map(|i| (0..rows).map(|r| cell(r, i).len()).chain([totals[i].to_string().len()]).max().unwrap_or(1))
            .collect();
        let mut out = String::from("total:");
        for (i, t) in totals.iter().enumerate() {
            out.push_str(&format!(" {:>w$}", t, w = widths[i]));
        }
        out.push('\n');
        for r in 0..rows {
            out.push_str(&format!("{:>6}", format!("{r}:")));
            for (i, w) in widths.iter().enumerate() {
                out.push_str(&format!(" {:>w$}", cell(r, i), w = *w));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the layout written by [`BettiDiagram::to_m2`]. Leading
    /// indentation is ignored and the `total:` line is checked against
    /// the rows.
    pub fn from_m2(text: &str, field: Field, n_vars: usize) -> Result<Self> {
        let bad = |m: String| Error::Precondition(format!("malformed Betti table: {m}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let head = lines.next().ok_or_else(|| bad("empty".into()))?;
        let totals: Vec<u64> = head
            .strip_prefix("total:")
            .ok_or_else(|| bad("missing total line".into()))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad total {t:?}"))))
            .collect::<Result<_>>()?;
        let mut d = BettiDiagram { field, n_vars, entries: BTreeMap::new() };
        for line in lines {
            let (label, rest) = line.split_once(':').ok_or_else(|| bad(format!("no row label in {line:?}")))?;
            let r: usize = label.trim().parse().map_err(|_| bad(format!("bad row label {label:?}")))?;
            for (i, tok) in rest.split_whitespace().enumerate() {
                if tok != "." {
                    let c: u64 = tok.parse().map_err(|_| bad(format!("bad entry {tok:?}")))?;
                    d.add(i, i + r, c);
                }
            }
        }
        if d.totals() != totals {
            return Err(bad(format!("totals {:?} disagree with rows {:?}", totals, d.totals())));
        }
        Ok(d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = JsonDiagram {
            field: self.field.characteristic().to_string(),
            entries: self.entries().map(|((i, d), c)| [i as u64, d as u64, c]).collect(),
            totals: self.totals(),
        };
        serde_json::to_value(j).expect("diagram serializes")
    }

    pub fn from_json(v: &serde_json::Value, n_vars: usize) -> Result<Self> {
        let j: JsonDiagram =
            serde_json::from_value(v.clone()).map_err(|e| Error::Precondition(format!("bad diagram JSON: {e}")))?;
        let field: Field = j.field.parse()?;
        let mut d = BettiDiagram { field, n_vars, entries: BTreeMap::new() };
        for [i, dd, c] in j.entries {
            d.add(i as usize, dd as usize, c);
        }
        if d.totals() != j.totals {
            return Err(Error::Precondition("totals disagree with entries".into()));
        }
        Ok(d)
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_m2())
    }
}
