//! Characteristic dependence through integral homology.
//!
//! By the universal coefficient theorem a coefficient `t` of the torsion
//! of `H̃_j(Δ_W; ℤ)` adds one to `dim H̃_j` and to `dim H̃_{j+1}` over
//! every `𝔽_p` with `p | t`. With `|W| = d` these are the entries
//! `β_{d-j-1,d}` and `β_{d-j-2,d}`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::engines::{has_isolated, subset_classes};
use super::BettiDiagram;
use crate::complexes::flag_complex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{Graph, VertexSet};
use crate::homology::{field_homology_dims, integral_reduced_homology, HomologyGroup};
use crate::linalg::prime_divisors;

pub const DEPENDENCE_MAX_VERTICES: usize = 16;

/// A vertex set whose restriction has torsion in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionWitness {
    pub subset: Vec<usize>,
    pub degree: isize,
    pub factors: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CharDependenceReport {
    pub n: usize,
    /// Betti numbers over ℚ, i.e. the free parts summed over subsets.
    pub rational: BettiDiagram,
    /// For each prime, the amount by which `β^{𝔽_p}_{i,d}` exceeds
    /// `β^ℚ_{i,d}`.
    pub excess: BTreeMap<u64, BTreeMap<(usize, usize), u64>>,
    pub witnesses: Vec<TorsionWitness>,
}

impl CharDependenceReport {
    /// Primes `p` with `β^{𝔽_p} ≠ β^ℚ` somewhere.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.excess.keys().copied().collect()
    }

    pub fn is_independent(&self) -> bool {
        self.excess.is_empty()
    }

    /// Entries `(i, d)` that depend on the characteristic, with the primes
    /// responsible.
    pub fn dependent_entries(&self) -> BTreeMap<(usize, usize), BTreeSet<u64>> {
        let mut out: BTreeMap<(usize, usize), BTreeSet<u64>> = BTreeMap::new();
        for (&p, m) in &self.excess {
            for &k in m.keys() {
                out.entry(k).or_default().insert(p);
            }
        }
        out
    }

    /// Homological indices `i` whose total `β_i` depends on the field.
    pub fn dependent_indices(&self) -> BTreeSet<usize> {
        self.dependent_entries().keys().map(|&(i, _)| i).collect()
    }

    /// The diagram over `field`, reconstructed from integral data.
    pub fn diagram_over(&self, field: Field) -> BettiDiagram {
        let mut d = self.rational.clone();
        d.field = field;
        if let Field::Prime(p) = field {
            if let Some(m) = self.excess.get(&(p as u64)) {
                for (&(i, dd), &c) in m {
                    d.add(i, dd, c);
                }
            }
        }
        d
    }
}

fn free_only(delta: &crate::complexes::SimplicialComplex) -> Vec<HomologyGroup> {
    let dims = field_homology_dims(delta, Field::Rational);
    (0..dims.as_slice().len())
        .map(|k| HomologyGroup { degree: k as isize - 1, free_rank: dims.as_slice()[k], torsion: Vec::new() })
        .collect()
}

/// Integral homology of every induced subgraph class of `g`. Classes of
/// maximum degree at most two have torsion-free flag complexes; for them
/// only ranks over ℚ are computed.
pub fn char_dependence(g: &Graph) -> Result<CharDependenceReport> {
    let n = g.n();
    if n > DEPENDENCE_MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "vertex count for characteristic analysis",
            actual: n,
            limit: DEPENDENCE_MAX_VERTICES,
            hint: "restrict to a subgraph or compare field diagrams directly",
        });
    }
    let classes = subset_classes(g, |w| w != 0 && !has_isolated(g, w));
    let results: Vec<(Vec<HomologyGroup>, usize)> = classes
        .par_iter()
        .map(|(form, _)| {
            let h = form.to_graph();
            let delta = flag_complex(&h);
            let groups = if h.max_degree() <= 2 {
                free_only(&delta)
            } else {
                integral_reduced_homology(&delta)
            };
            (groups, form.n())
        })
        .collect();
    let mut rational = BettiDiagram::new(Field::Rational, n);
    let mut excess: BTreeMap<u64, BTreeMap<(usize, usize), u64>> = BTreeMap::new();
    let mut witnesses = Vec::new();
    for ((_, members), (groups, d)) in classes.iter().zip(&results) {
        let mult = members.len() as u64;
        let d = *d as isize;
        for h in groups {
            let j = h.degree;
            rational.add((d - j - 1) as usize, d as usize, h.free_rank as u64 * mult);
            if h.torsion.is_empty() {
                continue;
            }
            for t in &h.torsion {
                for p in prime_divisors(t) {
                    let m = excess.entry(p).or_default();
                    *m.entry(((d - j - 1) as usize, d as usize)).or_insert(0) += mult;
                    *m.entry(((d - j - 2) as usize, d as usize)).or_insert(0) += mult;
                }
            }
            for &w in members {
                witnesses.push(TorsionWitness {
                    subset: VertexSet::new(w, n).expect("in range").iter().collect(),
                    degree: j,
                    factors: h.torsion.iter().map(BigInt::to_string).collect(),
                });
            }
        }
    }
    witnesses.sort_by(|a, b| (a.subset.len(), &a.subset, a.degree).cmp(&(b.subset.len(), &b.subset, b.degree)));
    Ok(CharDependenceReport { n, rational, excess, witnesses })
}
