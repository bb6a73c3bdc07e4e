//! The Taylor complex of an edge ideal, tensored down to the field.
//!
//! Generators are sets of edges, with edges ordered lexicographically. After
//! tensoring, the term of the differential that drops the `k`-th edge of a
//! generator survives only when that edge is still covered by the others,
//! so every generator keeps the vertex set it covers. The complex splits
//! into one block per covered set `U`, and `β_{i,|U|}` sums `dim H_i` of
//! those blocks.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::betti::BettiDiagram;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{Bits, Graph, VertexSet};
use crate::linalg::{rank_over, IntegerMatrix};

pub const TAYLOR_MAX_EDGES: usize = 22;

/// The summand of the tensored Taylor complex spanned by edge sets that
/// cover exactly one vertex set.
#[derive(Clone, Debug)]
pub struct TaylorBlock {
    union: VertexSet,
    edges: Vec<u64>,
    /// `generators[i]`: edge subsets of size `i`, as masks over `edges`,
    /// ascending.
    generators: Vec<Vec<u64>>,
}

fn edge_masks(g: &Graph) -> Vec<u64> {
    g.edges().into_iter().map(|(u, v)| (1u64 << u) | (1u64 << v)).collect()
}

fn covered(edges: &[u64], s: u64) -> u64 {
    Bits(s).fold(0, |acc, e| acc | edges[e])
}

fn check(g: &Graph) -> Result<()> {
    let m = g.edge_count();
    if m > TAYLOR_MAX_EDGES {
        return Err(Error::SizeGuard {
            what: "edge count for the Taylor complex",
            actual: m,
            limit: TAYLOR_MAX_EDGES,
            hint: "use the hochster engine",
        });
    }
    Ok(())
}

impl TaylorBlock {
    fn from_subsets(union: VertexSet, edges: Vec<u64>, subsets: &[u64]) -> Self {
        let top = subsets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
        let mut generators = vec![Vec::new(); top + 1];
        for &s in subsets {
            generators[s.count_ones() as usize].push(s);
        }
        for v in &mut generators {
            v.sort_unstable();
        }
        TaylorBlock { union, edges, generators }
    }

    /// The block of `g` for the covered set `u`.
    pub fn new(g: &Graph, u: VertexSet) -> Result<Self> {
        check(g)?;
        let edges = edge_masks(g);
        let inside: u64 = edges.iter().enumerate().filter(|(_, &e)| e & !u.bits() == 0).map(|(k, _)| 1u64 << k).sum();
        let mut subsets = Vec::new();
        let mut s = inside;
        loop {
            if covered(&edges, s) == u.bits() {
                subsets.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & inside;
        }
        Ok(Self::from_subsets(u, edges, &subsets))
    }

    pub fn union(&self) -> VertexSet {
        self.union
    }

    pub fn degree(&self) -> usize {
        self.union.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.generators.get(i).map_or(0, Vec::len)
    }

    /// The differential from index `i` to `i - 1`, with one column per
    /// generator of index `i`.
    pub fn boundary(&self, i: usize) -> IntegerMatrix {
        if i == 0 || i >= self.generators.len() {
            return IntegerMatrix::zeros(if i == 0 { 0 } else { self.rank(i - 1) }, self.rank(i));
        }
        let target = &self.generators[i - 1];
        let mut trip = Vec::new();
        for (c, &s) in self.generators[i].iter().enumerate() {
            for (k, e) in Bits(s).enumerate() {
                let t = s & !(1u64 << e);
                if covered(&self.edges, t) == self.union.bits() {
                    let r = target.binary_search(&t).expect("face of a block generator is in the block");
                    // k is 0-based, so (-1)^{k+1} is the sign for position k + 1.
                    trip.push((r, c, if k % 2 == 0 { -1i64 } else { 1 }));
                }
            }
        }
        IntegerMatrix::from_triplets(target.len(), self.generators[i].len(), trip).expect("indices in range")
    }

    /// `dim H_i` of the block over `field`, for `i = 0..=max index`.
    pub fn homology_dims(&self, field: Field) -> Vec<usize> {
        let top = self.generators.len();
        let ranks: Vec<usize> = (0..=top).map(|i| rank_over(&self.boundary(i), field)).collect();
        (0..top).map(|i| self.rank(i) - ranks[i] - ranks[i + 1]).collect()
    }
}

/// All blocks with at least one generator, ordered by covered set.
pub fn taylor_blocks(g: &Graph) -> Result<Vec<TaylorBlock>> {
    check(g)?;
    let edges = edge_masks(g);
    let m = edges.len();
    let mut unions = vec![0u64; 1usize << m];
    for s in 1..unions.len() {
        let low = s.trailing_zeros() as usize;
        unions[s] = unions[s & (s - 1)] | edges[low];
    }
    let mut groups: HashMap<u64, Vec<u64>> = HashMap::new();
    for (s, &u) in unions.iter().enumerate() {
        groups.entry(u).or_default().push(s as u64);
    }
    let mut keys: Vec<u64> = groups.keys().copied().collect();
    keys.sort_unstable();
    Ok(keys
        .into_iter()
        .map(|u| TaylorBlock::from_subsets(VertexSet::new(u, g.n()).expect("in range"), edges.clone(), &groups[&u]))
        .collect())
}

/// Betti numbers read off the homology of the tensored Taylor complex.
pub fn taylor_betti(g: &Graph, field: Field) -> Result<BettiDiagram> {
    let blocks = taylor_blocks(g)?;
    let parts: Vec<(usize, Vec<usize>)> =
        blocks.par_iter().filter(|b| b.degree() > 0).map(|b| (b.degree(), b.homology_dims(field))).collect();
    let mut out = BettiDiagram::new(field, g.n());
    for (d, dims) in parts {
        for (i, x) in dims.into_iter().enumerate() {
            out.add(i, d, x as u64);
        }
    }
    Ok(out)
}

fn matching_number(g: &Graph, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&x) = memo.get(&mask) {
        return x;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let mut best = matching_number(g, rest, memo);
    for u in Bits(g.neighbors(v) & rest) {
        best = best.max(1 + matching_number(g, rest & !(1u64 << u), memo));
    }
    memo.insert(mask, best);
    best
}

/// Largest number of vertices covered by `i` edges, or 0 when `g` has
/// fewer than `i` edges. `β_{i,d}` vanishes for larger `d`.
pub fn taylor_degree_bound(g: &Graph, i: usize) -> usize {
    if i > g.edge_count() {
        return 0;
    }
    let support = g.n() - g.isolated_vertices().len();
    let nu = matching_number(g, g.vertex_set().bits(), &mut HashMap::new());
    (i + i.min(nu)).min(support)
}
