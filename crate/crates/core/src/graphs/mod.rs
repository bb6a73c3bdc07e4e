//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one 64-bit mask per vertex, so every set
//! operation used by the homology and search code is a single word op.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use enumerate::{enumerate_graphs, Constraints, GraphEnumerator};
pub use graph6::{emit_graph6, parse_graph6};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterates over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `bits` selected by `mask` into the low positions,
/// preserving their relative order.
#[inline]
pub(crate) fn compact_bits(bits: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, v) in Bits(mask).enumerate() {
        if bits >> v & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

/// A subset of the vertices `0..universe`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn new(bits: u64, universe: usize) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: universe, max: MAX_VERTICES });
        }
        if bits & !full_mask(universe) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - bits.leading_zeros() as usize,
                n: universe,
            });
        }
        Ok(VertexSet { bits, universe })
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>, universe: usize) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            bits |= 1 << v;
        }
        VertexSet::new(bits, universe)
    }

    pub fn full(universe: usize) -> Self {
        VertexSet { bits: full_mask(universe), universe }
    }

    pub fn empty(universe: usize) -> Self {
        VertexSet { bits: 0, universe }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn universe(self) -> usize {
        self.universe
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn iter(self) -> Bits {
        Bits(self.bits)
    }

    pub fn complement(self) -> Self {
        VertexSet { bits: !self.bits & full_mask(self.universe), universe: self.universe }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph.
///
/// Invariants: `adj[v]` never contains `v`, adjacency is symmetric and no
/// bit at or above `n` is set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mask = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange { vertex: 63 - row.leading_zeros() as usize, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `k` pairwise disjoint edges on `2k` vertices.
    pub fn matching(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|e| (2 * e, 2 * e + 1)).collect();
        Graph::from_edges(2 * k, &edges)
    }

    /// The star with `leaves` leaves; the center is vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mask = full_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced on `w`, with its vertices relabeled
    /// `0..|w|` in ascending order of their original labels.
    pub fn induced_subgraph(&self, w: VertexSet) -> Graph {
        self.induced_on(w.bits() & full_mask(self.n))
    }

    pub(crate) fn induced_on(&self, mask: u64) -> Graph {
        if mask == full_mask(self.n) {
            return self.clone();
        }
        let adj = Bits(mask).map(|v| compact_bits(self.adj[v] & mask, mask)).collect();
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_on(full_mask(self.n) & !(1 << v))
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length differs from vertex count".into()));
        }
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in Bits(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph { n, adj })
    }

    /// Connected components, as vertex sets sorted by least element.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut remaining = full_mask(self.n);
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let comp = self.component_of(start, remaining);
            remaining &= !comp;
            out.push(VertexSet { bits: comp, universe: self.n });
        }
        out
    }

    /// Closure of `seed` under adjacency, restricted to `within`.
    pub(crate) fn component_of(&self, seed: u64, within: u64) -> u64 {
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(1, full_mask(self.n)) == full_mask(self.n)
    }

    /// Number of connected components of the subgraph induced on `mask`.
    pub(crate) fn component_count_within(&self, mask: u64) -> usize {
        let mut remaining = mask;
        let mut count = 0;
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            remaining &= !self.component_of(start, remaining);
            count += 1;
        }
        count
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let bits = (0..self.n).filter(|&v| self.adj[v] == 0).fold(0u64, |acc, v| acc | 1 << v);
        VertexSet { bits, universe: self.n }
    }

    /// Number of `i`-edge induced matchings: `i` pairwise disjoint edges
    /// with no further edge of the graph among their `2i` endpoints.
    pub fn induced_matching_count(&self, i: usize) -> u64 {
        fn count(g: &Graph, edges: &[(usize, usize)], start: usize, left: usize, forbidden: u64) -> u64 {
            if left == 0 {
                return 1;
            }
            let mut total = 0;
            for (k, &(a, b)) in edges.iter().enumerate().skip(start) {
                if (forbidden >> a | forbidden >> b) & 1 == 1 {
                    continue;
                }
                let blocked = forbidden | 1 << a | 1 << b | g.adj[a] | g.adj[b];
                total += count(g, edges, k + 1, left - 1, blocked);
            }
            total
        }
        if i == 0 {
            return 1;
        }
        count(self, &self.edges(), 0, i, 0)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", emit_graph6(self))
    }
}
