//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton
//! cell, recurse. Leaves are compared by their relabeled adjacency
//! matrix and the largest one wins. Automorphisms discovered when two
//! leaves coincide prune the tree in two ways: a jump back to the
//! divergence point with the first (or best) leaf, and orbit pruning
//! among the children of every node using the automorphisms that fix
//! that node's individualized prefix.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use super::{emit_graph6, full_mask, Bits, Graph};

/// Label-invariant certificate of a graph: the vertex count followed by
/// the upper triangle (graph6 bit order) of the canonically relabeled
/// adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn n(&self) -> usize {
        self.bytes[0] as usize
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![0u64; n];
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.bytes[1 + k / 8] >> (k % 8) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// graph6 encoding of the canonical representative.
    pub fn graph6(&self) -> String {
        emit_graph6(&self.to_graph())
    }

    fn from_relabeled(n: usize, rows: &[u64]) -> Self {
        let bits = n * n.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; 1 + bits.div_ceil(8)];
        bytes[0] = n as u8;
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if rows[i] >> j & 1 == 1 {
                    bytes[1 + k / 8] |= 1 << (k % 8);
                }
                k += 1;
            }
        }
        CanonicalForm { bytes }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Automorphisms found during the search (each maps `v` to `gen[v]`).
    pub generators: Vec<Vec<usize>>,
    /// Orbit representative (least vertex) of every vertex under the
    /// group generated by `generators`.
    pub orbits: Vec<usize>,
    pub form: CanonicalForm,
}

/// Canonical form of an uncolored graph.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g, None).form
}

/// Canonical labeling. `colors` is an optional ordered partition of the
/// vertices (cells as masks); the result is invariant under relabelings
/// that map each cell onto itself.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u64]>) -> Labeling {
    let n = g.n();
    let mut cells: Vec<u64> = match colors {
        Some(c) => c.iter().copied().filter(|&m| m != 0).collect(),
        None if n == 0 => Vec::new(),
        None => vec![full_mask(n)],
    };
    debug_assert_eq!(cells.iter().fold(0, |a, &c| a | c), full_mask(n));
    let queue = cells.clone();
    refine(g.adjacency(), &mut cells, queue);

    let mut search = Search {
        adj: g.adjacency(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::new();
    search.descend(cells, &mut path);

    let best = search.best.expect("search visits at least one leaf");
    let mut label = vec![0usize; n];
    for (pos, &v) in best.lab.iter().enumerate() {
        label[v as usize] = pos;
    }
    let generators: Vec<Vec<usize>> = search
        .autos
        .iter()
        .map(|a| a.iter().map(|&x| x as usize).collect())
        .collect();
    let orbits = orbit_reps(n, &search.autos, &[]);
    Labeling {
        label,
        generators,
        orbits,
        form: CanonicalForm::from_relabeled(n, &best.cert),
    }
}

struct Leaf {
    /// Vertex at each canonical position.
    lab: Vec<u8>,
    cert: Vec<u64>,
    path: Vec<u8>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Explores the subtree rooted at an equitable partition. Returns
    /// `Some(level)` to abandon everything below `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<u8>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let level = path.len();
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() {
                let reps = orbit_reps(self.n, &self.autos, path);
                if explored.iter().any(|&w| reps[w] == reps[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            child[target] = cell & !(1 << v);
            child.insert(target, 1 << v);
            refine(self.adj, &mut child, vec![1 << v]);
            path.push(v as u8);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; 64];
        for (p, &v) in lab.iter().enumerate() {
            pos[v as usize] = p as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| Bits(self.adj[v as usize]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        let leaf = Leaf { lab, cert, path: path.to_vec() };

        let Some(first) = &self.first else {
            self.first = Some(Leaf { lab: leaf.lab.clone(), cert: leaf.cert.clone(), path: leaf.path.clone() });
            self.best = Some(leaf);
            return None;
        };
        if first.cert == leaf.cert {
            let auto = compose_auto(&leaf.lab, &first.lab);
            let to = common_prefix(&leaf.path, &first.path);
            self.record(auto);
            return Some(to);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Equal => {
                let auto = compose_auto(&leaf.lab, &best.lab);
                let to = common_prefix(&leaf.path, &best.path);
                self.record(auto);
                Some(to)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }

    fn record(&mut self, auto: Vec<u8>) {
        if auto.iter().enumerate().any(|(v, &w)| v != w as usize) && !self.autos.contains(&auto) {
            self.autos.push(auto);
        }
    }
}

/// The automorphism sending the vertex at each position of `from` to the
/// vertex at the same position of `to`.
fn compose_auto(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut auto = vec![0u8; from.len()];
    for (a, b) in from.iter().zip(to) {
        auto[*a as usize] = *b;
    }
    auto
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Orbit representatives under the automorphisms that fix every vertex
/// of `fixed`.
fn orbit_reps(n: usize, autos: &[Vec<u8>], fixed: &[u8]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in autos {
        if fixed.iter().any(|&v| a[v as usize] != v) {
            continue;
        }
        for v in 0..n {
            let (x, y) = (find(&mut parent, v), find(&mut parent, a[v] as usize));
            if x != y {
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement,
/// splitting cells by neighbor counts into each splitter. Pieces are
/// ordered by increasing count, which keeps the result label-invariant.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>, initial: Vec<u64>) {
    let n = adj.len();
    let mut queue: VecDeque<u64> = initial.into();
    let mut by_count = [0u64; 65];
    while let Some(splitter) = queue.pop_front() {
        if cells.len() == n {
            break;
        }
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (64usize, 0usize);
            for v in Bits(cell) {
                let k = (adj[v] & splitter).count_ones() as usize;
                by_count[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                by_count[lo] = 0;
                i += 1;
                continue;
            }
            let mut pieces = Vec::new();
            for slot in by_count.iter_mut().take(hi + 1).skip(lo) {
                if *slot != 0 {
                    pieces.push(*slot);
                    *slot = 0;
                }
            }
            let count = pieces.len();
            queue.extend(pieces.iter().copied());
            cells.splice(i..=i, pieces);
            i += count;
        }
    }
}
