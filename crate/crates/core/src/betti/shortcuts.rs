//! Combinatorial formulas for parts of the diagram, and consistency checks.

use super::{hochster_betti_graph, BettiDiagram};
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{full_mask, Graph};

/// Next mask with the same popcount.
fn gosper(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// `β_{i-1,i}`: the sum over `i`-subsets `W` of the number of components
/// of `G^c[W]` minus one. Independent of the field.
pub fn linear_strand_betti(g: &Graph, i: usize) -> u64 {
    let n = g.n();
    if i == 0 || i > n {
        return 0;
    }
    let gc = g.complement();
    let limit = full_mask(n);
    let mut w = full_mask(i);
    let mut total = 0;
    loop {
        total += gc.component_count_within(w) as u64 - 1;
        if w == limit || n == i {
            break;
        }
        let next = gosper(w);
        if next > limit {
            break;
        }
        w = next;
    }
    total
}

/// Largest `|W| - 1` with `G^c[W]` disconnected, or 0. Exhaustive over
/// vertex sets.
pub fn linear_strand_length(g: &Graph) -> usize {
    let gc = g.complement();
    let mut best = 0;
    for w in 1..=full_mask(g.n()) {
        let k = w.count_ones() as usize;
        if k > best + 1 && gc.component_count_within(w) > 1 {
            best = k - 1;
        }
    }
    best
}

/// `β_{i,2i}` is the number of induced subgraphs made of `i` disjoint
/// edges.
pub fn betti_top_strand(g: &Graph, i: usize) -> u64 {
    g.induced_matching_count(i)
}

/// Numerator of the Hilbert series over `(1-t)^n`: coefficient `k` of
/// `Σ_j f_{j-1} t^j (1-t)^{n-j}`.
pub fn k_polynomial(delta: &SimplicialComplex) -> Vec<i64> {
    let n = delta.universe();
    let f = delta.f_vector();
    let mut out = vec![0i64; n + 1];
    for (j, &fj) in f.iter().enumerate() {
        // (1-t)^{n-j} expanded with binomials.
        let mut c: i64 = 1;
        for m in 0..=n - j {
            out[j + m] += fj as i64 * if m % 2 == 0 { c } else { -c };
            c = c * (n - j - m) as i64 / (m as i64 + 1);
        }
    }
    out
}

/// The alternating sums `Σ_i (-1)^i β_{i,d}` agree with the K-polynomial
/// of `delta`.
pub fn hilbert_consistency(diagram: &BettiDiagram, delta: &SimplicialComplex) -> bool {
    let k = k_polynomial(delta);
    let mut alt = vec![0i64; k.len()];
    for ((i, d), c) in diagram.entries() {
        if d >= alt.len() {
            return false;
        }
        alt[d] += if i % 2 == 0 { c as i64 } else { -(c as i64) };
    }
    alt == k
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j as u64 + 1))
}

/// For a vertex `v` adjacent to every other vertex, checks
/// `β_i(G) = β_i(G - v) + β_{i-1}(G - v) + C(n-1, i)` for every `i > 1`.
pub fn dominating_vertex_identity(g: &Graph, v: usize, field: Field) -> Result<bool> {
    let n = g.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if g.degree(v) != n - 1 {
        return Err(Error::Precondition(format!("vertex {v} has degree {} but needs {}", g.degree(v), n - 1)));
    }
    let full = hochster_betti_graph(g, field)?.totals();
    let rest = hochster_betti_graph(&g.remove_vertex(v), field)?.totals();
    let at = |t: &[u64], i: usize| t.get(i).copied().unwrap_or(0);
    let top = full.len().max(rest.len() + 1).max(n);
    Ok((2..=top).all(|i| at(&full, i) == at(&rest, i) + at(&rest, i - 1) + binomial(n - 1, i)))
}
