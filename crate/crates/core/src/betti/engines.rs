//! Hochster and Eagon–Reiner engines.

use std::collections::HashMap;

use rayon::prelude::*;

use super::BettiDiagram;
use crate::complexes::{alexander_dual_of_graph, flag_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{canonical_form, full_mask, Bits, CanonicalForm, Graph, VertexSet};
use crate::homology::field_homology_dims;

/// Subset loops run over `2^n` vertex sets.
pub const HOCHSTER_MAX_VERTICES: usize = 20;

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::SizeGuard {
            what: "vertex count for subset enumeration",
            actual: n,
            limit,
            hint: "use the eagon-reiner engine for large single graphs",
        });
    }
    Ok(())
}

/// Groups the vertex sets accepted by `keep` by the isomorphism class of
/// the induced subgraph. Classes come sorted by canonical form and their
/// members in ascending mask order.
pub(crate) fn subset_classes(g: &Graph, keep: impl Fn(u64) -> bool + Sync) -> Vec<(CanonicalForm, Vec<u64>)> {
    let all = full_mask(g.n());
    let map = (0..=all)
        .into_par_iter()
        .filter(|&w| keep(w))
        .fold(HashMap::<CanonicalForm, Vec<u64>>::new, |mut acc, w| {
            acc.entry(canonical_form(&g.induced_on(w))).or_default().push(w);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            a
        });
    let mut classes: Vec<(CanonicalForm, Vec<u64>)> = map.into_iter().collect();
    classes.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    for (_, v) in &mut classes {
        v.sort_unstable();
    }
    classes
}

/// True when some vertex of `w` has no neighbor inside `w`. Such a vertex
/// is a cone point of the flag complex, so all reduced homology vanishes.
pub(crate) fn has_isolated(g: &Graph, w: u64) -> bool {
    Bits(w).any(|v| g.neighbors(v) & w == 0)
}

/// `β_{i,d} = Σ_{|W| = d} dim H̃_{d-i-1}(Δ(G_W); K)`, with the homology of
/// each isomorphism class of induced subgraph computed once.
pub fn hochster_betti_graph(g: &Graph, field: Field) -> Result<BettiDiagram> {
    guard(g.n(), HOCHSTER_MAX_VERTICES)?;
    // W = ∅ is the only cone-free set with an isolated-vertex-free empty
    // graph; it contributes β_{0,0}, already in the fresh diagram.
    let classes = subset_classes(g, |w| w != 0 && !has_isolated(g, w));
    let parts: Vec<BettiDiagram> = classes
        .par_iter()
        .map(|(form, members)| {
            let mut part = BettiDiagram::new(field, g.n());
            let d = form.n();
            let dims = field_homology_dims(&flag_complex(&form.to_graph()), field);
            for (j, x) in dims.nonzero() {
                let i = d as isize - j - 1;
                part.add(i as usize, d, x as u64 * members.len() as u64);
            }
            part
        })
        .collect();
    let mut out = BettiDiagram::new(field, g.n());
    for p in &parts {
        out.absorb(p);
    }
    Ok(out)
}

/// Hochster's formula for an arbitrary complex: a sum over all vertex
/// sets `W` of the universe.
pub fn stanley_reisner_betti(delta: &SimplicialComplex, field: Field) -> Result<BettiDiagram> {
    let n = delta.universe();
    guard(n, HOCHSTER_MAX_VERTICES)?;
    if delta.is_void() {
        return Err(Error::Precondition("the void complex has no Stanley-Reisner ring".into()));
    }
    let parts: Vec<BettiDiagram> = (1..=full_mask(n))
        .into_par_iter()
        .fold(
            || BettiDiagram::new(field, n),
            |mut acc, w| {
                let r = delta.restriction(VertexSet::new(w, n).expect("w is in range"));
                if r.is_cone().is_none() {
                    let d = w.count_ones() as isize;
                    for (j, x) in field_homology_dims(&r, field).nonzero() {
                        acc.add((d - j - 1) as usize, d as usize, x as u64);
                    }
                }
                acc
            },
        )
        .collect();
    let mut out = BettiDiagram::new(field, n);
    for p in &parts {
        out.absorb(p);
    }
    Ok(out)
}

/// `β_{i,d} = Σ dim H̃_{i-2}(link F; K)` over faces `F` of the Alexander
/// dual with `|V − F| = d`. The link of `F` depends only on the induced
/// subgraph on `V − F`, so links are grouped by its isomorphism class.
pub fn eagon_reiner_betti(g: &Graph, field: Field) -> Result<BettiDiagram> {
    let n = g.n();
    let Ok(dual) = alexander_dual_of_graph(g) else {
        return Ok(BettiDiagram::new(field, n));
    };
    let all = full_mask(n);
    let faces: Vec<u64> = (-1..=dual.dim().unwrap_or(-1)).flat_map(|k| dual.faces(k).iter().copied()).collect();
    let mut classes: HashMap<CanonicalForm, (u64, u64)> = HashMap::new();
    let forms: Vec<CanonicalForm> = faces.par_iter().map(|&f| canonical_form(&g.induced_on(all & !f))).collect();
    for (form, &f) in forms.into_iter().zip(&faces) {
        classes.entry(form).or_insert((f, 0)).1 += 1;
    }
    let mut classes: Vec<(CanonicalForm, (u64, u64))> = classes.into_iter().collect();
    classes.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let parts: Vec<BettiDiagram> = classes
        .par_iter()
        .map(|(_, (rep, mult))| {
            let mut part = BettiDiagram::new(field, n);
            let link = dual.link(VertexSet::new(*rep, n).expect("face in range")).expect("rep is a face");
            let d = n - rep.count_ones() as usize;
            for (j, x) in field_homology_dims(&link, field).nonzero() {
                part.add((j + 2) as usize, d, x as u64 * mult);
            }
            part
        })
        .collect();
    let mut out = BettiDiagram::new(field, n);
    for p in &parts {
        out.absorb(p);
    }
    Ok(out)
}
