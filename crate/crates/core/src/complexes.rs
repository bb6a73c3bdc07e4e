//! Finite abstract simplicial complexes on at most 64 vertices.
//!
//! A complex is stored by its facets. Faces are materialized per dimension
//! on first use and cached; the empty face is always listed (dimension -1)
//! unless the complex is void.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graphs::{compact_bits, full_mask, Bits, Graph, VertexSet, MAX_VERTICES};

pub struct SimplicialComplex {
    universe: usize,
    facets: Vec<u64>,
    // Adjacency of a graph whose independence complex this is; makes the
    // face test a single mask operation.
    flag: Option<Vec<u64>>,
    faces: OnceLock<Vec<Vec<u64>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            universe: self.universe,
            facets: self.facets.clone(),
            flag: self.flag.clone(),
            faces: self.faces.clone(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets().map(|s| s.to_string()).collect();
        write!(f, "SimplicialComplex(n={}, facets=[{}])", self.universe, facets.join(" "))
    }
}

/// Keeps the inclusion-maximal sets, sorted and without duplicates.
fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & k == s) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `facets`. Non-maximal sets are dropped.
    /// An empty list gives the void complex; `[0]` gives `{∅}`.
    pub fn from_facets(universe: usize, facets: impl IntoIterator<Item = u64>) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: universe, max: MAX_VERTICES });
        }
        let mask = full_mask(universe);
        let facets: Vec<u64> = facets.into_iter().collect();
        if let Some(&bad) = facets.iter().find(|&&f| f & !mask != 0) {
            let vertex = 63 - (bad & !mask).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: universe });
        }
        Ok(SimplicialComplex::unchecked(universe, maximal_sets(facets), None))
    }

    fn unchecked(universe: usize, facets: Vec<u64>, flag: Option<Vec<u64>>) -> Self {
        SimplicialComplex { universe, facets, flag, faces: OnceLock::new() }
    }

    /// The complex with no faces at all.
    pub fn void(universe: usize) -> Self {
        SimplicialComplex::unchecked(universe, Vec::new(), None)
    }

    /// The full simplex on `0..universe`.
    pub fn simplex(universe: usize) -> Self {
        SimplicialComplex::unchecked(universe, vec![full_mask(universe)], None)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn facets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let n = self.universe;
        self.facets.iter().map(move |&f| VertexSet::new(f, n).expect("facets lie in the universe"))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that lie in some face.
    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// Dimension; `None` for the void complex and -1 for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_face_mask(&self, f: u64) -> bool {
        match &self.flag {
            Some(adj) => {
                f & !full_mask(self.universe) == 0 && !self.facets.is_empty() && Bits(f).all(|v| adj[v] & f == 0)
            }
            None => self.facets.iter().any(|&g| f & g == f),
        }
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.is_face_mask(f.bits())
    }

    fn face_lists(&self) -> &Vec<Vec<u64>> {
        self.faces.get_or_init(|| {
            let Some(dim) = self.dim() else {
                return Vec::new();
            };
            let mut lists = vec![Vec::new(); (dim + 2) as usize];
            let verts = self.vertex_mask();
            let mut stack = vec![0u64];
            while let Some(f) = stack.pop() {
                lists[f.count_ones() as usize].push(f);
                let above = if f == 0 { verts } else { verts & !full_mask(64 - f.leading_zeros() as usize) };
                for v in Bits(above) {
                    let g = f | 1 << v;
                    if self.is_face_mask(g) {
                        stack.push(g);
                    }
                }
            }
            for l in &mut lists {
                l.sort_unstable();
            }
            lists
        })
    }

    /// Faces of dimension `k` (so `k + 1` vertices), sorted by bit pattern.
    pub fn faces(&self, k: isize) -> &[u64] {
        let lists = self.face_lists();
        if k < -1 || (k + 1) as usize >= lists.len() {
            &[]
        } else {
            &lists[(k + 1) as usize]
        }
    }

    /// Face counts `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.face_lists().iter().map(Vec::len).collect()
    }

    /// Restriction to the vertex set `w`, compacted to `0..|w|` in
    /// ascending order.
    pub fn restriction(&self, w: VertexSet) -> SimplicialComplex {
        let w = w.bits() & full_mask(self.universe);
        let m = w.count_ones() as usize;
        if let Some(adj) = &self.flag {
            if !self.facets.is_empty() {
                return flag_complex(&Graph::from_adjacency_unchecked(adj.clone()).induced_on(w));
            }
        }
        let facets = self.facets.iter().map(|&f| compact_bits(f & w, w)).collect();
        SimplicialComplex::unchecked(m, maximal_sets(facets), None)
    }

    /// `link(f) = {g : g ∪ f ∈ Δ, g ∩ f = ∅}`, on the same vertex universe.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        let f = f.bits();
        if !self.is_face_mask(f) {
            return Err(Error::NotAFace(f));
        }
        // Distinct facets containing f stay incomparable after removing f.
        let mut facets: Vec<u64> = self.facets.iter().filter(|&&g| g & f == f).map(|&g| g & !f).collect();
        facets.sort_unstable();
        Ok(SimplicialComplex::unchecked(self.universe, facets, None))
    }

    /// A vertex lying in every facet, the least one if several do.
    pub fn is_cone(&self) -> Option<usize> {
        let common = self.facets.iter().fold(u64::MAX, |a, &f| a & f);
        if self.facets.is_empty() || common == 0 {
            None
        } else {
            Some(common.trailing_zeros() as usize)
        }
    }

    /// Alexander dual on the same universe: `F ∈ Δ*` iff `V − F ∉ Δ`.
    /// Exponential in the universe; meant for small inputs.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.universe > 24 {
            return Err(Error::SizeGuard {
                what: "alexander dual universe",
                actual: self.universe,
                limit: 24,
                hint: "use alexander_dual_of_graph for flag complexes",
            });
        }
        let all = full_mask(self.universe);
        // Facets of the dual are complements of minimal non-faces.
        let mut facets = Vec::new();
        for s in 0..=all {
            if !self.is_face_mask(s) && Bits(s).all(|v| self.is_face_mask(s & !(1 << v))) {
                facets.push(all & !s);
            }
        }
        Ok(SimplicialComplex::unchecked(self.universe, maximal_sets(facets), None))
    }

    /// One facet per line, vertices separated by spaces.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = Bits(*f).map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Maximal cliques of the graph given by `adj`, by Bron–Kerbosch with
/// Tomita pivoting.
fn maximal_cliques(adj: &[u64], all: u64) -> Vec<u64> {
    fn expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = Bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).expect("p is nonempty");
        for v in Bits(p & !adj[pivot]) {
            expand(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    expand(adj, 0, all, 0, &mut out);
    out
}

/// The independence complex of `g`: faces are the vertex sets spanning no
/// edge.
pub fn flag_complex(g: &Graph) -> SimplicialComplex {
    let n = g.n();
    let co = g.complement();
    let mut facets = maximal_cliques(co.adjacency(), full_mask(n));
    facets.sort_unstable();
    SimplicialComplex::unchecked(n, facets, Some(g.adjacency().to_vec()))
}

/// The Alexander dual of the flag complex of `g`, with facets
/// `V − {u, v}` over the edges `uv`.
pub fn alexander_dual_of_graph(g: &Graph) -> Result<SimplicialComplex> {
    if g.edge_count() == 0 {
        return Err(Error::VoidDual);
    }
    let all = full_mask(g.n());
    let mut facets: Vec<u64> = g.edges().into_iter().map(|(u, v)| all & !(1 << u) & !(1 << v)).collect();
    facets.sort_unstable();
    Ok(SimplicialComplex::unchecked(g.n(), facets, None))
}

/// Parses a facet list: one facet per line as whitespace-separated vertex
/// indices, `#` starting a comment. The universe is one more than the
/// largest index, or `universe` if given.
pub fn parse_facets(text: &str, universe: Option<usize>) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    let mut top = 0usize;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut f = 0u64;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::FacetParse { line: k + 1, message: format!("not a vertex index: {tok:?}") })?;
            if v >= MAX_VERTICES {
                return Err(Error::FacetParse { line: k + 1, message: format!("vertex {v} exceeds {}", MAX_VERTICES - 1) });
            }
            f |= 1 << v;
            top = top.max(v + 1);
        }
        facets.push(f);
    }
    let n = match universe {
        Some(u) if u < top => {
            return Err(Error::FacetParse { line: 0, message: format!("vertex {} outside universe {u}", top - 1) })
        }
        Some(u) => u,
        None => top,
    };
    SimplicialComplex::from_facets(n, facets)
}
