//! Named example graphs, complexes and their reference Betti tables.

use crate::complexes::{parse_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::Graph;

/// Parses an edge list with 1-based vertices. A `# vertices n` line fixes
/// the vertex count; otherwise it is the largest label seen. Other `#`
/// lines are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let bad = |line: usize, message: String| Error::FacetParse { line, message };
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(v) = rest.trim().strip_prefix("vertices") {
                n = Some(v.trim().parse::<usize>().map_err(|e| bad(k + 1, e.to_string()))?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == '-' || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad(k + 1, format!("bad vertex {t:?}"))))
            .collect::<Result<_>>()?;
        match nums[..] {
            [u, v] if u >= 1 && v >= 1 => edges.push((u - 1, v - 1)),
            _ => return Err(bad(k + 1, "expected two positive vertex labels".into())),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

const GRAPHS: &[(&str, &str)] = &[
    ("g12", include_str!("../fixtures/g12.edges")),
    ("h11", include_str!("../fixtures/h11.edges")),
    ("g1", include_str!("../fixtures/g1.edges")),
    ("g2", include_str!("../fixtures/g2.edges")),
    ("g3", include_str!("../fixtures/g3.edges")),
    ("g4", include_str!("../fixtures/g4.edges")),
];

const TABLES: &[(&str, &str, &str)] = &[
    ("rp2_6", include_str!("../fixtures/rp2_6_char0.m2"), include_str!("../fixtures/rp2_6_char2.m2")),
    ("g12", include_str!("../fixtures/g12_char0.m2"), include_str!("../fixtures/g12_char2.m2")),
    ("h11", include_str!("../fixtures/h11_char0.m2"), include_str!("../fixtures/h11_char2.m2")),
    ("g1", include_str!("../fixtures/g1_char0.m2"), include_str!("../fixtures/g1_char2.m2")),
    ("g2", include_str!("../fixtures/g2_char0.m2"), include_str!("../fixtures/g2_char2.m2")),
    ("g3", include_str!("../fixtures/g3_char0.m2"), include_str!("../fixtures/g3_char2.m2")),
    ("g4", include_str!("../fixtures/g4_char0.m2"), include_str!("../fixtures/g4_char2.m2")),
];

/// Names accepted by [`graph`].
pub fn graph_names() -> impl Iterator<Item = &'static str> {
    GRAPHS.iter().map(|(n, _)| *n)
}

/// `g12` is the twelve-vertex graph whose flag complex is a projective
/// plane; `h11` is a spanning subgraph of `g12` minus its second vertex;
/// `g1`..`g4` are the eleven-vertex graphs with field-dependent Betti
/// numbers.
pub fn graph(name: &str) -> Option<Graph> {
    GRAPHS.iter().find(|(n, _)| *n == name).map(|(_, t)| parse_edge_list(t).expect("fixture parses"))
}

/// The six-vertex projective plane.
pub fn rp2_6() -> SimplicialComplex {
    parse_facets(include_str!("../fixtures/rp2_6.facets"), Some(6)).expect("fixture parses")
}

/// The twelve-vertex projective plane; it is the flag complex of `g12`.
pub fn rp2_12() -> SimplicialComplex {
    parse_facets(include_str!("../fixtures/rp2_12.facets"), Some(12)).expect("fixture parses")
}

/// Reference table text for `name` over ℚ (`Field::Rational`) or `𝔽_2`.
pub fn table(name: &str, field: Field) -> Option<&'static str> {
    let (_, q, two) = TABLES.iter().find(|(n, _, _)| *n == name)?;
    match field {
        Field::Rational => Some(q),
        Field::Prime(2) => Some(two),
        Field::Prime(_) => None,
    }
}

pub fn table_names() -> impl Iterator<Item = &'static str> {
    TABLES.iter().map(|(n, _, _)| *n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_load() {
        let sizes: Vec<(usize, usize)> = graph_names().map(|n| graph(n).unwrap()).map(|g| (g.n(), g.edge_count())).collect();
        assert_eq!(sizes, vec![(12, 33), (11, 23), (11, 23), (11, 24), (11, 25), (11, 25)]);
        assert!(graph("nope").is_none());
        assert_eq!(rp2_6().f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(rp2_12(), crate::complexes::flag_complex(&graph("g12").unwrap()));
    }

    #[test]
    fn edge_list_syntax() {
        let g = parse_edge_list("# a path\n1-2\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_edge_list("# vertices 5\n1,2\n").unwrap().n(), 5);
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("1 2 3\n").is_err());
        assert!(parse_edge_list("1 x\n").is_err());
    }
}
