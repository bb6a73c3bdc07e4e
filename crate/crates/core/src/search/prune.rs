//! Conditions a minimal graph with field-dependent Betti numbers must meet.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::graphs::{canonical_form, full_mask, CanonicalForm, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Degree1Reduction,
    HighDegreeReduction,
    DisconnectedSplit,
    #[serde(rename = "max_degree_2")]
    MaxDegree2,
    NonneighborConditionS4,
    NonneighborConditionS5,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Degree1Reduction,
        Rule::HighDegreeReduction,
        Rule::DisconnectedSplit,
        Rule::MaxDegree2,
        Rule::NonneighborConditionS4,
        Rule::NonneighborConditionS5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Degree1Reduction => "degree1_reduction",
            Rule::HighDegreeReduction => "high_degree_reduction",
            Rule::DisconnectedSplit => "disconnected_split",
            Rule::MaxDegree2 => "max_degree_2",
            Rule::NonneighborConditionS4 => "nonneighbor_condition_s4",
            Rule::NonneighborConditionS5 => "nonneighbor_condition_s5",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneVerdict {
    pub keep: bool,
    pub reasons: Vec<Rule>,
}

fn form(n: usize, edges: &[(usize, usize)]) -> CanonicalForm {
    canonical_form(&Graph::from_edges(n, edges).expect("valid pattern"))
}

/// Two disjoint edges.
pub fn allowed_four() -> &'static CanonicalForm {
    static F: OnceLock<CanonicalForm> = OnceLock::new();
    F.get_or_init(|| form(4, &[(0, 1), (2, 3)]))
}

/// The six five-vertex graphs a non-neighbourhood of size five may induce:
/// P3 + K2, P5, K3 + K2, a triangle with a pendant path of length two, two
/// triangles sharing a vertex, and C5.
pub fn allowed_five() -> &'static [CanonicalForm] {
    static F: OnceLock<Vec<CanonicalForm>> = OnceLock::new();
    F.get_or_init(|| {
        let tri = [(0, 1), (1, 2), (0, 2)];
        let mut v = vec![
            form(5, &[(0, 1), (1, 2), (3, 4)]),
            form(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            form(5, &[tri[0], tri[1], tri[2], (3, 4)]),
            form(5, &[tri[0], tri[1], tri[2], (2, 3), (3, 4)]),
            form(5, &[tri[0], tri[1], tri[2], (2, 3), (3, 4), (2, 4)]),
            form(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        ];
        v.sort();
        v
    })
}

/// Every rule is evaluated, so `reasons` lists all that fire.
pub fn prune(g: &Graph) -> PruneVerdict {
    let n = g.n();
    let degrees = g.degrees();
    let mut reasons = Vec::new();
    if degrees.iter().any(|&d| d <= 1) {
        reasons.push(Rule::Degree1Reduction);
    }
    if degrees.iter().any(|&d| d + 4 >= n) {
        reasons.push(Rule::HighDegreeReduction);
    }
    if !g.is_connected() {
        reasons.push(Rule::DisconnectedSplit);
    }
    if degrees.iter().all(|&d| d <= 2) {
        reasons.push(Rule::MaxDegree2);
    }
    let all = full_mask(n);
    let non_neighbours = |v: usize| all & !g.neighbors(v) & !(1u64 << v);
    if (0..n).map(non_neighbours).any(|s| s.count_ones() == 4 && canonical_form(&g.induced_on(s)) != *allowed_four()) {
        reasons.push(Rule::NonneighborConditionS4);
    }
    if (0..n)
        .map(non_neighbours)
        .any(|s| s.count_ones() == 5 && allowed_five().binary_search(&canonical_form(&g.induced_on(s))).is_err())
    {
        reasons.push(Rule::NonneighborConditionS5);
    }
    PruneVerdict { keep: reasons.is_empty(), reasons }
}
