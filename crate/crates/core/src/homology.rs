//! Reduced simplicial homology with integer and field coefficients.
//!
//! `k`-faces are indexed in ascending bit-pattern order. The boundary of a
//! face with vertices `v_0 < … < v_k` sends it to `Σ (-1)^m (F − v_m)`;
//! `∂_0` is the augmentation onto the empty face.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complexes::SimplicialComplex;
use crate::field::Field;
use crate::graphs::Bits;
use crate::linalg::{prime_divisors, smith_normal_form, IntegerMatrix, SmithForm, SparseRows};

/// Boundary maps of the augmented chain complex. `boundary[k]` maps
/// `k`-chains to `(k-1)`-chains.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    pub boundary: Vec<IntegerMatrix>,
}

impl ChainComplexZ {
    /// Top dimension, -1 for `{∅}` and `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        if self.boundary.is_empty() {
            None
        } else {
            Some(self.boundary.len() as isize - 2)
        }
    }
}

/// `H̃_degree(Δ; ℤ) ≅ ℤ^free_rank ⊕ ⊕ ℤ/t` over the torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: isize,
    pub free_rank: usize,
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
}

mod bigint_list {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|d| d.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Field Betti numbers of reduced homology, indexed from degree -1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReducedBetti(Vec<usize>);

impl ReducedBetti {
    pub fn degree(&self, j: isize) -> usize {
        if j < -1 {
            0
        } else {
            self.0.get((j + 1) as usize).copied().unwrap_or(0)
        }
    }

    /// `(degree, dimension)` for the nonzero degrees.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.0.iter().enumerate().filter(|(_, &d)| d > 0).map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Boundary of the `k`-faces as sparse rows: one row per `k`-face, listing
/// the positions of its facets among the `(k-1)`-faces. This is the
/// transpose of `∂_k`, which has the same rank and invariant factors.
fn boundary_rows(delta: &SimplicialComplex, k: isize) -> SparseRows<i64> {
    let lower = delta.faces(k - 1);
    let rows = delta
        .faces(k)
        .iter()
        .map(|&f| {
            let mut row: Vec<(u32, i64)> = Bits(f)
                .enumerate()
                .map(|(m, v)| {
                    let idx = lower.binary_search(&(f & !(1 << v))).expect("faces are closed under subsets");
                    (idx as u32, if m % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    SparseRows { cols: lower.len(), rows }
}

pub fn chain_complex(delta: &SimplicialComplex) -> ChainComplexZ {
    let Some(dim) = delta.dim() else {
        return ChainComplexZ { boundary: Vec::new() };
    };
    let mut boundary = vec![IntegerMatrix::zeros(0, 1)];
    for k in 0..=dim {
        let rows = boundary_rows(delta, k);
        let trip = rows
            .rows
            .iter()
            .enumerate()
            .flat_map(|(c, row)| row.iter().map(move |&(r, v)| (r as usize, c, v)));
        boundary.push(IntegerMatrix::from_triplets(rows.cols, rows.rows.len(), trip).expect("indices in range"));
    }
    ChainComplexZ { boundary }
}

fn rank_of(rows: &SparseRows<i64>, field: Field) -> usize {
    match field {
        Field::Rational => rows.rank_rational(),
        Field::Prime(p) => rows.rank_mod(p),
    }
}

/// Dimensions of `H̃_j(Δ; K)` for `j = -1..=dim`, from ranks over `K`.
pub fn field_homology_dims(delta: &SimplicialComplex, field: Field) -> ReducedBetti {
    let Some(dim) = delta.dim() else {
        return ReducedBetti::default();
    };
    let f = delta.f_vector();
    // rank[k + 1] = rank ∂_k, with ∂_{-1} = ∂_{dim+1} = 0.
    let mut rank = vec![0usize; (dim + 3) as usize];
    for k in 0..=dim {
        rank[(k + 1) as usize] = rank_of(&boundary_rows(delta, k), field);
    }
    ReducedBetti((0..f.len()).map(|j| f[j] - rank[j] - rank[j + 1]).collect())
}

/// Integral reduced homology in degrees `-1..=dim`.
pub fn integral_reduced_homology(delta: &SimplicialComplex) -> Vec<HomologyGroup> {
    match delta.dim() {
        Some(dim) => integral_homology_window(delta, -1, dim),
        None => Vec::new(),
    }
}

/// Integral reduced homology in degrees `lo..=hi` only. Each degree needs
/// the ranks of `∂_j` and `∂_{j+1}` and the Smith form of the latter.
pub fn integral_homology_window(delta: &SimplicialComplex, lo: isize, hi: isize) -> Vec<HomologyGroup> {
    let Some(dim) = delta.dim() else {
        return Vec::new();
    };
    let lo = lo.max(-1);
    let hi = hi.min(dim);
    if lo > hi {
        return Vec::new();
    }
    // smith[k] for ∂_k with k in lo..=hi+1; ∂_{-1} and ∂_{dim+1} vanish.
    let smith = |k: isize| -> SmithForm {
        if k < 0 || k > dim {
            SmithForm { rank: 0, invariant_factors: Vec::new() }
        } else {
            boundary_rows(delta, k).smith()
        }
    };
    let mut below = smith(lo);
    let mut out = Vec::new();
    for j in lo..=hi {
        let above = smith(j + 1);
        let faces = delta.faces(j).len();
        out.push(HomologyGroup {
            degree: j,
            free_rank: faces - below.rank - above.rank,
            torsion: above.torsion().cloned().collect(),
        });
        below = above;
    }
    out
}

/// Primes dividing some torsion coefficient of `H̃_*(Δ; ℤ)`.
pub fn torsion_primes(delta: &SimplicialComplex) -> BTreeSet<u64> {
    integral_reduced_homology(delta).iter().flat_map(|h| h.torsion.iter().flat_map(prime_divisors)).collect()
}

/// Field dimensions predicted from integral homology by the universal
/// coefficient theorem.
pub fn universal_coefficients(groups: &[HomologyGroup], field: Field) -> ReducedBetti {
    let divisible = |h: &HomologyGroup| match field {
        Field::Rational => 0,
        Field::Prime(p) => h.torsion.iter().filter(|t| (*t % p).is_zero()).count(),
    };
    let mut dims = Vec::with_capacity(groups.len());
    for (k, h) in groups.iter().enumerate() {
        let prev = if k == 0 { 0 } else { divisible(&groups[k - 1]) };
        dims.push(h.free_rank + divisible(h) + prev);
    }
    ReducedBetti(dims)
}

/// Smith form of `∂_k`.
pub fn smith_of_boundary(delta: &SimplicialComplex, k: isize) -> SmithForm {
    smith_normal_form(&chain_complex(delta).boundary[(k + 1) as usize])
}
