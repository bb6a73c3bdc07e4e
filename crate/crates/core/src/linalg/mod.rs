//! Exact integer linear algebra: Smith normal form over ℤ and ranks over
//! ℚ and 𝔽_p.
//!
//! Every kernel starts with sparse elimination on unit pivots, which on
//! boundary matrices of simplicial complexes usually removes all but a
//! handful of rows. What is left goes to a dense routine over big
//! integers.

mod dense;
mod sparse;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field};

pub use dense::{bareiss_rank, dense_smith};
pub(crate) use sparse::SparseRows;

/// Sparse integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    // Sorted by (row, col); values nonzero.
    entries: Vec<(usize, usize, BigInt)>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        IntegerMatrix { rows: n, cols: n, entries: (0..n).map(|k| (k, k, BigInt::one())).collect() }
    }

    /// Builds a matrix from triplets. Repeated positions are summed and
    /// zeros dropped.
    pub fn from_triplets<T: Into<BigInt>>(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self> {
        let mut entries: Vec<(usize, usize, BigInt)> = Vec::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Precondition(format!("entry ({r},{c}) outside a {rows}x{cols} matrix")));
            }
            entries.push((r, c, v.into()));
        }
        entries.sort_by_key(|e| (e.0, e.1));
        let mut merged: Vec<(usize, usize, BigInt)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|e| !e.2.is_zero());
        Ok(IntegerMatrix { rows, cols, entries: merged })
    }

    pub fn from_dense<T: Into<BigInt> + Clone>(data: &[Vec<T>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Precondition("ragged dense matrix".into()));
        }
        let trip = data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone().into())));
        IntegerMatrix::from_triplets::<BigInt>(rows, cols, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(r, c, v)| (*r, *c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let t = self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone()));
        IntegerMatrix::from_triplets(self.cols, self.rows, t).expect("indices stay in range")
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in &other.entries {
            by_row[*r].push((*c, v));
        }
        let mut trip = Vec::new();
        for (r, k, a) in &self.entries {
            for &(c, b) in &by_row[*k] {
                trip.push((*r, c, a * b));
            }
        }
        IntegerMatrix::from_triplets(self.rows, other.cols, trip)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows as sparse `i64` lists, or `None` if an entry does not fit.
    pub(crate) fn to_sparse_i64(&self) -> Option<SparseRows<i64>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c as u32, v.to_i64()?));
        }
        Some(SparseRows { cols: self.cols, rows })
    }

    pub(crate) fn to_sparse_big(&self) -> SparseRows<BigInt> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c as u32, v.clone()));
        }
        SparseRows { cols: self.cols, rows }
    }
}

/// Invariant factors `d_1 | d_2 | … | d_rank`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    /// The factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    match m.to_sparse_i64() {
        Some(s) => s.smith(),
        None => m.to_sparse_big().smith(),
    }
}

pub fn rank_rational(m: &IntegerMatrix) -> usize {
    match m.to_sparse_i64() {
        Some(s) => s.rank_rational(),
        None => m.to_sparse_big().rank_rational(),
    }
}

pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> Result<usize> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p32 = p as u32;
    let rows = reduce_rows(m.entries.iter().map(|(r, c, v)| (*r, *c, v)), m.rows, p32);
    Ok(SparseRows { cols: m.cols, rows }.rank_mod_p(p32))
}

pub fn rank_over(m: &IntegerMatrix, field: Field) -> usize {
    match field {
        Field::Rational => rank_rational(m),
        Field::Prime(p) => rank_mod_p(m, p as u64).expect("field holds a prime"),
    }
}

fn reduce_rows<'a>(entries: impl Iterator<Item = (usize, usize, &'a BigInt)>, rows: usize, p: u32) -> Vec<Vec<(u32, u32)>> {
    let bp = BigInt::from(p);
    let mut out = vec![Vec::new(); rows];
    for (r, c, v) in entries {
        let mut x = v % &bp;
        if x.is_negative() {
            x += &bp;
        }
        let x = x.to_u32().expect("residue below p");
        if x != 0 {
            out[r].push((c as u32, x));
        }
    }
    out
}

/// Distinct prime divisors, ascending. Factors are expected to be small.
pub fn prime_divisors(d: &BigInt) -> Vec<u64> {
    let mut x = d.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= x {
        if (&x % &p).is_zero() {
            out.push(p.to_u64().expect("trial divisor fits in u64"));
            while (&x % &p).is_zero() {
                x /= &p;
            }
        }
        p += 1;
    }
    if x > BigInt::one() {
        out.push(x.to_u64().expect("factor fits in u64"));
    }
    out
}

#[cfg(test)]
mod tests;
