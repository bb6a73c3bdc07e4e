//! Sparse row elimination on unit pivots.
//!
//! Rows are sorted `(column, value)` lists. The pivot row is always the
//! shortest active row holding a unit, found through a lazy min-heap keyed
//! by row length; within it the unit whose column is least populated is
//! taken. Eliminating a unit pivot changes neither the rank nor the
//! nonunit invariant factors, so the pivot row and column can be dropped.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{dense, SmithForm};

#[derive(Clone, Debug)]
pub(crate) struct SparseRows<T> {
    pub cols: usize,
    pub rows: Vec<Vec<(u32, T)>>,
}

/// Coefficient arithmetic needed by the eliminator.
pub(crate) trait Coeff {
    type T: Clone;
    fn zero(&self) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn is_unit(&self, a: &Self::T) -> bool;
    /// `a / u` for a unit `u`.
    fn div_unit(&self, a: &Self::T, u: &Self::T) -> Self::T;
    /// `a - f * b`, or `None` on overflow.
    fn sub_mul(&self, a: &Self::T, f: &Self::T, b: &Self::T) -> Option<Self::T>;
}

pub(crate) struct I64Ring;

pub(crate) struct BigRing;

pub(crate) struct ModP(pub u32);

impl Coeff for I64Ring {
    type T = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i64) -> bool {
        a.abs() == 1
    }
    fn div_unit(&self, a: &i64, u: &i64) -> i64 {
        a * u
    }
    fn sub_mul(&self, a: &i64, f: &i64, b: &i64) -> Option<i64> {
        a.checked_sub(f.checked_mul(*b)?)
    }
}

impl Coeff for BigRing {
    type T = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn div_unit(&self, a: &BigInt, u: &BigInt) -> BigInt {
        a * u
    }
    fn sub_mul(&self, a: &BigInt, f: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a - f * b)
    }
}

impl ModP {
    fn inv(&self, a: u32) -> u32 {
        // Fermat; p is prime.
        let p = self.0 as u64;
        let (mut base, mut e, mut acc) = (a as u64 % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Coeff for ModP {
    type T = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u32) -> bool {
        *a != 0
    }
    fn div_unit(&self, a: &u32, u: &u32) -> u32 {
        (*a as u64 * self.inv(*u) as u64 % self.0 as u64) as u32
    }
    fn sub_mul(&self, a: &u32, f: &u32, b: &u32) -> Option<u32> {
        let p = self.0 as u64;
        let fb = *f as u64 * *b as u64 % p;
        Some(((*a as u64 + p - fb) % p) as u32)
    }
}

/// Outcome of unit-pivot elimination: the number of pivots and the rows
/// that could not be reduced further.
pub(crate) struct Eliminated<T> {
    pub pivots: usize,
    pub residual: Vec<Vec<(u32, T)>>,
}

/// Runs unit-pivot elimination; `None` if the ring arithmetic overflowed.
pub(crate) fn eliminate<R: Coeff>(ring: &R, cols: usize, rows: Vec<Vec<(u32, R::T)>>) -> Option<Eliminated<R::T>> {
    let mut rows: Vec<Vec<(u32, R::T)>> =
        rows.into_iter().map(|r| r.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect()).collect();
    let mut active = vec![true; rows.len()];
    let mut version = vec![0u32; rows.len()];
    // Column -> rows that may hold an entry there (stale entries allowed).
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(r as u32);
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, u32, u32)>> = rows
        .iter()
        .enumerate()
        .filter(|(_, row)| !row.is_empty())
        .map(|(r, row)| Reverse((row.len(), r as u32, 0)))
        .collect();
    let mut pivots = 0usize;
    while let Some(Reverse((_, r, ver))) = heap.pop() {
        let r = r as usize;
        if !active[r] || version[r] != ver {
            continue;
        }
        if rows[r].is_empty() {
            active[r] = false;
            continue;
        }
        let Some(&(pc, ref pv)) = rows[r]
            .iter()
            .filter(|(_, v)| ring.is_unit(v))
            .min_by_key(|(c, _)| (col_rows[*c as usize].len(), *c))
        else {
            // Stays in the residual unless a later update gives it a unit.
            continue;
        };
        let pv = pv.clone();
        let pivot_row = std::mem::take(&mut rows[r]);
        active[r] = false;
        pivots += 1;
        let hits = std::mem::take(&mut col_rows[pc as usize]);
        for s in hits {
            let s = s as usize;
            if !active[s] {
                continue;
            }
            let Ok(pos) = rows[s].binary_search_by_key(&pc, |e| e.0) else {
                continue;
            };
            let f = ring.div_unit(&rows[s][pos].1, &pv);
            let merged = axpy(ring, &rows[s], &f, &pivot_row)?;
            for (c, _) in &merged {
                if rows[s].binary_search_by_key(c, |e| e.0).is_err() {
                    col_rows[*c as usize].push(s as u32);
                }
            }
            rows[s] = merged;
            version[s] += 1;
            heap.push(Reverse((rows[s].len(), s as u32, version[s])));
        }
    }
    let residual = rows.into_iter().zip(active).filter(|(row, a)| *a && !row.is_empty()).map(|(row, _)| row).collect();
    Some(Eliminated { pivots, residual })
}

/// `a - f * b` on sorted sparse rows.
fn axpy<R: Coeff>(ring: &R, a: &[(u32, R::T)], f: &R::T, b: &[(u32, R::T)]) -> Option<Vec<(u32, R::T)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(u32::MAX, |e| e.0);
        let cb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else {
            let base = if ca == cb {
                i += 1;
                a[i - 1].1.clone()
            } else {
                ring.zero()
            };
            let v = ring.sub_mul(&base, f, &b[j].1)?;
            if !ring.is_zero(&v) {
                out.push((cb, v));
            }
            j += 1;
        }
    }
    Some(out)
}

impl SparseRows<i64> {
    pub fn smith(&self) -> SmithForm {
        match eliminate(&I64Ring, self.cols, self.rows.clone()) {
            Some(e) => finish_smith(e.pivots, widen(e.residual), self.cols),
            None => self.widened().smith(),
        }
    }

    pub fn rank_rational(&self) -> usize {
        match eliminate(&I64Ring, self.cols, self.rows.clone()) {
            Some(e) => e.pivots + dense::bareiss_rank_rows(&widen(e.residual), self.cols),
            None => self.widened().rank_rational(),
        }
    }

    pub fn rank_mod(&self, p: u32) -> usize {
        let pp = p as i64;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v.rem_euclid(pp) as u32)).collect())
            .collect();
        SparseRows { cols: self.cols, rows }.rank_mod_p(p)
    }

    fn widened(&self) -> SparseRows<BigInt> {
        SparseRows { cols: self.cols, rows: widen(self.rows.clone()) }
    }
}

fn widen(rows: Vec<Vec<(u32, i64)>>) -> Vec<Vec<(u32, BigInt)>> {
    rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect()
}

impl SparseRows<BigInt> {
    pub fn smith(&self) -> SmithForm {
        let e = eliminate(&BigRing, self.cols, self.rows.clone()).expect("big integers do not overflow");
        finish_smith(e.pivots, e.residual, self.cols)
    }

    pub fn rank_rational(&self) -> usize {
        let e = eliminate(&BigRing, self.cols, self.rows.clone()).expect("big integers do not overflow");
        e.pivots + dense::bareiss_rank_rows(&e.residual, self.cols)
    }
}

impl SparseRows<u32> {
    pub fn rank_mod_p(&self, p: u32) -> usize {
        eliminate(&ModP(p), self.cols, self.rows.clone()).expect("modular arithmetic does not overflow").pivots
    }
}

fn finish_smith(pivots: usize, residual: Vec<Vec<(u32, BigInt)>>, cols: usize) -> SmithForm {
    let tail = dense::smith_rows(&residual, cols);
    let mut invariant_factors = vec![BigInt::one(); pivots];
    invariant_factors.extend(tail);
    SmithForm { rank: invariant_factors.len(), invariant_factors }
}
