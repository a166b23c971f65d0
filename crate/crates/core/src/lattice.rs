//! Integer row lattices in Hermite normal form.
//!
//! Rows are sparse. Insertion keeps an echelon basis whose pivots are
//! positive; a clash on a pivot column is resolved with the unimodular
//! extended-gcd transformation, so the basis always spans exactly the
//! ℤ-module generated by the inserted rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse integer vector: `(column, value)` pairs, strictly increasing
/// columns, no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseRow(Vec<(usize, BigInt)>);

impl SparseRow {
    pub fn new(mut entries: Vec<(usize, BigInt)>) -> Self {
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseRow(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.0
    }

    fn lead(&self) -> Option<&(usize, BigInt)> {
        self.0.first()
    }

    pub fn get(&self, col: usize) -> BigInt {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .map(|i| self.0[i].1.clone())
            .unwrap_or_default()
    }

    /// `a·self + b·other`.
    fn combine(&self, a: &BigInt, other: &SparseRow, b: &BigInt) -> SparseRow {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ci = self.0.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cj = other.0.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            let (col, v) = if ci < cj {
                i += 1;
                (ci, a * &self.0[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, b * &other.0[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (ci, a * &self.0[i - 1].1 + b * &other.0[j - 1].1)
            };
            if !v.is_zero() {
                out.push((col, v));
            }
        }
        SparseRow(out)
    }

    fn negate(&self) -> SparseRow {
        SparseRow(self.0.iter().map(|(c, v)| (*c, -v)).collect())
    }
}

#[derive(Clone, Debug, Default)]
pub struct IntegerLattice {
    /// Echelon basis keyed by pivot column.
    basis: BTreeMap<usize, SparseRow>,
}

impl IntegerLattice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds a generator; returns true if the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = row;
        loop {
            let Some((col, a)) = row.lead().cloned() else {
                return false;
            };
            let Some(b) = self.basis.get(&col).cloned() else {
                if a.is_negative() {
                    row = row.negate();
                }
                self.basis.insert(col, row);
                return true;
            };
            let p = b.get(col);
            if a.is_multiple_of(&p) {
                row = row.combine(&BigInt::from(1), &b, &-(&a / &p));
                continue;
            }
            // [s t; a/g -p/g] is unimodular and clears column `col` in the
            // second row.
            let e = p.extended_gcd(&a);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let mut new_pivot = b.combine(&s, &row, &t);
            if g.is_negative() {
                new_pivot = new_pivot.negate();
            }
            let rest = b.combine(&(&a / &g), &row, &-(&p / &g));
            self.basis.insert(col, new_pivot);
            row = rest;
        }
    }

    /// Whether `row` is an integer combination of the inserted generators.
    pub fn contains(&self, row: &SparseRow) -> bool {
        let mut row = row.clone();
        loop {
            let Some((col, a)) = row.lead().cloned() else {
                return true;
            };
            let Some(b) = self.basis.get(&col) else {
                return false;
            };
            let p = b.get(col);
            if !a.is_multiple_of(&p) {
                return false;
            }
            row = row.combine(&BigInt::from(1), b, &-(&a / &p));
        }
    }

    /// The reduced Hermite normal form: positive pivots, and every entry
    /// above a pivot reduced into `[0, pivot)`. Rows ordered by pivot column.
    pub fn hermite_normal_form(&self) -> Vec<SparseRow> {
        let mut rows: Vec<(usize, SparseRow)> =
            self.basis.iter().map(|(c, r)| (*c, r.clone())).collect();
        for k in 0..rows.len() {
            let (col, pivot_row) = rows[k].clone();
            let p = pivot_row.get(col);
            for row in rows.iter_mut().take(k) {
                let v = row.1.get(col);
                let q = v.div_floor(&p);
                if !q.is_zero() {
                    row.1 = row.1.combine(&BigInt::from(1), &pivot_row, &-q);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}
