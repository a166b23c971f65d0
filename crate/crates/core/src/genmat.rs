//! Generic 2×2 matrices over `ℤ[α_i, β_i, γ_i]`.
//!
//! `y_i ↦ Y_i = diag(α_i, -α_i)` and `z_i ↦ Z_i = offdiag(β_i, γ_i)` extend to
//! a graded homomorphism whose kernel is exactly the ideal of graded weak
//! identities of `(M₂, sl₂)`, so a polynomial is an identity iff its image
//! is the zero matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{
    CanonicalMonomial, FreePolynomial, GradedLetter, GradedWord, QuotientPolynomial,
};
use crate::lattice::{IntegerLattice, SparseRow};
use crate::ring::{IndexedVar, MultiPoly, PowerProduct};
use crate::stream::{canonical_monomial_count, canonical_monomials};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GMatrix2 {
    pub e11: MultiPoly,
    pub e12: MultiPoly,
    pub e21: MultiPoly,
    pub e22: MultiPoly,
}

impl GMatrix2 {
    pub fn new(e11: MultiPoly, e12: MultiPoly, e21: MultiPoly, e22: MultiPoly) -> Self {
        GMatrix2 { e11, e12, e21, e22 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::diag(MultiPoly::one(), MultiPoly::one())
    }

    pub fn diag(a: MultiPoly, d: MultiPoly) -> Self {
        Self::new(a, MultiPoly::zero(), MultiPoly::zero(), d)
    }

    pub fn off_diag(b: MultiPoly, c: MultiPoly) -> Self {
        Self::new(MultiPoly::zero(), b, c, MultiPoly::zero())
    }

    pub fn entries(&self) -> [&MultiPoly; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.e12.is_zero() && self.e21.is_zero()
    }

    pub fn is_off_diagonal(&self) -> bool {
        self.e11.is_zero() && self.e22.is_zero()
    }

    pub fn trace(&self) -> MultiPoly {
        &self.e11 + &self.e22
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(
            self.e11.scale(c),
            self.e12.scale(c),
            self.e21.scale(c),
            self.e22.scale(c),
        )
    }
}

impl Add for &GMatrix2 {
    type Output = GMatrix2;

    fn add(self, r: &GMatrix2) -> GMatrix2 {
        GMatrix2::new(
            &self.e11 + &r.e11,
            &self.e12 + &r.e12,
            &self.e21 + &r.e21,
            &self.e22 + &r.e22,
        )
    }
}

impl Sub for &GMatrix2 {
    type Output = GMatrix2;

    fn sub(self, r: &GMatrix2) -> GMatrix2 {
        GMatrix2::new(
            &self.e11 - &r.e11,
            &self.e12 - &r.e12,
            &self.e21 - &r.e21,
            &self.e22 - &r.e22,
        )
    }
}

impl Mul for &GMatrix2 {
    type Output = GMatrix2;

    fn mul(self, r: &GMatrix2) -> GMatrix2 {
        GMatrix2::new(
            &(&self.e11 * &r.e11) + &(&self.e12 * &r.e21),
            &(&self.e11 * &r.e12) + &(&self.e12 * &r.e22),
            &(&self.e21 * &r.e11) + &(&self.e22 * &r.e21),
            &(&self.e21 * &r.e12) + &(&self.e22 * &r.e22),
        )
    }
}

impl fmt::Display for GMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

pub fn generic_y(i: u32) -> GMatrix2 {
    let a = MultiPoly::var(IndexedVar::alpha(i));
    GMatrix2::diag(a.clone(), -a)
}

pub fn generic_z(i: u32) -> GMatrix2 {
    GMatrix2::off_diag(
        MultiPoly::var(IndexedVar::beta(i)),
        MultiPoly::var(IndexedVar::gamma(i)),
    )
}

/// Image under `y_i ↦ Y_i`, `z_i ↦ Z_i`.
pub trait GenericEval {
    fn evaluate(&self) -> GMatrix2;
}

impl GenericEval for GradedLetter {
    fn evaluate(&self) -> GMatrix2 {
        if self.is_y() {
            generic_y(self.index)
        } else {
            generic_z(self.index)
        }
    }
}

impl GenericEval for GradedWord {
    fn evaluate(&self) -> GMatrix2 {
        self.letters()
            .iter()
            .fold(GMatrix2::identity(), |acc, l| &acc * &l.evaluate())
    }
}

impl GenericEval for CanonicalMonomial {
    fn evaluate(&self) -> GMatrix2 {
        self.to_word().evaluate()
    }
}

impl GenericEval for QuotientPolynomial {
    fn evaluate(&self) -> GMatrix2 {
        self.terms().fold(GMatrix2::zero(), |acc, (m, c)| {
            &acc + &m.evaluate().scale(c)
        })
    }
}

impl GenericEval for FreePolynomial {
    fn evaluate(&self) -> GMatrix2 {
        self.terms().fold(GMatrix2::zero(), |acc, (w, c)| {
            &acc + &w.evaluate().scale(c)
        })
    }
}

impl GenericEval for [(BigInt, GradedWord)] {
    fn evaluate(&self) -> GMatrix2 {
        self.iter().fold(GMatrix2::zero(), |acc, (c, w)| {
            &acc + &w.evaluate().scale(c)
        })
    }
}

pub fn evaluate<T: GenericEval + ?Sized>(f: &T) -> GMatrix2 {
    f.evaluate()
}

pub fn is_graded_weak_identity<T: GenericEval + ?Sized>(f: &T) -> bool {
    f.evaluate().is_zero()
}

pub const DEFAULT_DEGREE: u32 = 6;
pub const DEFAULT_INDICES: u32 = 3;
pub const DEFAULT_MONOMIAL_CAP: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub degree: u32,
    pub indices: u32,
    pub monomials: usize,
    pub rank: usize,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.rank == self.monomials
    }
}

impl fmt::Display for IndependenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree <= {}, indices <= {}: {} monomials, rank {} ({})",
            self.degree,
            self.indices,
            self.monomials,
            self.rank,
            if self.independent() {
                "independent"
            } else {
                "DEPENDENT"
            }
        )
    }
}

/// Flattens evaluations into integer rows over a shared column index of
/// `(matrix entry, power product)`.
pub fn evaluation_rows(images: &[GMatrix2]) -> Vec<SparseRow> {
    let mut columns: BTreeMap<(usize, PowerProduct), usize> = BTreeMap::new();
    for g in images {
        for (k, e) in g.entries().iter().enumerate() {
            for (pp, _) in e.terms() {
                columns.entry((k, pp.clone())).or_insert(0);
            }
        }
    }
    for (n, v) in columns.values_mut().enumerate() {
        *v = n;
    }
    images
        .iter()
        .map(|g| {
            let mut entries = Vec::new();
            for (k, e) in g.entries().iter().enumerate() {
                for (pp, c) in e.terms() {
                    entries.push((columns[&(k, pp.clone())], c.clone()));
                }
            }
            SparseRow::new(entries)
        })
        .collect()
}

/// Certifies (by integer Hermite reduction) that the generic evaluations of
/// all canonical monomials in the given degree/index box are ℤ-independent.
pub fn independence_report(degree: u32, indices: u32, cap: usize) -> Result<IndependenceReport> {
    let count = canonical_monomial_count(degree, indices);
    if count > cap as u128 {
        return Err(Error::ResourceBound {
            what: format!("{count} monomials (degree {degree}, indices {indices})"),
            cap,
        });
    }
    let monomials = canonical_monomials(degree, indices);
    let images: Vec<GMatrix2> = monomials.iter().map(|m| m.evaluate()).collect();
    let mut lattice = IntegerLattice::new();
    for row in evaluation_rows(&images) {
        lattice.insert(row);
    }
    Ok(IndependenceReport {
        degree,
        indices,
        monomials: monomials.len(),
        rank: lattice.rank(),
    })
}
