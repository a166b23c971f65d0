//! The free ℤ₂-graded algebra on `y_1, y_2, …` (even) and `z_1, z_2, …` (odd),
//! taken modulo the ideal generated by
//!
//! ```text
//! [y1, y2],    z1 z2 z3 - z3 z2 z1,    y z + z y
//! ```
//!
//! Every word is congruent to `±m` for a unique canonical monomial `m`: all
//! `y` letters first in non-decreasing index order, followed by the `z`
//! letters whose odd slots (1st, 3rd, …) and even slots (2nd, 4th, …) are each
//! sorted. Only `y z = -z y` moves produce a sign; reordering `y`s and sorting
//! within a slot class are sign-free.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    /// `y` letters, degree 0.
    Even,
    /// `z` letters, degree 1.
    Odd,
}

impl Grade {
    pub fn add(self, other: Grade) -> Grade {
        if self == other {
            Grade::Even
        } else {
            Grade::Odd
        }
    }

    fn name(self) -> &'static str {
        match self {
            Grade::Even => "even",
            Grade::Odd => "odd",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedLetter {
    pub grade: Grade,
    pub index: u32,
}

impl GradedLetter {
    pub fn y(index: u32) -> Self {
        assert!(index >= 1, "letter indices start at 1");
        GradedLetter {
            grade: Grade::Even,
            index,
        }
    }

    pub fn z(index: u32) -> Self {
        assert!(index >= 1, "letter indices start at 1");
        GradedLetter {
            grade: Grade::Odd,
            index,
        }
    }

    pub fn is_y(self) -> bool {
        self.grade == Grade::Even
    }
}

impl fmt::Display for GradedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.is_y() { 'y' } else { 'z' };
        write!(f, "{c}{}", self.index)
    }
}

/// A word in the free algebra; the empty word is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedWord(pub Vec<GradedLetter>);

impl GradedWord {
    pub fn one() -> Self {
        GradedWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GradedLetter] {
        &self.0
    }

    pub fn grade(&self) -> Grade {
        if self.0.iter().filter(|l| !l.is_y()).count() % 2 == 0 {
            Grade::Even
        } else {
            Grade::Odd
        }
    }

    pub fn concat(&self, other: &GradedWord) -> GradedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GradedWord(v)
    }
}

impl FromIterator<GradedLetter> for GradedWord {
    fn from_iter<I: IntoIterator<Item = GradedLetter>>(iter: I) -> Self {
        GradedWord(iter.into_iter().collect())
    }
}

impl fmt::Display for GradedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_bigint(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_parity(self != other)
    }
}

/// An element of the canonical basis.
///
/// `yexp[i]` is the exponent of `y_{i+1}`; `cseq` holds the (sorted) indices
/// of the `z` letters in odd slots and `dseq` those in even slots, so the
/// monomial reads `y… z_{c1} z_{d1} z_{c2} z_{d2} …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MonomialRepr", into = "MonomialRepr")]
pub struct CanonicalMonomial {
    yexp: Vec<u32>,
    cseq: Vec<u32>,
    dseq: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    y: Vec<u32>,
    c: Vec<u32>,
    d: Vec<u32>,
}

impl TryFrom<MonomialRepr> for CanonicalMonomial {
    type Error = Error;

    fn try_from(r: MonomialRepr) -> Result<Self> {
        CanonicalMonomial::new(r.y, r.c, r.d)
    }
}

impl From<CanonicalMonomial> for MonomialRepr {
    fn from(m: CanonicalMonomial) -> Self {
        MonomialRepr {
            y: m.yexp,
            c: m.cseq,
            d: m.dseq,
        }
    }
}

fn is_sorted(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn trim_zeros(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl CanonicalMonomial {
    /// Validating constructor. Trailing zero exponents are trimmed.
    pub fn new(mut yexp: Vec<u32>, cseq: Vec<u32>, dseq: Vec<u32>) -> Result<Self> {
        trim_zeros(&mut yexp);
        if cseq.iter().chain(&dseq).any(|&i| i == 0) {
            return Err(Error::InvalidMonomial("z indices start at 1".into()));
        }
        if !is_sorted(&cseq) || !is_sorted(&dseq) {
            return Err(Error::InvalidMonomial(
                "slot index sequences must be non-decreasing".into(),
            ));
        }
        if dseq.len() != cseq.len() && dseq.len() + 1 != cseq.len() {
            return Err(Error::InvalidMonomial(format!(
                "slot lengths {} and {} are incompatible",
                cseq.len(),
                dseq.len()
            )));
        }
        Ok(CanonicalMonomial { yexp, cseq, dseq })
    }

    pub(crate) fn from_parts_unchecked(yexp: Vec<u32>, cseq: Vec<u32>, dseq: Vec<u32>) -> Self {
        debug_assert!(is_sorted(&cseq) && is_sorted(&dseq));
        debug_assert!(dseq.len() == cseq.len() || dseq.len() + 1 == cseq.len());
        debug_assert!(yexp.last() != Some(&0));
        CanonicalMonomial { yexp, cseq, dseq }
    }

    pub fn one() -> Self {
        CanonicalMonomial::default()
    }

    pub fn y(index: u32) -> Self {
        Self::y_power(index, 1)
    }

    pub fn y_power(index: u32, exp: u32) -> Self {
        assert!(index >= 1);
        let mut yexp = vec![0; index as usize];
        yexp[index as usize - 1] = exp;
        trim_zeros(&mut yexp);
        CanonicalMonomial {
            yexp,
            ..Default::default()
        }
    }

    pub fn from_y_exponents(mut yexp: Vec<u32>) -> Self {
        trim_zeros(&mut yexp);
        CanonicalMonomial {
            yexp,
            ..Default::default()
        }
    }

    pub fn yexp(&self) -> &[u32] {
        &self.yexp
    }

    pub fn cseq(&self) -> &[u32] {
        &self.cseq
    }

    pub fn dseq(&self) -> &[u32] {
        &self.dseq
    }

    pub fn y_degree(&self) -> u32 {
        self.yexp.iter().sum()
    }

    pub fn z_len(&self) -> usize {
        self.cseq.len() + self.dseq.len()
    }

    pub fn degree(&self) -> u32 {
        self.y_degree() + self.z_len() as u32
    }

    pub fn grade(&self) -> Grade {
        if self.z_len() % 2 == 0 {
            Grade::Even
        } else {
            Grade::Odd
        }
    }

    /// Member of the pure-`y` part of the basis.
    pub fn is_pure_y(&self) -> bool {
        self.cseq.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.yexp.is_empty() && self.cseq.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        let y = self.yexp.len() as u32;
        let c = self.cseq.last().copied().unwrap_or(0);
        let d = self.dseq.last().copied().unwrap_or(0);
        y.max(c).max(d)
    }

    /// The `y` part alone.
    pub fn y_part(&self) -> CanonicalMonomial {
        CanonicalMonomial::from_y_exponents(self.yexp.clone())
    }

    /// The `z` part in slot order `z_{c1} z_{d1} z_{c2} …`.
    pub fn z_indices(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.z_len());
        for (k, &c) in self.cseq.iter().enumerate() {
            out.push(c);
            if let Some(&d) = self.dseq.get(k) {
                out.push(d);
            }
        }
        out
    }

    pub fn to_word(&self) -> GradedWord {
        let mut letters = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.yexp.iter().enumerate() {
            for _ in 0..e {
                letters.push(GradedLetter::y(i as u32 + 1));
            }
        }
        letters.extend(self.z_indices().into_iter().map(GradedLetter::z));
        GradedWord(letters)
    }

    /// Product in the quotient algebra: `self · other = sign · result`.
    ///
    /// The `y` letters of `other` travel left across the `z` letters of
    /// `self`; the `z` letters of `other` land in slots determined by the
    /// parity of `self`'s `z` length.
    pub fn mul(&self, other: &CanonicalMonomial) -> (Sign, CanonicalMonomial) {
        let crossings = self.z_len() as u64 * other.y_degree() as u64;
        let sign = Sign::from_parity(crossings % 2 == 1);

        let n = self.yexp.len().max(other.yexp.len());
        let yexp: Vec<u32> = (0..n)
            .map(|i| self.yexp.get(i).unwrap_or(&0) + other.yexp.get(i).unwrap_or(&0))
            .collect();

        let (to_c, to_d) = if self.z_len() % 2 == 0 {
            (&other.cseq, &other.dseq)
        } else {
            (&other.dseq, &other.cseq)
        };
        let cseq = merge_sorted(&self.cseq, to_c);
        let dseq = merge_sorted(&self.dseq, to_d);
        (sign, CanonicalMonomial::from_parts_unchecked(yexp, cseq, dseq))
    }

    /// Appends the `z` letters of `word` on the right (no sign arises).
    pub fn append_z(&self, z_indices: &[u32]) -> CanonicalMonomial {
        let mut cseq = self.cseq.clone();
        let mut dseq = self.dseq.clone();
        let mut len = self.z_len();
        for &i in z_indices {
            if len % 2 == 0 {
                cseq.push(i);
            } else {
                dseq.push(i);
            }
            len += 1;
        }
        cseq.sort_unstable();
        dseq.sort_unstable();
        CanonicalMonomial::from_parts_unchecked(self.yexp.clone(), cseq, dseq)
    }

    pub fn map_indices(&self, fy: impl Fn(u32) -> u32, fz: impl Fn(u32) -> u32) -> Self {
        let mut yexp = Vec::new();
        for (i, &e) in self.yexp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = fy(i as u32 + 1) as usize;
            if yexp.len() < j {
                yexp.resize(j, 0);
            }
            yexp[j - 1] += e;
        }
        let mut cseq: Vec<u32> = self.cseq.iter().map(|&i| fz(i)).collect();
        let mut dseq: Vec<u32> = self.dseq.iter().map(|&i| fz(i)).collect();
        cseq.sort_unstable();
        dseq.sort_unstable();
        trim_zeros(&mut yexp);
        CanonicalMonomial::from_parts_unchecked(yexp, cseq, dseq)
    }
}

fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Display for CanonicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            Ok(())
        };
        for (i, &e) in self.yexp.iter().enumerate() {
            match e {
                0 => {}
                1 => {
                    sep(f)?;
                    write!(f, "y{}", i + 1)?;
                }
                _ => {
                    sep(f)?;
                    write!(f, "y{}^{}", i + 1, e)?;
                }
            }
        }
        for z in self.z_indices() {
            sep(f)?;
            write!(f, "z{z}")?;
        }
        Ok(())
    }
}

/// Rewrites a word to `sign · m` with `m` canonical.
pub fn reduce_word(w: &GradedWord) -> (Sign, CanonicalMonomial) {
    let mut yexp: Vec<u32> = Vec::new();
    let mut zs: Vec<u32> = Vec::new();
    let mut inversions: u64 = 0;
    for l in w.letters() {
        if l.is_y() {
            inversions += zs.len() as u64;
            let i = l.index as usize;
            if yexp.len() < i {
                yexp.resize(i, 0);
            }
            yexp[i - 1] += 1;
        } else {
            zs.push(l.index);
        }
    }
    let mut cseq: Vec<u32> = zs.iter().step_by(2).copied().collect();
    let mut dseq: Vec<u32> = zs.iter().skip(1).step_by(2).copied().collect();
    cseq.sort_unstable();
    dseq.sort_unstable();
    (
        Sign::from_parity(inversions % 2 == 1),
        CanonicalMonomial::from_parts_unchecked(yexp, cseq, dseq),
    )
}

/// Finite integer combination of canonical monomials.
///
/// Terms are kept in the total well-order of the basis, so the last entry is
/// always the leading term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuotientPolynomial {
    terms: BTreeMap<CanonicalMonomial, BigInt>,
}

impl QuotientPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), CanonicalMonomial::one())
    }

    pub fn monomial(c: BigInt, m: CanonicalMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, CanonicalMonomial)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&CanonicalMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &CanonicalMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Highest term under the basis well-order.
    pub fn leading_term(&self) -> Option<(&CanonicalMonomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(|m| m.max_index()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: CanonicalMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuotientPolynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Applies a function to every monomial; `f` must be injective on the
    /// support for the result to keep the term count.
    pub fn map_monomials(&self, f: impl Fn(&CanonicalMonomial) -> (Sign, CanonicalMonomial)) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (s, m2) = f(m);
            out.add_term(m2, c * s.to_bigint());
        }
        out
    }

    pub fn word_terms(&self) -> Vec<(BigInt, GradedWord)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.clone(), m.to_word()))
            .collect()
    }
}

impl From<CanonicalMonomial> for QuotientPolynomial {
    fn from(m: CanonicalMonomial) -> Self {
        QuotientPolynomial::monomial(BigInt::one(), m)
    }
}

impl Add for &QuotientPolynomial {
    type Output = QuotientPolynomial;

    fn add(self, rhs: &QuotientPolynomial) -> QuotientPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QuotientPolynomial {
    type Output = QuotientPolynomial;

    fn sub(self, rhs: &QuotientPolynomial) -> QuotientPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &QuotientPolynomial {
    type Output = QuotientPolynomial;

    fn neg(self) -> QuotientPolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &QuotientPolynomial {
    type Output = QuotientPolynomial;

    fn mul(self, rhs: &QuotientPolynomial) -> QuotientPolynomial {
        q_mul(self, rhs)
    }
}

impl fmt::Display for QuotientPolynomial {
    /// Terms in descending order, each preceded by its sign: `+ 2*y1*z1 - z1*z2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            if m.is_one() {
                write!(f, "{sign} {a}")?;
            } else if a.is_one() {
                write!(f, "{sign} {m}")?;
            } else {
                write!(f, "{sign} {a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    m: CanonicalMonomial,
}

impl Serialize for QuotientPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr {
                coeff: c.to_string(),
                m: m.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuotientPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        let mut p = QuotientPolynomial::zero();
        for t in v {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(t.m, c);
        }
        Ok(p)
    }
}

/// A polynomial of the free algebra itself, before reduction modulo the ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreePolynomial {
    terms: BTreeMap<GradedWord, BigInt>,
}

impl FreePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: GradedWord) -> Self {
        Self::from_terms([(BigInt::one(), w)])
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, GradedWord)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, w) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GradedWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn to_terms(&self) -> Vec<(BigInt, GradedWord)> {
        self.terms.iter().map(|(w, c)| (c.clone(), w.clone())).collect()
    }

    pub fn add_term(&mut self, w: GradedWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, k)| (k * c, w.clone())))
    }

    pub fn normalize(&self) -> QuotientPolynomial {
        let mut out = QuotientPolynomial::zero();
        for (w, c) in &self.terms {
            let (s, m) = reduce_word(w);
            out.add_term(m, c * s.to_bigint());
        }
        out
    }
}

impl Add for &FreePolynomial {
    type Output = FreePolynomial;

    fn add(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreePolynomial {
    type Output = FreePolynomial;

    fn sub(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &FreePolynomial {
    type Output = FreePolynomial;

    fn mul(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = FreePolynomial::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

/// Sign-adjusted sum of canonical forms with like terms merged.
pub fn normalize(ws: &[(BigInt, GradedWord)]) -> QuotientPolynomial {
    let mut out = QuotientPolynomial::zero();
    for (c, w) in ws {
        let (s, m) = reduce_word(w);
        out.add_term(m, c * s.to_bigint());
    }
    out
}

pub fn q_mul(f: &QuotientPolynomial, g: &QuotientPolynomial) -> QuotientPolynomial {
    let mut out = QuotientPolynomial::zero();
    for (ma, ca) in f.terms() {
        for (mb, cb) in g.terms() {
            let (s, m) = ma.mul(mb);
            out.add_term(m, ca * cb * s.to_bigint());
        }
    }
    out
}

pub fn commutator(f: &QuotientPolynomial, g: &QuotientPolynomial) -> QuotientPolynomial {
    &q_mul(f, g) - &q_mul(g, f)
}

/// A Lie word: letters combined by commutator brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedLieExpr {
    Leaf(GradedLetter),
    Bracket(Box<GradedLieExpr>, Box<GradedLieExpr>),
}

impl GradedLieExpr {
    pub fn leaf(l: GradedLetter) -> Self {
        GradedLieExpr::Leaf(l)
    }

    pub fn bracket(a: GradedLieExpr, b: GradedLieExpr) -> Self {
        GradedLieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn grade(&self) -> Grade {
        match self {
            GradedLieExpr::Leaf(l) => l.grade,
            GradedLieExpr::Bracket(a, b) => a.grade().add(b.grade()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            GradedLieExpr::Leaf(_) => 0,
            GradedLieExpr::Bracket(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Bracket expansion in the free algebra, without reduction.
    pub fn to_free(&self) -> FreePolynomial {
        match self {
            GradedLieExpr::Leaf(l) => FreePolynomial::word(GradedWord(vec![*l])),
            GradedLieExpr::Bracket(a, b) => {
                let (fa, fb) = (a.to_free(), b.to_free());
                &(&fa * &fb) - &(&fb * &fa)
            }
        }
    }
}

impl fmt::Display for GradedLieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedLieExpr::Leaf(l) => write!(f, "{l}"),
            GradedLieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

pub fn lie_to_poly(e: &GradedLieExpr) -> QuotientPolynomial {
    match e {
        GradedLieExpr::Leaf(l) => reduce_word(&GradedWord(vec![*l])).1.into(),
        GradedLieExpr::Bracket(a, b) => commutator(&lie_to_poly(a), &lie_to_poly(b)),
    }
}

/// A grade-preserving assignment of Lie expressions to letters. Letters
/// without an entry are left unchanged.
pub type Substitution = BTreeMap<GradedLetter, GradedLieExpr>;

fn check_grades(sigma: &Substitution) -> Result<()> {
    for (l, e) in sigma {
        if e.grade() != l.grade {
            return Err(Error::GradeMismatch {
                letter: l.to_string(),
                expected: l.grade.name(),
            });
        }
    }
    Ok(())
}

/// `f(σ(x_1), σ(x_2), …)` reduced to canonical form.
pub fn subst(f: &[(BigInt, GradedWord)], sigma: &Substitution) -> Result<QuotientPolynomial> {
    check_grades(sigma)?;
    let images: BTreeMap<GradedLetter, QuotientPolynomial> =
        sigma.iter().map(|(l, e)| (*l, lie_to_poly(e))).collect();
    let mut out = QuotientPolynomial::zero();
    for (c, w) in f {
        let mut acc = QuotientPolynomial::monomial(c.clone(), CanonicalMonomial::one());
        for l in w.letters() {
            let img = match images.get(l) {
                Some(p) => p.clone(),
                None => reduce_word(&GradedWord(vec![*l])).1.into(),
            };
            acc = q_mul(&acc, &img);
            if acc.is_zero() {
                break;
            }
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// The same substitution carried out in the free algebra, without reduction.
pub fn subst_free(f: &[(BigInt, GradedWord)], sigma: &Substitution) -> Result<FreePolynomial> {
    check_grades(sigma)?;
    let mut out = FreePolynomial::zero();
    for (c, w) in f {
        let mut acc = FreePolynomial::from_terms([(c.clone(), GradedWord::one())]);
        for l in w.letters() {
            let img = match sigma.get(l) {
                Some(e) => e.to_free(),
                None => FreePolynomial::word(GradedWord(vec![*l])),
            };
            acc = &acc * &img;
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// The three defining relations, as free-algebra polynomials.
pub fn defining_relations() -> [FreePolynomial; 3] {
    let y = GradedLetter::y;
    let z = GradedLetter::z;
    let w = |ls: &[GradedLetter]| GradedWord(ls.to_vec());
    let one = BigInt::one;
    [
        FreePolynomial::from_terms([(one(), w(&[y(1), y(2)])), (-one(), w(&[y(2), y(1)]))]),
        FreePolynomial::from_terms([
            (one(), w(&[z(1), z(2), z(3)])),
            (-one(), w(&[z(3), z(2), z(1)])),
        ]),
        FreePolynomial::from_terms([(one(), w(&[y(1), z(1)])), (one(), w(&[z(1), y(1)]))]),
    ]
}
