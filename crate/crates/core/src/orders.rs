//! Order theory on the canonical basis.
//!
//! Each canonical monomial corresponds to a [`Profile`]: the multiplicity
//! vector of its `y` indices (pure-`y` monomials), or that vector together
//! with the multiplicity vectors of its odd-slot and even-slot `z` indices.
//! Two orders live on profiles:
//!
//! * a linear well-order (`Ord` on [`Profile`] and on [`CanonicalMonomial`]),
//!   used to pick leading terms;
//! * a partial well-order `≤′` given by subsequence domination with a shared
//!   monotone reindexing ([`pwo_leq`]), used to decide which generators can
//!   be lifted onto a given monomial.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{CanonicalMonomial, QuotientPolynomial, Sign};

/// Component sum of a count sequence.
pub fn weight(u: &[u32]) -> u32 {
    u.iter().sum()
}

/// Right-lexicographic comparison of zero-padded sequences: the highest
/// position at which they differ decides.
pub fn cmp_right_lex(u: &[u32], v: &[u32]) -> Ordering {
    let n = u.len().max(v.len());
    for k in (0..n).rev() {
        let a = u.get(k).copied().unwrap_or(0);
        let b = v.get(k).copied().unwrap_or(0);
        match a.cmp(&b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Order on pairs of sequences: total weight, then the second sequence,
/// then the first.
pub fn cmp_pair(u: (&[u32], &[u32]), v: (&[u32], &[u32])) -> Ordering {
    (weight(u.0) + weight(u.1))
        .cmp(&(weight(v.0) + weight(v.1)))
        .then_with(|| cmp_right_lex(u.1, v.1))
        .then_with(|| cmp_right_lex(u.0, v.0))
}

fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn counts(indices: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for &i in indices {
        let i = i as usize;
        if out.len() < i {
            out.resize(i, 0);
        }
        out[i - 1] += 1;
    }
    out
}

fn expand(counts: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            out.push(i as u32 + 1);
        }
    }
    out
}

/// The multiplicity image of a canonical monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub enum Profile {
    V1 { u1: Vec<u32> },
    V2 { u1: Vec<u32>, u2: Vec<u32>, u3: Vec<u32> },
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    v: u8,
    u1: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u2: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u3: Option<Vec<u32>>,
}

impl TryFrom<ProfileRepr> for Profile {
    type Error = Error;

    fn try_from(r: ProfileRepr) -> Result<Self> {
        match (r.v, r.u2, r.u3) {
            (1, None, None) => Ok(Profile::v1(r.u1)),
            (2, Some(u2), Some(u3)) => Profile::v2(r.u1, u2, u3),
            _ => Err(Error::InvalidProfile(
                "expected v = 1 with u1, or v = 2 with u1, u2 and u3".into(),
            )),
        }
    }
}

impl From<Profile> for ProfileRepr {
    fn from(p: Profile) -> Self {
        match p {
            Profile::V1 { u1 } => ProfileRepr {
                v: 1,
                u1,
                u2: None,
                u3: None,
            },
            Profile::V2 { u1, u2, u3 } => ProfileRepr {
                v: 2,
                u1,
                u2: Some(u2),
                u3: Some(u3),
            },
        }
    }
}

impl Profile {
    pub fn v1(u1: Vec<u32>) -> Profile {
        Profile::V1 { u1: trimmed(u1) }
    }

    pub fn v2(u1: Vec<u32>, u2: Vec<u32>, u3: Vec<u32>) -> Result<Profile> {
        let (w2, w3) = (weight(&u2), weight(&u3));
        if w2 == 0 {
            return Err(Error::InvalidProfile("u2 must have positive weight".into()));
        }
        if w2 != w3 && w2 != w3 + 1 {
            return Err(Error::InvalidProfile(format!(
                "weights of u2 ({w2}) and u3 ({w3}) must differ by 0 or 1"
            )));
        }
        Ok(Profile::V2 {
            u1: trimmed(u1),
            u2: trimmed(u2),
            u3: trimmed(u3),
        })
    }

    pub fn variant(&self) -> u8 {
        match self {
            Profile::V1 { .. } => 1,
            Profile::V2 { .. } => 2,
        }
    }

    /// Number of positions carrying data (after trimming).
    pub fn support(&self) -> usize {
        match self {
            Profile::V1 { u1 } => u1.len(),
            Profile::V2 { u1, u2, u3 } => u1.len().max(u2.len()).max(u3.len()),
        }
    }

    /// The profile as a sequence of position tuples (1 or 3 components each).
    pub fn positions(&self) -> Vec<Vec<u32>> {
        let at = |v: &[u32], k: usize| v.get(k).copied().unwrap_or(0);
        match self {
            Profile::V1 { u1 } => u1.iter().map(|&a| vec![a]).collect(),
            Profile::V2 { u1, u2, u3 } => (0..self.support())
                .map(|k| vec![at(u1, k), at(u2, k), at(u3, k)])
                .collect(),
        }
    }

    /// The profile's image under a reindexing `φ`, restricted by `mode`.
    pub fn rename(&self, phi: &MonotoneInjection, mode: RenameMode) -> Profile {
        let (ys, zs) = (mode.renames_y(), mode.renames_z());
        let push = |u: &[u32], on: bool| if on { phi.push_forward(u) } else { u.to_vec() };
        match self {
            Profile::V1 { u1 } => Profile::v1(push(u1, ys)),
            Profile::V2 { u1, u2, u3 } => Profile::V2 {
                u1: push(u1, ys),
                u2: push(u2, zs),
                u3: push(u3, zs),
            },
        }
    }
}

impl Ord for Profile {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Profile::V1 { u1: a }, Profile::V1 { u1: b }) => cmp_right_lex(a, b),
            (Profile::V1 { .. }, Profile::V2 { .. }) => Ordering::Less,
            (Profile::V2 { .. }, Profile::V1 { .. }) => Ordering::Greater,
            (
                Profile::V2 { u1, u2, u3 },
                Profile::V2 {
                    u1: v1,
                    u2: v2,
                    u3: v3,
                },
            ) => cmp_pair((u2, u3), (v2, v3)).then_with(|| cmp_right_lex(u1, v1)),
        }
    }
}

impl PartialOrd for Profile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn xi(m: &CanonicalMonomial) -> Profile {
    let u1 = m.yexp().to_vec();
    if m.is_pure_y() {
        Profile::V1 { u1 }
    } else {
        Profile::V2 {
            u1,
            u2: counts(m.cseq()),
            u3: counts(m.dseq()),
        }
    }
}

pub fn xi_inv(p: &Profile) -> Result<CanonicalMonomial> {
    match p {
        Profile::V1 { u1 } => Ok(CanonicalMonomial::from_y_exponents(u1.clone())),
        Profile::V2 { u1, u2, u3 } => {
            // re-validate: the enum fields are public
            Profile::v2(u1.clone(), u2.clone(), u3.clone())?;
            CanonicalMonomial::new(u1.clone(), expand(u2), expand(u3))
        }
    }
}

// Sorted index sequences compare right-lexicographically on their count
// vectors exactly when their reversals compare lexicographically.
fn cmp_sorted_desc(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// The linear well-order on the canonical basis, evaluated without building
/// profiles. Agrees with `xi(a).cmp(&xi(b))`.
pub fn cmp_total(a: &CanonicalMonomial, b: &CanonicalMonomial) -> Ordering {
    match (a.is_pure_y(), b.is_pure_y()) {
        (true, true) => cmp_right_lex(a.yexp(), b.yexp()),
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => a
            .z_len()
            .cmp(&b.z_len())
            .then_with(|| cmp_sorted_desc(a.dseq(), b.dseq()))
            .then_with(|| cmp_sorted_desc(a.cseq(), b.cseq()))
            .then_with(|| cmp_right_lex(a.yexp(), b.yexp())),
    }
}

impl Ord for CanonicalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_total(self, other)
    }
}

impl PartialOrd for CanonicalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A strictly increasing map of the positive integers, stored on an initial
/// segment `1..=n` and continued past `n` by `φ(n + k) = φ(n) + k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonotoneInjection {
    images: Vec<u32>,
}

impl Serialize for MonotoneInjection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonotoneInjection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<u32>::deserialize(d)?;
        MonotoneInjection::new(images).map_err(serde::de::Error::custom)
    }
}

impl MonotoneInjection {
    pub fn identity() -> Self {
        Self::default()
    }

    /// `images[k]` is the image of `k + 1`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.first() == Some(&0) {
            return Err(Error::InvalidProfile("injection images start at 1".into()));
        }
        if images.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile(
                "injection images must be strictly increasing".into(),
            ));
        }
        Ok(MonotoneInjection { images })
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k as u32 + 1)
    }

    pub fn apply(&self, i: u32) -> u32 {
        assert!(i >= 1, "indices start at 1");
        let n = self.images.len() as u32;
        if i <= n {
            self.images[i as usize - 1]
        } else {
            self.images.last().copied().unwrap_or(0) + (i - n)
        }
    }

    /// Explicit images on `1..=n`.
    pub fn extended_to(&self, n: u32) -> MonotoneInjection {
        let m = n.max(self.images.len() as u32);
        MonotoneInjection {
            images: (1..=m).map(|i| self.apply(i)).collect(),
        }
    }

    /// `v_{φ(i)} = u_i`, zero elsewhere.
    pub fn push_forward(&self, u: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        for (k, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let j = self.apply(k as u32 + 1) as usize;
            if out.len() < j {
                out.resize(j, 0);
            }
            out[j - 1] = a;
        }
        out
    }

    pub fn compose(&self, inner: &MonotoneInjection) -> MonotoneInjection {
        let n = inner.images.len().max(self.images.len()) as u32;
        MonotoneInjection {
            images: (1..=n).map(|i| self.apply(inner.apply(i))).collect(),
        }
    }
}

impl fmt::Display for MonotoneInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RenameMode {
    Both,
    YOnly,
    ZOnly,
}

impl RenameMode {
    pub const ALL: [RenameMode; 3] = [RenameMode::Both, RenameMode::YOnly, RenameMode::ZOnly];

    fn renames_y(self) -> bool {
        self != RenameMode::ZOnly
    }

    fn renames_z(self) -> bool {
        self != RenameMode::YOnly
    }
}

pub fn rename_monomial(
    m: &CanonicalMonomial,
    phi: &MonotoneInjection,
    mode: RenameMode,
) -> CanonicalMonomial {
    let fy = |i| if mode.renames_y() { phi.apply(i) } else { i };
    let fz = |i| if mode.renames_z() { phi.apply(i) } else { i };
    m.map_indices(fy, fz)
}

/// The algebra endomorphism induced by `φ` on `y` and/or `z` indices.
pub fn apply_renaming(
    f: &QuotientPolynomial,
    phi: &MonotoneInjection,
    mode: RenameMode,
) -> QuotientPolynomial {
    f.map_monomials(|m| (Sign::Plus, rename_monomial(m, phi, mode)))
}

/// Leftmost subsequence of `v` dominating `u` elementwise. Returns 0-based
/// positions in `v`.
pub fn seq_embed<T>(u: &[T], v: &[T], leq: impl Fn(&T, &T) -> bool) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(u.len());
    let mut next = 0;
    for a in u {
        while next < v.len() && !leq(a, &v[next]) {
            next += 1;
        }
        if next == v.len() {
            return None;
        }
        out.push(next);
        next += 1;
    }
    Some(out)
}

fn componentwise_leq(a: &Vec<u32>, b: &Vec<u32>) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Profile positions of `a` and of `b` padded with enough zero positions to
/// realize the infinite zero tail.
fn embedding_instance(a: &Profile, b: &Profile) -> Option<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    if a.variant() != b.variant() {
        return None;
    }
    let u = a.positions();
    let mut v = b.positions();
    let width = if a.variant() == 1 { 1 } else { 3 };
    v.extend(std::iter::repeat(vec![0; width]).take(u.len()));
    Some((u, v))
}

fn injection_from_positions(pos: Vec<usize>) -> MonotoneInjection {
    MonotoneInjection {
        images: pos.into_iter().map(|p| p as u32 + 1).collect(),
    }
}

/// `a ≤′ b`: same variant and `b`'s profile (with an infinite zero tail)
/// has a subsequence dominating `a`'s profile. The witness maps every
/// position of `a`'s profile.
pub fn pwo_leq(a: &CanonicalMonomial, b: &CanonicalMonomial) -> Option<MonotoneInjection> {
    let (u, v) = embedding_instance(&xi(a), &xi(b))?;
    seq_embed(&u, &v, componentwise_leq).map(injection_from_positions)
}

/// A way of deciding `≤′` between two monomials.
pub trait Embedder: Send + Sync {
    fn name(&self) -> &'static str;
    fn embed(&self, a: &CanonicalMonomial, b: &CanonicalMonomial) -> Option<MonotoneInjection>;
}

/// Leftmost greedy matching; returns the pointwise-smallest witness.
pub struct GreedyEmbedder;

impl Embedder for GreedyEmbedder {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn embed(&self, a: &CanonicalMonomial, b: &CanonicalMonomial) -> Option<MonotoneInjection> {
        pwo_leq(a, b)
    }
}

/// Tries every increasing position map in lexicographic order. Exponential;
/// meant for cross-checking small instances.
pub struct ExhaustiveEmbedder;

impl ExhaustiveEmbedder {
    fn search(u: &[Vec<u32>], v: &[Vec<u32>], start: usize, acc: &mut Vec<usize>) -> bool {
        let k = acc.len();
        if k == u.len() {
            return true;
        }
        let remaining = u.len() - k;
        for p in start..=v.len().saturating_sub(remaining) {
            acc.push(p);
            if componentwise_leq(&u[k], &v[p]) && Self::search(u, v, p + 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
}

impl Embedder for ExhaustiveEmbedder {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn embed(&self, a: &CanonicalMonomial, b: &CanonicalMonomial) -> Option<MonotoneInjection> {
        let (u, v) = embedding_instance(&xi(a), &xi(b))?;
        let mut acc = Vec::new();
        Self::search(&u, &v, 0, &mut acc).then(|| injection_from_positions(acc))
    }
}

pub fn embedders() -> Vec<Box<dyn Embedder>> {
    vec![Box::new(GreedyEmbedder), Box::new(ExhaustiveEmbedder)]
}

pub fn embedder(name: &str) -> Result<Box<dyn Embedder>> {
    let all = embedders();
    let names: Vec<_> = all.iter().map(|e| e.name()).collect();
    all.into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "embedder",
            name: name.to_string(),
            available: names.join(", "),
        })
}

/// Elements of `s` not strictly dominated (under `≤′`) by another element.
/// Duplicates are collapsed; input order is kept.
pub fn minimal_elements(s: &[CanonicalMonomial]) -> Vec<CanonicalMonomial> {
    let mut uniq: Vec<&CanonicalMonomial> = Vec::new();
    for m in s {
        if !uniq.contains(&m) {
            uniq.push(m);
        }
    }
    uniq.iter()
        .filter(|m| {
            !uniq
                .iter()
                .any(|s| s != *m && pwo_leq(s, m).is_some())
        })
        .map(|m| (*m).clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetainedMonomial {
    pub step: usize,
    pub m: CanonicalMonomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub retained: Vec<RetainedMonomial>,
    pub processed: usize,
    pub last_growth: Option<usize>,
    /// The stream had more elements than the budget allowed.
    pub budget_exhausted: bool,
    /// Budget ran out while the last processed element still caused growth.
    pub growing_at_budget: bool,
}

impl StabilizationReport {
    /// Step of the last growth, if at least one later element was absorbed.
    pub fn stabilized_at(&self) -> Option<usize> {
        match self.last_growth {
            Some(k) if k < self.processed => Some(k),
            None if self.processed > 0 => Some(0),
            _ => None,
        }
    }
}

/// Feeds a stream through the `≤′` closure, keeping every element not
/// dominated by one kept earlier. Kept elements are never dropped.
pub fn chain_stabilization_check<I>(stream: I, budget: usize) -> StabilizationReport
where
    I: IntoIterator<Item = CanonicalMonomial>,
{
    assert!(budget >= 1, "budget must be positive");
    let mut retained: Vec<RetainedMonomial> = Vec::new();
    let mut last_growth = None;
    let mut processed = 0;
    let mut it = stream.into_iter();
    for m in it.by_ref().take(budget) {
        processed += 1;
        if !retained.iter().any(|r| pwo_leq(&r.m, &m).is_some()) {
            retained.push(RetainedMonomial { step: processed, m });
            last_growth = Some(processed);
        }
    }
    let budget_exhausted = processed == budget && it.next().is_some();
    StabilizationReport {
        growing_at_budget: budget_exhausted && last_growth == Some(processed),
        retained,
        processed,
        last_growth,
        budget_exhausted,
    }
}
