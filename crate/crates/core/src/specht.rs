//! Leading terms and the reduction machinery behind finite generation:
//! lifting a generator onto a larger monomial, Euclidean reduction against a
//! generator set, ascending-chain stabilization, and a degree-bounded
//! membership test.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{q_mul, CanonicalMonomial, QuotientPolynomial};
use crate::lattice::{IntegerLattice, SparseRow};
use crate::orders::{
    apply_renaming, pwo_leq, rename_monomial, xi, MonotoneInjection, Profile, RenameMode,
};
use crate::stream::{pure_y_monomials, pure_z_words};

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeadingData {
    #[serde(with = "decimal")]
    pub lc: BigInt,
    pub lm: CanonicalMonomial,
}

impl LeadingData {
    pub fn term(&self) -> QuotientPolynomial {
        QuotientPolynomial::monomial(self.lc.clone(), self.lm.clone())
    }
}

impl fmt::Display for LeadingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.term())
    }
}

pub fn leading(f: &QuotientPolynomial) -> Result<LeadingData> {
    let (m, c) = f.leading_term().ok_or(Error::ZeroPolynomial)?;
    Ok(LeadingData {
        lc: c.clone(),
        lm: m.clone(),
    })
}

/// `coeff · m`, serialized as `{"coeff": "…", "m": …}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "decimal")]
    pub coeff: BigInt,
    pub m: CanonicalMonomial,
}

impl Term {
    pub fn to_polynomial(&self) -> QuotientPolynomial {
        QuotientPolynomial::monomial(self.coeff.clone(), self.m.clone())
    }
}

impl From<LeadingData> for Term {
    fn from(l: LeadingData) -> Self {
        Term {
            coeff: l.lc,
            m: l.lm,
        }
    }
}

/// `(φ, N, P)` with `N · φ̃(M) · P = M̃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducerTriple {
    pub phi: MonotoneInjection,
    #[serde(rename = "N")]
    pub n: CanonicalMonomial,
    #[serde(rename = "P")]
    pub p: Vec<u32>,
}

impl ReducerTriple {
    pub fn trivial() -> Self {
        ReducerTriple {
            phi: MonotoneInjection::identity(),
            n: CanonicalMonomial::one(),
            p: Vec::new(),
        }
    }

    pub fn p_monomial(&self) -> CanonicalMonomial {
        CanonicalMonomial::one().append_z(&self.p)
    }

    /// `N · φ̃(f) · P`.
    pub fn apply(&self, f: &QuotientPolynomial) -> QuotientPolynomial {
        let renamed = apply_renaming(f, &self.phi, RenameMode::Both);
        let left = q_mul(&QuotientPolynomial::from(self.n.clone()), &renamed);
        q_mul(&left, &QuotientPolynomial::from(self.p_monomial()))
    }
}

impl fmt::Display for ReducerTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi = {}, N = {}, P = ", self.phi, self.n)?;
        if self.p.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.p.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "z{i}")?;
        }
        Ok(())
    }
}

fn difference(big: &[u32], small: &[u32]) -> Vec<u32> {
    (0..big.len().max(small.len()))
        .map(|k| big.get(k).unwrap_or(&0) - small.get(k).unwrap_or(&0))
        .collect()
}

fn expand(counts: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        out.extend(std::iter::repeat(i as u32 + 1).take(c as usize));
    }
    out
}

fn not_embeddable(m: &CanonicalMonomial, target: &CanonicalMonomial) -> Error {
    Error::NotEmbeddable {
        from: m.to_string(),
        into: target.to_string(),
    }
}

pub fn factorize_embedding(m: &CanonicalMonomial, target: &CanonicalMonomial) -> Result<ReducerTriple> {
    let phi = pwo_leq(m, target).ok_or_else(|| not_embeddable(m, target))?;
    let image = xi(m).rename(&phi, RenameMode::Both);
    let moved = rename_monomial(m, &phi, RenameMode::Both);
    match (image, xi(target)) {
        (Profile::V1 { u1 }, Profile::V1 { u1: v1 }) => Ok(ReducerTriple {
            n: CanonicalMonomial::from_y_exponents(difference(&v1, &u1)),
            phi,
            p: Vec::new(),
        }),
        (
            Profile::V2 { u1, u2, u3 },
            Profile::V2 {
                u1: v1,
                u2: v2,
                u3: v3,
            },
        ) => {
            let odd_slots = expand(&difference(&v2, &u2));
            let even_slots = expand(&difference(&v3, &u3));
            // The first letter of P lands in an odd slot iff φ̃(M) has even z-length.
            let (first, second) = if moved.z_len() % 2 == 0 {
                (odd_slots, even_slots)
            } else {
                (even_slots, odd_slots)
            };
            let mut p = Vec::with_capacity(first.len() + second.len());
            for k in 0..first.len().max(second.len()) {
                p.extend(first.get(k));
                p.extend(second.get(k));
            }
            Ok(ReducerTriple {
                n: CanonicalMonomial::from_y_exponents(difference(&v1, &u1)),
                phi,
                p,
            })
        }
        _ => Err(not_embeddable(m, target)),
    }
}

/// `N · φ̃(f) · P` for the triple that carries `lm(f)` onto `target`.
pub fn lift_reducer(f: &QuotientPolynomial, target: &CanonicalMonomial) -> Result<QuotientPolynomial> {
    let lm = leading(f)?.lm;
    Ok(factorize_embedding(&lm, target)?.apply(f))
}

/// One entry of a reduction trace. Entries sharing a `step` belong to the
/// same leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReductionStep {
    /// Subtract `beta · N φ̃(G[against]) P`.
    Lift {
        step: usize,
        against: usize,
        #[serde(with = "decimal")]
        beta: BigInt,
        phi: MonotoneInjection,
        #[serde(rename = "N")]
        n: CanonicalMonomial,
        #[serde(rename = "P")]
        p: Vec<u32>,
    },
    /// Move `coeff · m` to the remainder: the coefficient is outside the
    /// ideal of dominating leading coefficients.
    Frozen { step: usize, frozen: Term },
}

impl ReductionStep {
    pub fn step(&self) -> usize {
        match self {
            ReductionStep::Lift { step, .. } | ReductionStep::Frozen { step, .. } => *step,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: QuotientPolynomial,
    pub trace: Vec<ReductionStep>,
}

/// `d = gcd(a)` with `d = Σ β_l a_l` and `d > 0`.
pub fn bezout(a: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let Some((first, rest)) = a.split_first() else {
        return (BigInt::zero(), Vec::new());
    };
    let mut d = first.clone();
    let mut beta = vec![BigInt::one()];
    for x in rest {
        let e = d.extended_gcd(x);
        for b in beta.iter_mut() {
            *b *= &e.x;
        }
        beta.push(e.y);
        d = e.gcd;
    }
    if d.is_negative() {
        d = -d;
        for b in beta.iter_mut() {
            *b = -&*b;
        }
    }
    (d, beta)
}

pub fn reduce_by(f: &QuotientPolynomial, gens: &[QuotientPolynomial]) -> Result<Reduction> {
    let leads = gens.iter().map(leading).collect::<Result<Vec<_>>>()?;
    let mut h = f.clone();
    let mut remainder = QuotientPolynomial::zero();
    let mut trace = Vec::new();
    let mut step = 0;
    while let Some((m, c)) = h.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        step += 1;
        let dominating: Vec<usize> = (0..gens.len())
            .filter(|&l| pwo_leq(&leads[l].lm, &m).is_some())
            .collect();
        let rem = if dominating.is_empty() {
            c
        } else {
            let lcs: Vec<BigInt> = dominating.iter().map(|&l| leads[l].lc.clone()).collect();
            let (d, beta) = bezout(&lcs);
            let q = c.div_floor(&d);
            let rem = &c - &q * &d;
            if !q.is_zero() {
                for (&l, b) in dominating.iter().zip(&beta) {
                    let coeff = &q * b;
                    if coeff.is_zero() {
                        continue;
                    }
                    let triple = factorize_embedding(&leads[l].lm, &m)?;
                    h = &h - &triple.apply(&gens[l]).scale(&coeff);
                    trace.push(ReductionStep::Lift {
                        step,
                        against: l,
                        beta: coeff,
                        phi: triple.phi,
                        n: triple.n,
                        p: triple.p,
                    });
                }
            }
            rem
        };
        if !rem.is_zero() {
            let frozen = QuotientPolynomial::monomial(rem.clone(), m.clone());
            h = &h - &frozen;
            remainder = &remainder + &frozen;
            trace.push(ReductionStep::Frozen {
                step,
                frozen: Term {
                    coeff: rem,
                    m: m.clone(),
                },
            });
        }
        debug_assert!(h.leading_term().map_or(true, |(m2, _)| *m2 < m));
    }
    Ok(Reduction { remainder, trace })
}

fn trace_error(msg: impl Into<String>) -> Error {
    Error::InvalidTrace(msg.into())
}

/// Re-executes a trace from scratch, checking that every step targets the
/// current leading monomial, that leading monomials strictly descend, and
/// that the polynomial is exhausted at the end. Returns the remainder.
pub fn replay(
    f: &QuotientPolynomial,
    gens: &[QuotientPolynomial],
    trace: &[ReductionStep],
) -> Result<QuotientPolynomial> {
    let mut h = f.clone();
    let mut remainder = QuotientPolynomial::zero();
    let mut k = 0;
    while k < trace.len() {
        let step = trace[k].step();
        let target = leading(&h)
            .map_err(|_| trace_error(format!("step {step} after the polynomial vanished")))?
            .lm;
        let (lm, lc) = (target.clone(), h.coefficient(&target));
        while k < trace.len() && trace[k].step() == step {
            match &trace[k] {
                ReductionStep::Lift {
                    against,
                    beta,
                    phi,
                    n,
                    p,
                    ..
                } => {
                    let g = gens
                        .get(*against)
                        .ok_or_else(|| trace_error(format!("no generator {against}")))?;
                    let triple = ReducerTriple {
                        phi: phi.clone(),
                        n: n.clone(),
                        p: p.clone(),
                    };
                    let lift = triple.apply(g);
                    if leading(&lift)?.lm != lm {
                        return Err(trace_error(format!("step {step}: lift misses {lm}")));
                    }
                    h = &h - &lift.scale(beta);
                }
                ReductionStep::Frozen { frozen, .. } => {
                    if frozen.m != lm {
                        return Err(trace_error(format!("step {step}: froze {} not {lm}", frozen.m)));
                    }
                    let t = frozen.to_polynomial();
                    h = &h - &t;
                    remainder = &remainder + &t;
                }
            }
            k += 1;
        }
        if let Some((m, c)) = h.leading_term() {
            if *m > lm || (*m == lm && c.abs() >= lc.abs()) {
                return Err(trace_error(format!("step {step} does not descend")));
            }
        }
    }
    if !h.is_zero() {
        return Err(trace_error(format!("trace ends with {h} left over")));
    }
    Ok(remainder)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainGrowth {
    pub step: usize,
    pub lt: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub adjoined: Vec<ChainGrowth>,
    pub generators: Vec<QuotientPolynomial>,
    pub processed: usize,
    /// The stream had more elements than the budget allowed.
    pub budget_exhausted: bool,
    /// Budget ran out while the last processed element still caused growth.
    pub growing_at_budget: bool,
}

impl ChainReport {
    /// Step of the last growth, provided at least one later element was
    /// absorbed without growth.
    pub fn stabilized_at(&self) -> Option<usize> {
        let last = self.adjoined.last().map_or(0, |g| g.step);
        (last < self.processed).then_some(last)
    }

    /// `[{"step": k, "lt": …}, …, {"stabilized_at": k | null}]`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v: Vec<serde_json::Value> = self
            .adjoined
            .iter()
            .map(|g| serde_json::to_value(g).expect("serializable"))
            .collect();
        v.push(serde_json::json!({ "stabilized_at": self.stabilized_at() }));
        serde_json::Value::Array(v)
    }
}

/// Grows a generator set along a stream, adjoining every remainder that
/// does not reduce to zero against the generators collected so far.
pub fn chain_demo<I>(stream: I, budget: usize) -> ChainReport
where
    I: IntoIterator<Item = QuotientPolynomial>,
{
    assert!(budget >= 1, "budget must be positive");
    let mut gens: Vec<QuotientPolynomial> = Vec::new();
    let mut adjoined = Vec::new();
    let mut processed = 0;
    let mut it = stream.into_iter();
    for f in it.by_ref().take(budget) {
        processed += 1;
        let r = reduce_by(&f, &gens)
            .expect("generators are nonzero")
            .remainder;
        if let Ok(lt) = leading(&r) {
            adjoined.push(ChainGrowth {
                step: processed,
                lt: lt.into(),
            });
            gens.push(r);
        }
    }
    let budget_exhausted = processed == budget && it.next().is_some();
    ChainReport {
        growing_at_budget: budget_exhausted
            && adjoined.last().is_some_and(|g| g.step == processed),
        adjoined,
        generators: gens,
        processed,
        budget_exhausted,
    }
}

pub const DEFAULT_LIFT_CAP: usize = 200_000;

/// Strictly increasing maps `1..=k → 1..=n`, as image lists.
fn increasing_maps(k: u32, n: u32) -> Vec<Vec<u32>> {
    fn go(k: u32, lo: u32, n: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() as u32 == k {
            out.push(acc.clone());
            return;
        }
        let left = k - acc.len() as u32;
        for i in lo..=n + 1 - left {
            acc.push(i);
            go(k, i + 1, n, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, 1, n, &mut Vec::new(), &mut out);
    }
    out
}

fn to_row(columns: &mut HashMap<CanonicalMonomial, usize>, p: &QuotientPolynomial) -> SparseRow {
    let entries = p
        .terms()
        .map(|(m, c)| {
            let next = columns.len();
            (*columns.entry(m.clone()).or_insert(next), c.clone())
        })
        .collect();
    SparseRow::new(entries)
}

/// Whether `f` is a ℤ-combination of lifts `N φ̃(g) P` (g ∈ G) of degree at
/// most `dmax`, with fresh indices capped at (largest index in f and G) +
/// `dmax`. A truncation: `false` only means no witness within the bounds.
pub fn membership_bounded(
    f: &QuotientPolynomial,
    gens: &[QuotientPolynomial],
    dmax: u32,
    cap: usize,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let top = gens
        .iter()
        .map(|g| g.max_index())
        .chain([f.max_index()])
        .max()
        .unwrap_or(0)
        + dmax;
    let ys = pure_y_monomials(dmax, top);
    let zs = pure_z_words(dmax, top);

    let mut renamed: Vec<QuotientPolynomial> = Vec::new();
    let mut seen = HashSet::new();
    for g in gens.iter().filter(|g| !g.is_zero() && g.degree() <= dmax) {
        for images in increasing_maps(g.max_index(), top) {
            let phi = MonotoneInjection::new(images).expect("increasing images");
            let h = apply_renaming(g, &phi, RenameMode::Both);
            if seen.insert(h.clone()) {
                renamed.push(h);
            }
        }
    }

    let mut columns: HashMap<CanonicalMonomial, usize> = HashMap::new();
    let mut lattice = IntegerLattice::new();
    let mut lifts = 0usize;
    for h in &renamed {
        let room = dmax - h.degree();
        for n in ys.iter().filter(|n| n.degree() <= room) {
            let left = q_mul(&QuotientPolynomial::from(n.clone()), h);
            for p in zs.iter().filter(|p| p.len() as u32 <= room - n.degree()) {
                lifts += 1;
                if lifts > cap {
                    return Err(Error::ResourceBound {
                        what: format!("lift enumeration up to degree {dmax}"),
                        cap,
                    });
                }
                let pm = CanonicalMonomial::one().append_z(p);
                lattice.insert(to_row(&mut columns, &q_mul(&left, &QuotientPolynomial::from(pm))));
            }
        }
    }
    if f.terms().any(|(m, _)| !columns.contains_key(m)) {
        return Ok(false);
    }
    Ok(lattice.contains(&to_row(&mut columns, f)))
}
