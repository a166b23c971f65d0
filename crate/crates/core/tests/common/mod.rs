#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use sl2pair::freealg::{CanonicalMonomial, GradedLetter, GradedWord, QuotientPolynomial};
use sl2pair::orders::MonotoneInjection;

pub fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

pub fn y_counts(ys: &[u32]) -> Vec<u32> {
    let mut e = Vec::new();
    for &i in ys {
        if e.len() < i as usize {
            e.resize(i as usize, 0);
        }
        e[i as usize - 1] += 1;
    }
    e
}

pub fn letter() -> impl Strategy<Value = GradedLetter> {
    (any::<bool>(), 1u32..=4).prop_map(|(y, i)| if y { GradedLetter::y(i) } else { GradedLetter::z(i) })
}

pub fn word(max_len: usize) -> impl Strategy<Value = GradedWord> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(GradedWord)
}

pub fn z_word(max_len: usize, idx: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=idx, 0..=max_len)
}

pub fn y_monomial(max_deg: usize, idx: u32) -> impl Strategy<Value = CanonicalMonomial> {
    prop::collection::vec(1..=idx, 0..=max_deg)
        .prop_map(|ys| CanonicalMonomial::from_y_exponents(y_counts(&ys)))
}

/// Canonical monomial with `y` degree `≤ ydeg`, `z` length `≤ zlen`.
pub fn monomial_with(ydeg: usize, zlen: usize, idx: u32) -> impl Strategy<Value = CanonicalMonomial> {
    (
        prop::collection::vec(1..=idx, 0..=ydeg),
        prop::collection::vec(1..=idx, 0..=zlen),
    )
        .prop_map(|(ys, zs)| {
            let c: Vec<u32> = zs.iter().step_by(2).copied().collect();
            let d: Vec<u32> = zs.iter().skip(1).step_by(2).copied().collect();
            CanonicalMonomial::new(y_counts(&ys), sorted(c), sorted(d)).unwrap()
        })
}

pub fn monomial() -> impl Strategy<Value = CanonicalMonomial> {
    monomial_with(4, 5, 4)
}

pub fn injection(max_len: usize) -> impl Strategy<Value = MonotoneInjection> {
    prop::collection::vec(1u32..=3, 0..=max_len).prop_map(|steps| {
        let mut acc = 0;
        let images = steps
            .into_iter()
            .map(|s| {
                acc += s;
                acc
            })
            .collect();
        MonotoneInjection::new(images).unwrap()
    })
}

pub fn polynomial(max_terms: usize) -> impl Strategy<Value = QuotientPolynomial> {
    prop::collection::vec((-5i64..=5, monomial_with(3, 4, 3)), 0..=max_terms).prop_map(|ts| {
        QuotientPolynomial::from_terms(ts.into_iter().map(|(c, m)| (BigInt::from(c), m)))
    })
}

pub fn nonzero_polynomial(max_terms: usize) -> impl Strategy<Value = QuotientPolynomial> {
    polynomial(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn z_monomial(zs: &[u32]) -> CanonicalMonomial {
    CanonicalMonomial::one().append_z(zs)
}

/// Profile oracle: `(u1, u2, u3)` count vectors, trailing zeros trimmed.
pub fn profile_oracle(m: &CanonicalMonomial) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    (
        trim(m.yexp().to_vec()),
        y_counts(m.cseq()),
        y_counts(m.dseq()),
    )
}
