//! Enumeration of canonical monomials and the registry of stream orders used
//! to feed the stabilization demos.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freealg::CanonicalMonomial;

/// Non-decreasing sequences of length `len` over `1..=max`.
fn sorted_sequences(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == len {
            out.push(acc.clone());
            return;
        }
        for i in lo..=max {
            acc.push(i);
            go(len, i, max, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, max, &mut Vec::new(), &mut out);
    out
}

fn counts(indices: &[u32], max: u32) -> Vec<u32> {
    let mut v = vec![0; max as usize];
    for &i in indices {
        v[i as usize - 1] += 1;
    }
    v
}

/// Every canonical monomial of total degree `≤ degree` whose indices are all
/// `≤ indices`, in no particular order.
pub fn canonical_monomials(degree: u32, indices: u32) -> Vec<CanonicalMonomial> {
    let mut out = Vec::new();
    if indices == 0 {
        out.push(CanonicalMonomial::one());
        return out;
    }
    for ydeg in 0..=degree {
        let ys = sorted_sequences(ydeg as usize, indices);
        for zlen in 0..=(degree - ydeg) as usize {
            let cs = sorted_sequences(zlen.div_ceil(2), indices);
            let ds = sorted_sequences(zlen / 2, indices);
            for y in &ys {
                for c in &cs {
                    for d in &ds {
                        let m = CanonicalMonomial::new(counts(y, indices), c.clone(), d.clone())
                            .expect("enumeration yields canonical data");
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Pure `y` monomials of degree `≤ degree` over `y_1, …, y_indices`.
pub fn pure_y_monomials(degree: u32, indices: u32) -> Vec<CanonicalMonomial> {
    if indices == 0 {
        return vec![CanonicalMonomial::one()];
    }
    (0..=degree)
        .flat_map(|d| sorted_sequences(d as usize, indices))
        .map(|y| CanonicalMonomial::from_y_exponents(counts(&y, indices)))
        .collect()
}

/// Pure `z` monomials of length `≤ len` over `z_1, …, z_indices`, listed as
/// the index words `z_{c1} z_{d1} z_{c2} …` of their canonical forms.
pub fn pure_z_words(len: u32, indices: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    if indices == 0 {
        return out;
    }
    for l in 1..=len as usize {
        for c in sorted_sequences(l.div_ceil(2), indices) {
            for d in sorted_sequences(l / 2, indices) {
                let mut w = Vec::with_capacity(l);
                for k in 0..c.len() {
                    w.push(c[k]);
                    w.extend(d.get(k));
                }
                out.push(w);
            }
        }
    }
    out
}

/// Number of monomials [`canonical_monomials`] would produce.
pub fn canonical_monomial_count(degree: u32, indices: u32) -> u128 {
    fn multisets(k: u32, n: u32) -> u128 {
        // C(k + n - 1, n - 1)
        let (top, r) = ((k + n - 1) as u128, (n - 1) as u128);
        (1..=r).fold(1u128, |acc, i| acc * (top - r + i) / i)
    }
    if indices == 0 {
        return 1;
    }
    let mut total = 0;
    for ydeg in 0..=degree {
        for zlen in 0..=(degree - ydeg) {
            total += multisets(ydeg, indices)
                * multisets(zlen.div_ceil(2), indices)
                * multisets(zlen / 2, indices);
        }
    }
    total
}

/// A named ordering of the bounded monomial set.
pub trait StreamOrder: Send + Sync {
    fn name(&self) -> &'static str;
    fn arrange(&self, monomials: &mut Vec<CanonicalMonomial>);

    fn enumerate(&self, degree: u32, indices: u32) -> Vec<CanonicalMonomial> {
        let mut v = canonical_monomials(degree, indices);
        self.arrange(&mut v);
        v
    }
}

/// By total degree, ties broken by the basis well-order.
pub struct Graded;

impl StreamOrder for Graded {
    fn name(&self) -> &'static str {
        "graded"
    }

    fn arrange(&self, v: &mut Vec<CanonicalMonomial>) {
        v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    }
}

/// Lexicographic on the written word, `y` before `z`, lower index first.
pub struct Lex;

impl StreamOrder for Lex {
    fn name(&self) -> &'static str {
        "lex"
    }

    fn arrange(&self, v: &mut Vec<CanonicalMonomial>) {
        v.sort_by_cached_key(|m| m.to_word());
    }
}

/// Increasing in the basis well-order.
pub struct Total;

impl StreamOrder for Total {
    fn name(&self) -> &'static str {
        "total"
    }

    fn arrange(&self, v: &mut Vec<CanonicalMonomial>) {
        v.sort();
    }
}

/// Deterministic pseudo-random permutation of the graded order.
pub struct Shuffled {
    pub seed: u64,
}

impl StreamOrder for Shuffled {
    fn name(&self) -> &'static str {
        "shuffled"
    }

    fn arrange(&self, v: &mut Vec<CanonicalMonomial>) {
        Graded.arrange(v);
        v.shuffle(&mut ChaCha8Rng::seed_from_u64(self.seed));
    }
}

pub fn stream_orders(seed: u64) -> Vec<Box<dyn StreamOrder>> {
    vec![
        Box::new(Graded),
        Box::new(Lex),
        Box::new(Total),
        Box::new(Shuffled { seed }),
    ]
}

pub fn stream_order(name: &str, seed: u64) -> Result<Box<dyn StreamOrder>> {
    let all = stream_orders(seed);
    let names: Vec<_> = all.iter().map(|o| o.name()).collect();
    all.into_iter()
        .find(|o| o.name() == name)
        .ok_or_else(|| Error::UnknownStrategy {
            kind: "stream order",
            name: name.to_string(),
            available: names.join(", "),
        })
}
