mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use sl2pair::freealg::{reduce_word, CanonicalMonomial, GradedLetter, GradedWord};
use sl2pair::orders::{
    cmp_total, embedders, minimal_elements, pwo_leq, rename_monomial, seq_embed, xi, xi_inv,
    ExhaustiveEmbedder, Embedder, MonotoneInjection, Profile, RenameMode,
};
use sl2pair::stream::canonical_monomials;

fn at(v: &[u32], k: usize) -> u32 {
    v.get(k).copied().unwrap_or(0)
}

/// Highest differing position decides.
fn right_lex_oracle(u: &[u32], v: &[u32]) -> Ordering {
    let n = u.len().max(v.len());
    (0..n)
        .rev()
        .map(|k| at(u, k).cmp(&at(v, k)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn order_oracle(a: &CanonicalMonomial, b: &CanonicalMonomial) -> Ordering {
    let (a1, a2, a3) = profile_oracle(a);
    let (b1, b2, b3) = profile_oracle(b);
    match (a.is_pure_y(), b.is_pure_y()) {
        (true, true) => right_lex_oracle(&a1, &b1),
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => {
            let wa: u32 = a2.iter().chain(&a3).sum();
            let wb: u32 = b2.iter().chain(&b3).sum();
            wa.cmp(&wb)
                .then_with(|| right_lex_oracle(&a3, &b3))
                .then_with(|| right_lex_oracle(&a2, &b2))
                .then_with(|| right_lex_oracle(&a1, &b1))
        }
    }
}

/// Every strictly increasing position map, tried in turn.
fn brute_embeds(u: &[Vec<u32>], v: &[Vec<u32>]) -> bool {
    fn go(u: &[Vec<u32>], v: &[Vec<u32>], from: usize) -> bool {
        match u.split_first() {
            None => true,
            Some((h, t)) => (from..v.len()).any(|p| {
                h.iter().zip(&v[p]).all(|(x, y)| x <= y) && go(t, v, p + 1)
            }),
        }
    }
    go(u, v, 0)
}

fn positions_oracle(m: &CanonicalMonomial) -> Vec<Vec<u32>> {
    let (u1, u2, u3) = profile_oracle(m);
    if m.is_pure_y() {
        u1.iter().map(|&x| vec![x]).collect()
    } else {
        let n = u1.len().max(u2.len()).max(u3.len());
        (0..n).map(|k| vec![at(&u1, k), at(&u2, k), at(&u3, k)]).collect()
    }
}

fn pwo_oracle(a: &CanonicalMonomial, b: &CanonicalMonomial) -> bool {
    if a.is_pure_y() != b.is_pure_y() {
        return false;
    }
    let u = positions_oracle(a);
    let mut v = positions_oracle(b);
    let width = if a.is_pure_y() { 1 } else { 3 };
    v.extend(std::iter::repeat(vec![0; width]).take(u.len()));
    brute_embeds(&u, &v)
}

fn push_oracle(phi: &MonotoneInjection, u: &[u32]) -> Vec<u32> {
    let mut out = vec![0; u.len().max(1) * 8 + 16];
    for (k, &x) in u.iter().enumerate() {
        out[phi.apply(k as u32 + 1) as usize - 1] = x;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn total_order_matches_definition(a in monomial(), b in monomial()) {
        prop_assert_eq!(cmp_total(&a, &b), order_oracle(&a, &b));
        prop_assert_eq!(cmp_total(&a, &b), xi(&a).cmp(&xi(&b)));
        prop_assert_eq!(cmp_total(&a, &b), cmp_total(&b, &a).reverse());
        prop_assert_eq!(cmp_total(&a, &b) == Ordering::Equal, a == b);
    }

    #[test]
    fn total_order_is_transitive(a in monomial(), b in monomial(), c in monomial()) {
        let mut v = [a, b, c];
        v.sort_by(cmp_total);
        prop_assert!(cmp_total(&v[0], &v[2]) != Ordering::Greater);
    }

    #[test]
    fn xi_round_trip(m in monomial()) {
        prop_assert_eq!(xi_inv(&xi(&m)).unwrap(), m.clone());
        let p = xi(&m);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Profile>(&json).unwrap(), p);
    }

    #[test]
    fn pwo_matches_brute_force(a in monomial_with(3, 4, 3), b in monomial_with(4, 6, 4)) {
        let w = pwo_leq(&a, &b);
        prop_assert_eq!(w.is_some(), pwo_oracle(&a, &b));
        if let Some(phi) = w {
            // the witness really dominates
            let image = xi(&a).rename(&phi, RenameMode::Both);
            let (i, t) = (positions_oracle(&xi_inv(&image).unwrap()), positions_oracle(&b));
            for (k, p) in i.iter().enumerate() {
                let q = t.get(k).cloned().unwrap_or_else(|| vec![0; p.len()]);
                prop_assert!(p.iter().zip(&q).all(|(x, y)| x <= y));
            }
        }
    }

    #[test]
    fn pwo_is_a_partial_order(a in monomial_with(3, 3, 3), b in monomial_with(3, 3, 3), c in monomial_with(3, 3, 3)) {
        prop_assert!(pwo_leq(&a, &a).unwrap().is_identity());
        if pwo_leq(&a, &b).is_some() && pwo_leq(&b, &a).is_some() {
            prop_assert_eq!(&a, &b);
        }
        if let (Some(f), Some(g)) = (pwo_leq(&a, &b), pwo_leq(&b, &c)) {
            prop_assert!(pwo_leq(&a, &c).is_some());
            let h = g.compose(&f);
            let moved = rename_monomial(&a, &h, RenameMode::Both);
            prop_assert!(pwo_oracle(&moved, &c));
        }
    }

    #[test]
    fn pwo_refines_total_order(a in monomial(), b in monomial()) {
        if pwo_leq(&a, &b).is_some() {
            prop_assert!(cmp_total(&a, &b) != Ordering::Greater);
        }
    }

    #[test]
    fn lemma_comp(m in monomial(), phi in injection(5)) {
        let (u1, u2, u3) = profile_oracle(&m);
        for mode in RenameMode::ALL {
            let (y, z) = match mode {
                RenameMode::Both => (true, true),
                RenameMode::YOnly => (true, false),
                RenameMode::ZOnly => (false, true),
            };
            let (w1, w2, w3) = profile_oracle(&rename_monomial(&m, &phi, mode));
            prop_assert_eq!(w1, if y { push_oracle(&phi, &u1) } else { u1.clone() });
            if !m.is_pure_y() {
                prop_assert_eq!(w2, if z { push_oracle(&phi, &u2) } else { u2.clone() });
                prop_assert_eq!(w3, if z { push_oracle(&phi, &u3) } else { u3.clone() });
            }
            prop_assert_eq!(xi(&rename_monomial(&m, &phi, mode)), xi(&m).rename(&phi, mode));
        }
    }

    #[test]
    fn lemma_mult(m in y_monomial(4, 4), n in monomial(), nt in monomial()) {
        let (n, nt) = if cmp_total(&n, &nt) == Ordering::Greater { (nt, n) } else { (n, nt) };
        prop_assert!(m.mul(&n).1 <= m.mul(&nt).1);
    }

    #[test]
    fn lemma_mult1(m in y_monomial(4, 4), n in y_monomial(4, 4)) {
        prop_assert!(m <= m.mul(&n).1);
    }

    #[test]
    fn lemma_mult2(a in z_word(5, 4), t in z_word(5, 4)) {
        let m = z_monomial(&a);
        let mn: GradedWord = a.iter().chain(&t).map(|&i| GradedLetter::z(i)).collect();
        let (s, mn) = reduce_word(&mn);
        prop_assert_eq!(s.to_bigint(), num_bigint::BigInt::from(1));
        prop_assert!(m <= mn);
    }

    #[test]
    fn lemma_mult3(p in monomial(), pt in monomial(), m in y_monomial(3, 4), n in z_word(4, 4)) {
        let (p, pt) = if cmp_total(&p, &pt) == Ordering::Greater { (pt, p) } else { (p, pt) };
        // a) right multiplication by y letters, up to sign
        prop_assert!(p.mul(&m).1 <= pt.mul(&m).1);
        // b) right multiplication by z letters, no sign
        let nm = z_monomial(&n);
        let (s1, pn) = p.mul(&nm);
        let (s2, ptn) = pt.mul(&nm);
        prop_assert_eq!((s1, s2), (sl2pair::Sign::Plus, sl2pair::Sign::Plus));
        prop_assert!(pn <= ptn);
    }

    #[test]
    fn lemma_mult4(m in monomial(), mt in monomial(), phi in injection(5)) {
        prop_assume!(m != mt);
        let (m, mt) = if m > mt { (mt, m) } else { (m, mt) };
        for mode in RenameMode::ALL {
            prop_assert!(rename_monomial(&m, &phi, mode) < rename_monomial(&mt, &phi, mode));
        }
    }
}

#[test]
fn least_element_is_one() {
    let all = canonical_monomials(5, 3);
    let least = all.iter().min().unwrap();
    assert!(least.is_one());
    let mut sorted = all.clone();
    sorted.sort();
    assert!(sorted.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn greedy_agrees_with_exhaustive_small_box() {
    let all = canonical_monomials(3, 2);
    for a in &all {
        for b in &all {
            let w: Vec<_> = embedders().iter().map(|e| e.embed(a, b).is_some()).collect();
            assert!(w.iter().all(|&x| x == w[0]));
            assert_eq!(w[0], pwo_oracle(a, b), "{a} vs {b}");
            assert_eq!(ExhaustiveEmbedder.embed(a, b), pwo_leq(a, b));
        }
    }
}

#[test]
fn seq_embed_examples() {
    let le = |a: &u32, b: &u32| a <= b;
    assert_eq!(seq_embed(&[1, 2], &[2, 1, 3], le), Some(vec![0, 2]));
    assert_eq!(seq_embed(&[], &[4], le), Some(vec![]));
    assert_eq!(seq_embed(&[5], &[4, 4], le), None);
}

proptest! {
    #[test]
    fn dickson_pigeonhole(seq in prop::collection::vec(prop::collection::vec(0u32..=2, 3), 28)) {
        // more than (c+1)^n = 27 tuples in Q_3 with entries <= 2
        let found = (0..seq.len()).any(|i| {
            (i + 1..seq.len()).any(|j| seq[i].iter().zip(&seq[j]).all(|(a, b)| a <= b))
        });
        prop_assert!(found);
    }

    #[test]
    fn minimal_elements_cover(s in prop::collection::vec(monomial_with(3, 3, 3), 1..=100)) {
        let mins = minimal_elements(&s);
        for m in &s {
            prop_assert!(mins.iter().any(|n| pwo_leq(n, m).is_some()));
        }
        for (i, a) in mins.iter().enumerate() {
            for (j, b) in mins.iter().enumerate() {
                if i != j {
                    prop_assert!(pwo_leq(a, b).is_none());
                }
            }
        }
    }
}
