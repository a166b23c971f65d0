mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use sl2pair::freealg::{
    defining_relations, normalize, q_mul, reduce_word, subst, CanonicalMonomial, FreePolynomial,
    Grade, GradedLetter, GradedLieExpr, GradedWord, QuotientPolynomial, Sign, Substitution,
};
use sl2pair::genmat::{evaluate, generic_y, generic_z, is_graded_weak_identity, GMatrix2, GenericEval};
use sl2pair::ring::{IndexedVar, MultiPoly, PowerProduct};

fn multipoly() -> impl Strategy<Value = MultiPoly> {
    let var = (0u8..3, 1u32..=3).prop_map(|(f, i)| match f {
        0 => IndexedVar::alpha(i),
        1 => IndexedVar::beta(i),
        _ => IndexedVar::gamma(i),
    });
    let pp = prop::collection::vec((var, 1u32..=2), 0..=3).prop_map(PowerProduct::from_exponents);
    prop::collection::vec((-4i64..=4, pp), 0..=4).prop_map(|ts| {
        ts.into_iter().fold(MultiPoly::zero(), |acc, (c, m)| {
            &acc + &MultiPoly::term(BigInt::from(c), m)
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in multipoly(), b in multipoly(), c in multipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MultiPoly::zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        if !a.is_zero() && !b.is_zero() {
            prop_assert!(!(&a * &b).is_zero());
        }
    }
}

/// Rewrites a word to canonical form one relation at a time.
fn rewrite_oracle(w: &GradedWord) -> (i32, Vec<u32>, Vec<u32>, Vec<u32>) {
    let mut letters: Vec<GradedLetter> = w.letters().to_vec();
    let mut sign = 1;
    // bubble every y to the front: z y -> -y z, y y' -> y' y
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..letters.len().saturating_sub(1) {
            let (a, b) = (letters[k], letters[k + 1]);
            let swap = match (a.is_y(), b.is_y()) {
                (false, true) => {
                    sign = -sign;
                    true
                }
                (true, true) => a.index > b.index,
                _ => false,
            };
            if swap {
                letters.swap(k, k + 1);
                changed = true;
            }
        }
    }
    // z_a z_b z_c -> z_c z_b z_a sorts each slot class
    let first_z = letters.iter().position(|l| !l.is_y()).unwrap_or(letters.len());
    let mut changed = true;
    while changed {
        changed = false;
        for k in first_z..letters.len().saturating_sub(2) {
            if letters[k].index > letters[k + 2].index {
                letters.swap(k, k + 2);
                changed = true;
            }
        }
    }
    let ys: Vec<u32> = letters[..first_z].iter().map(|l| l.index).collect();
    let zs: Vec<u32> = letters[first_z..].iter().map(|l| l.index).collect();
    let c = zs.iter().step_by(2).copied().collect();
    let d = zs.iter().skip(1).step_by(2).copied().collect();
    (sign, y_counts(&ys), c, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_matches_rewriting(w in word(8)) {
        let (s, m) = reduce_word(&w);
        let (sign, y, c, d) = rewrite_oracle(&w);
        prop_assert_eq!(s.to_bigint(), BigInt::from(sign));
        prop_assert_eq!(m, CanonicalMonomial::new(y, c, d).unwrap());
    }

    #[test]
    fn reduction_is_idempotent(w in word(8)) {
        let (_, m) = reduce_word(&w);
        prop_assert_eq!(reduce_word(&m.to_word()), (Sign::Plus, m));
    }

    #[test]
    fn reduction_is_sound(w in word(8)) {
        let (s, m) = reduce_word(&w);
        prop_assert_eq!(w.evaluate(), m.evaluate().scale(&s.to_bigint()));
    }

    #[test]
    fn evaluation_respects_grading(w in word(6)) {
        let e = w.evaluate();
        match w.grade() {
            Grade::Even => prop_assert!(e.is_diagonal()),
            Grade::Odd => prop_assert!(e.is_off_diagonal()),
        }
    }
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(q_mul(&q_mul(&a, &b), &c), q_mul(&a, &q_mul(&b, &c)));
        prop_assert_eq!(q_mul(&a, &QuotientPolynomial::one()), a.clone());
    }

    #[test]
    fn evaluation_is_multiplicative(a in polynomial(3), b in polynomial(3)) {
        prop_assert_eq!(evaluate(&q_mul(&a, &b)), &evaluate(&a) * &evaluate(&b));
        prop_assert_eq!(evaluate(&(&a + &b)), &evaluate(&a) + &evaluate(&b));
    }

    #[test]
    fn normalize_agrees_with_free_product(u in word(4), v in word(4)) {
        let f = &FreePolynomial::word(u.clone()) * &FreePolynomial::word(v.clone());
        let expected = q_mul(
            &normalize(&[(BigInt::one(), u)]),
            &normalize(&[(BigInt::one(), v)]),
        );
        prop_assert_eq!(f.normalize(), expected);
    }
}

fn lie(grade: Grade, depth: u32) -> BoxedStrategy<GradedLieExpr> {
    let leaf = (1u32..=4)
        .prop_map(move |i| {
            GradedLieExpr::leaf(match grade {
                Grade::Even => GradedLetter::y(i),
                Grade::Odd => GradedLetter::z(i),
            })
        })
        .boxed();
    if depth == 0 {
        return leaf;
    }
    let split = match grade {
        Grade::Even => prop_oneof![Just((Grade::Even, Grade::Even)), Just((Grade::Odd, Grade::Odd))].boxed(),
        Grade::Odd => prop_oneof![Just((Grade::Even, Grade::Odd)), Just((Grade::Odd, Grade::Even))].boxed(),
    };
    let bracket = split
        .prop_flat_map(move |(a, b)| (lie(a, depth - 1), lie(b, depth - 1)))
        .prop_map(|(a, b)| GradedLieExpr::bracket(a, b));
    prop_oneof![leaf, bracket].boxed()
}

fn substitution() -> impl Strategy<Value = Substitution> {
    (
        lie(Grade::Even, 2),
        lie(Grade::Even, 2),
        lie(Grade::Odd, 2),
        lie(Grade::Odd, 2),
        lie(Grade::Odd, 2),
    )
        .prop_map(|(y1, y2, z1, z2, z3)| {
            let mut s = Substitution::new();
            s.insert(GradedLetter::y(1), y1);
            s.insert(GradedLetter::y(2), y2);
            s.insert(GradedLetter::z(1), z1);
            s.insert(GradedLetter::z(2), z2);
            s.insert(GradedLetter::z(3), z3);
            s
        })
}

#[test]
fn relations_vanish() {
    for r in defining_relations() {
        assert!(r.normalize().is_zero());
        assert!(is_graded_weak_identity(&r));
    }
}

proptest! {
    #[test]
    fn substituted_relations_vanish(sigma in substitution()) {
        for r in defining_relations() {
            let image = subst(&r.to_terms(), &sigma).unwrap();
            prop_assert!(image.is_zero(), "{}", image);
        }
    }

    #[test]
    fn substitution_commutes_with_evaluation(w in word(4), sigma in substitution()) {
        let image = subst(&[(BigInt::one(), w.clone())], &sigma).unwrap();
        let expected = w.letters().iter().fold(GMatrix2::identity(), |acc, l| {
            let m = sigma.get(l).map(|e| evaluate(&sl2pair::freealg::lie_to_poly(e)))
                .unwrap_or_else(|| l.evaluate());
            &acc * &m
        });
        prop_assert_eq!(evaluate(&image), expected);
    }
}

fn a(i: u32) -> MultiPoly {
    MultiPoly::var(IndexedVar::alpha(i))
}
fn b(i: u32) -> MultiPoly {
    MultiPoly::var(IndexedVar::beta(i))
}
fn g(i: u32) -> MultiPoly {
    MultiPoly::var(IndexedVar::gamma(i))
}
fn product(ps: impl IntoIterator<Item = MultiPoly>) -> MultiPoly {
    ps.into_iter().fold(MultiPoly::one(), |acc, p| &acc * &p)
}

proptest! {
    #[test]
    fn closed_form_evaluation(m in monomial_with(4, 6, 4)) {
        // y-part: diag(∏α, (-1)^k ∏α); z-part alternates β/γ from each corner
        let alphas = product(m.yexp().iter().enumerate().flat_map(|(i, &e)| {
            std::iter::repeat(a(i as u32 + 1)).take(e as usize)
        }));
        let ysign = if m.y_degree() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let zs = m.z_indices();
        let top = product(zs.iter().enumerate().map(|(k, &i)| if k % 2 == 0 { b(i) } else { g(i) }));
        let bottom = product(zs.iter().enumerate().map(|(k, &i)| if k % 2 == 0 { g(i) } else { b(i) }));
        let z_part = if zs.len() % 2 == 0 {
            GMatrix2::diag(top, bottom)
        } else {
            GMatrix2::off_diag(top, bottom)
        };
        let y_part = GMatrix2::diag(alphas.clone(), alphas.scale(&ysign));
        prop_assert_eq!(m.evaluate(), &y_part * &z_part);
    }
}

#[test]
fn generic_generators() {
    assert!(generic_y(4).trace().is_zero());
    assert!(generic_z(4).trace().is_zero());
    assert!(!is_graded_weak_identity(&QuotientPolynomial::from(CanonicalMonomial::y(1))));
}
