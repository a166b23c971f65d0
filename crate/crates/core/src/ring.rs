//! Exact commutative polynomials over the integers in the indexed variables
//! `α_i`, `β_i`, `γ_i`. These are the entries of the generic matrices.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Variable family of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
}

impl Family {
    fn symbol(self) -> &'static str {
        match self {
            Family::Alpha => "a",
            Family::Beta => "b",
            Family::Gamma => "g",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexedVar {
    pub family: Family,
    pub index: u32,
}

impl IndexedVar {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        IndexedVar { family, index }
    }

    pub fn alpha(index: u32) -> Self {
        Self::new(Family::Alpha, index)
    }

    pub fn beta(index: u32) -> Self {
        Self::new(Family::Beta, index)
    }

    pub fn gamma(index: u32) -> Self {
        Self::new(Family::Gamma, index)
    }
}

impl fmt::Display for IndexedVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

/// A power product of indexed variables. Sorted by variable, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PowerProduct(Vec<(IndexedVar, u32)>);

impl PowerProduct {
    pub fn one() -> Self {
        PowerProduct(Vec::new())
    }

    pub fn var(v: IndexedVar) -> Self {
        PowerProduct(vec![(v, 1)])
    }

    pub fn from_exponents<I: IntoIterator<Item = (IndexedVar, u32)>>(it: I) -> Self {
        let mut map: BTreeMap<IndexedVar, u32> = BTreeMap::new();
        for (v, e) in it {
            *map.entry(v).or_insert(0) += e;
        }
        PowerProduct(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponents(&self) -> &[(IndexedVar, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: IndexedVar) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &PowerProduct) -> PowerProduct {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        PowerProduct(out)
    }
}

// Graded, then lexicographic on (family, index, exponent).
impl Ord for PowerProduct {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PowerProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `ℤ[α_i, β_i, γ_i]`.
///
/// The term map never stores a zero coefficient, so two equal polynomials
/// always have identical representations and `==` is exact equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<PowerProduct, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, PowerProduct::one())
    }

    pub fn var(v: IndexedVar) -> Self {
        Self::term(BigInt::one(), PowerProduct::var(v))
    }

    pub fn term(c: BigInt, m: PowerProduct) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&PowerProduct, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PowerProduct) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// True when every term only involves variables of the given families.
    pub fn uses_only(&self, families: &[Family]) -> bool {
        self.terms
            .keys()
            .all(|m| m.exponents().iter().all(|(v, _)| families.contains(&v.family)))
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    fn add_term(&mut self, m: PowerProduct, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32) -> MultiPoly {
        MultiPoly::var(IndexedVar::alpha(i))
    }
    fn b(i: u32) -> MultiPoly {
        MultiPoly::var(IndexedVar::beta(i))
    }
    fn g(i: u32) -> MultiPoly {
        MultiPoly::var(IndexedVar::gamma(i))
    }
    fn k(c: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(c))
    }

    #[test]
    fn additive_inverse_cancels() {
        let s = &a(1) + &(-&a(1));
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn like_terms_merge() {
        let t = &a(1) * &b(2);
        let s = &t + &t;
        assert_eq!(s, t.scale(&BigInt::from(2)));
        assert_eq!(s.to_string(), "2*a1*b2");
    }

    #[test]
    fn constants_cancel_in_sum() {
        let bg = &b(1) * &g(2);
        let p = &bg + &k(1);
        let q = &bg - &k(1);
        assert_eq!(&p + &q, bg.scale(&BigInt::from(2)));
    }

    #[test]
    fn products() {
        assert_eq!((&a(1) * &a(1)).to_string(), "a1^2");
        assert!((&a(1) * &MultiPoly::zero()).is_zero());
        let lhs = &(&b(1) + &g(1)) * &(&b(1) - &g(1));
        let rhs = &(&b(1) * &b(1)) - &(&g(1) * &g(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_tests() {
        assert!(MultiPoly::zero().is_zero());
        assert!(!a(3).is_zero());
        let ab = &a(1) * &b(1);
        assert!((&ab - &ab).is_zero());
    }

    #[test]
    fn power_product_normalizes() {
        let p = PowerProduct::from_exponents([
            (IndexedVar::beta(2), 1),
            (IndexedVar::alpha(1), 0),
            (IndexedVar::beta(2), 2),
        ]);
        assert_eq!(p.exponents(), &[(IndexedVar::beta(2), 3)]);
        assert_eq!(p.exponent(IndexedVar::alpha(1)), 0);
    }
}
