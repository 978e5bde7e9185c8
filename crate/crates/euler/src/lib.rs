//! Formal Satake parameters of an unramified GL(2) representation and the
//! multiset identities behind the factorization of Rankin–Selberg and triple
//! product Euler factors.
//!
//! A parameter is a multiset of Laurent monomials α^a β^b. Its Euler factor
//! is ∏(1 − γT)^{−1}; two factors agree as rational functions in T exactly
//! when the multisets agree.

mod identities;

pub use identities::{archimedean_degrees, check_factorization, ArchimedeanDegrees, FactorizationCheck, Identity};

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("unknown identity {0:?}; known: sym2_x_sym2, triple_product")]
    UnknownIdentity(String),
}

/// α^a β^b, stored as (a, b).
pub type Monomial = (i64, i64);

/// A Laurent polynomial in α, β with integer coefficients.
pub type LaurentPoly = BTreeMap<Monomial, i64>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SatakeMultiset {
    counts: BTreeMap<Monomial, u32>,
}

/// Serialized as the sorted list of exponent pairs [a, b], repeated by multiplicity.
impl Serialize for SatakeMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let elements = self.elements();
        let mut seq = serializer.serialize_seq(Some(elements.len()))?;
        for (a, b) in elements {
            seq.serialize_element(&[a, b])?;
        }
        seq.end()
    }
}

impl SatakeMultiset {
    pub fn new(items: impl IntoIterator<Item = Monomial>) -> Self {
        let mut counts = BTreeMap::new();
        for m in items {
            *counts.entry(m).or_insert(0) += 1;
        }
        Self { counts }
    }

    /// {α, β}.
    pub fn standard() -> Self {
        Self::new([(1, 0), (0, 1)])
    }

    /// {1}, the parameter of the trivial character.
    pub fn trivial() -> Self {
        Self::new([(0, 0)])
    }

    pub fn len(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, m: Monomial) -> u32 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    /// Elements in order, repeated by multiplicity.
    pub fn elements(&self) -> Vec<Monomial> {
        self.counts.iter().flat_map(|(&m, &c)| std::iter::repeat_n(m, c as usize)).collect()
    }

    /// Tensor product: all pairwise products.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), &c) in &self.counts {
            for (&(x, y), &d) in &other.counts {
                *out.counts.entry((a + x, b + y)).or_insert(0) += c * d;
            }
        }
        out
    }

    /// Multiset sum ⊎.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, &c) in &other.counts {
            *out.counts.entry(m).or_insert(0) += c;
        }
        out
    }

    /// Sym^k: products over size-k sub-multisets of the underlying list.
    /// For {α, β} this is {α^k, α^{k−1}β, …, β^k}.
    pub fn sym_power(&self, k: u32) -> Self {
        fn go(items: &[Monomial], start: usize, left: u32, acc: Monomial, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(acc);
                return;
            }
            for i in start..items.len() {
                go(items, i, left - 1, (acc.0 + items[i].0, acc.1 + items[i].1), out);
            }
        }
        let items = self.elements();
        let mut out = Vec::new();
        go(&items, 0, k, (0, 0), &mut out);
        Self::new(out)
    }

    /// Contragredient: negate every exponent.
    pub fn dual(&self) -> Self {
        Self { counts: self.counts.iter().map(|(&(a, b), &c)| ((-a, -b), c)).collect() }
    }

    /// Twist by the central character to the k-th power, i.e. multiply by (αβ)^k.
    pub fn twist(&self, k: i64) -> Self {
        Self { counts: self.counts.iter().map(|(&(a, b), &c)| ((a + k, b + k), c)).collect() }
    }

    /// (only in self, only in other), as multisets.
    pub fn diff(&self, other: &Self) -> (Self, Self) {
        let mut left = Self::default();
        let mut right = Self::default();
        let keys: std::collections::BTreeSet<_> = self.counts.keys().chain(other.counts.keys()).collect();
        for &m in keys {
            let (p, q) = (self.multiplicity(m), other.multiplicity(m));
            if p > q {
                left.counts.insert(m, p - q);
            } else if q > p {
                right.counts.insert(m, q - p);
            }
        }
        (left, right)
    }

    /// e_0, …, e_n of the elements, as Laurent polynomials in α, β.
    /// ∏(1 − γT) = Σ_k (−1)^k e_k T^k.
    pub fn elementary_symmetric(&self) -> Vec<LaurentPoly> {
        let mut e: Vec<LaurentPoly> = vec![LaurentPoly::from([((0, 0), 1)])];
        for (a, b) in self.elements() {
            // e_k ← e_k + γ·e_{k−1}, from the top down
            e.push(LaurentPoly::new());
            for k in (1..e.len()).rev() {
                let shifted: Vec<(Monomial, i64)> = e[k - 1].iter().map(|(&(x, y), &c)| ((x + a, y + b), c)).collect();
                for (m, c) in shifted {
                    let entry = e[k].entry(m).or_insert(0);
                    *entry += c;
                    if *entry == 0 {
                        e[k].remove(&m);
                    }
                }
            }
        }
        e
    }
}

fn monomial(f: &mut fmt::Formatter<'_>, (a, b): Monomial) -> fmt::Result {
    let pow = |f: &mut fmt::Formatter<'_>, v: &str, e: i64| match e {
        0 => Ok(()),
        1 => write!(f, "{v}"),
        e => write!(f, "{v}^{e}"),
    };
    if a == 0 && b == 0 {
        return write!(f, "1");
    }
    pow(f, "α", a)?;
    pow(f, "β", b)
}

impl fmt::Display for SatakeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.elements().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            monomial(f, m)?;
        }
        write!(f, "}}")
    }
}
