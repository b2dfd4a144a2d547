//! The restricted enveloping algebra u(L).
//!
//! Elements are finite linear combinations of ordered PBW monomials
//! `b_1^{e_1} ⋯ b_n^{e_n}` with `0 <= e_i < p`. A monomial is stored as its
//! mixed-radix index `Σ e_i p^{n-1-i}`, so numeric order on indices is the
//! lexicographic order on exponent vectors (first generator most significant).
//!
//! Multiplication reduces to left multiplication by a single generator on a
//! monomial. Moving `b_j` past `b_k` with `k < j` uses
//! `b_j b_k = b_k b_j + [b_j, b_k]`, and an exponent reaching `p` is replaced by
//! the p-map image. Those generator products are memoized, as are full
//! monomial products and antipodes of monomials.

mod expr;
mod subspace;

pub use subspace::{DerivedLength, EnvSubspace, MetabelianCheck, MetabelianWitness, SolvableCheck};

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::Error;
use crate::field::Fp;
use crate::lie::{LieAlgebraSpec, LieElement};
use crate::linalg::SparseVec;

/// Default size guard on `dim u(L) = p^n`.
pub const DEFAULT_MAX_DIM: u64 = 1 << 16;

/// Default budget for the quadruple-enumeration oracle.
pub const DEFAULT_BRUTE_FORCE_BUDGET: u64 = 100_000_000;

/// PBW monomial, by mixed-radix index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const UNIT: Monomial = Monomial(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finitely supported map from monomials to nonzero scalars, sorted by monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EnvElement {
    terms: Vec<(Monomial, u32)>,
}

impl EnvElement {
    pub fn zero() -> Self {
        EnvElement { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::UNIT)
    }

    pub fn monomial(m: Monomial) -> Self {
        EnvElement { terms: vec![(m, 1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> u32 {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.terms.iter().map(|&(m, c)| (m.index(), c)).collect()
    }

    pub fn from_sparse(v: &[(usize, u32)]) -> Self {
        EnvElement { terms: v.iter().filter(|t| t.1 != 0).map(|&(i, c)| (Monomial(i as u32), c)).collect() }
    }
}

/// Unsorted accumulator; `finish` sorts, merges and reduces.
struct LinComb {
    field: Fp,
    raw: Vec<(u32, u64)>,
}

impl LinComb {
    fn new(field: Fp) -> Self {
        LinComb { field, raw: Vec::new() }
    }

    fn add_scaled(&mut self, c: u32, e: &EnvElement) {
        if c == 0 {
            return;
        }
        let f = self.field;
        self.raw.extend(e.terms.iter().map(|&(m, x)| (m.0, f.mul(c, x) as u64)));
    }

    fn finish(mut self) -> EnvElement {
        let p = self.field.p() as u64;
        self.raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(Monomial, u32)> = Vec::with_capacity(self.raw.len());
        let mut iter = self.raw.into_iter();
        let Some((mut cur, mut acc)) = iter.next() else {
            return EnvElement::zero();
        };
        for (m, c) in iter {
            if m == cur {
                acc += c;
            } else {
                let r = (acc % p) as u32;
                if r != 0 {
                    terms.push((Monomial(cur), r));
                }
                cur = m;
                acc = c;
            }
        }
        let r = (acc % p) as u32;
        if r != 0 {
            terms.push((Monomial(cur), r));
        }
        EnvElement { terms }
    }
}

type Cache<K> = RwLock<HashMap<K, Arc<EnvElement>>>;

fn cached<K: std::hash::Hash + Eq + Copy>(
    cache: &Cache<K>,
    key: K,
    compute: impl FnOnce() -> EnvElement,
) -> Arc<EnvElement> {
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let value = Arc::new(compute());
    cache.write().expect("cache lock").entry(key).or_insert(value).clone()
}

/// `u(L)` for a fixed spec.
pub struct EnvAlgebra {
    spec: LieAlgebraSpec,
    field: Fp,
    n: usize,
    dim: u64,
    strides: Vec<u32>,
    bracket_terms: Vec<Vec<(usize, u32)>>,
    pmap_terms: Vec<Vec<(usize, u32)>>,
    gen_cache: Cache<(u32, u32)>,
    pair_cache: Cache<(u32, u32)>,
    antipode_cache: Cache<u32>,
}

impl std::fmt::Debug for EnvAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnvAlgebra").field("p", &self.field.p()).field("n", &self.n).field("dim", &self.dim).finish()
    }
}

fn sparse(v: &[u32]) -> Vec<(usize, u32)> {
    v.iter().enumerate().filter(|t| *t.1 != 0).map(|(i, &c)| (i, c)).collect()
}

impl EnvAlgebra {
    /// Prepares `u(L)`; fails when `p^n` exceeds `max_dim`.
    pub fn build(spec: LieAlgebraSpec, max_dim: u64) -> Result<Self, Error> {
        let n = spec.dim();
        let p = spec.p() as u128;
        let dim = p.checked_pow(n as u32).unwrap_or(u128::MAX);
        let limit = max_dim.min(u32::MAX as u64);
        if dim > limit as u128 {
            return Err(Error::SizeLimit { dim, max: max_dim });
        }
        let strides = (0..n).map(|i| (p as u32).pow((n - 1 - i) as u32)).collect();
        let bracket_terms =
            (0..n * n).map(|ij| sparse(spec.basis_bracket(ij / n.max(1), ij % n.max(1)))).collect();
        let pmap_terms = (0..n).map(|i| sparse(spec.basis_pmap(i))).collect();
        Ok(EnvAlgebra {
            field: spec.field(),
            n,
            dim: dim as u64,
            strides,
            bracket_terms,
            pmap_terms,
            spec,
            gen_cache: RwLock::default(),
            pair_cache: RwLock::default(),
            antipode_cache: RwLock::default(),
        })
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// `p^n`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> {
        (0..self.dim as u32).map(Monomial)
    }

    #[inline]
    pub fn exponent(&self, m: Monomial, i: usize) -> u32 {
        (m.0 / self.strides[i]) % self.field.p()
    }

    pub fn exponents(&self, m: Monomial) -> Vec<u32> {
        (0..self.n).map(|i| self.exponent(m, i)).collect()
    }

    pub fn degree(&self, m: Monomial) -> u32 {
        (0..self.n).map(|i| self.exponent(m, i)).sum()
    }

    pub fn monomial_from_exponents(&self, e: &[u32]) -> Result<Monomial, Error> {
        if e.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: e.len() });
        }
        if let Some(&bad) = e.iter().find(|&&x| x >= self.field.p()) {
            return Err(Error::Malformed(format!("exponent {bad} is not below p = {}", self.field.p())));
        }
        Ok(Monomial(e.iter().zip(&self.strides).map(|(&x, &s)| x * s).sum()))
    }

    fn first_index(&self, m: Monomial) -> usize {
        (0..self.n).find(|&i| self.exponent(m, i) != 0).unwrap_or(self.n)
    }

    fn last_index(&self, m: Monomial) -> Option<usize> {
        (0..self.n).rev().find(|&i| self.exponent(m, i) != 0)
    }

    pub fn generator(&self, i: usize) -> EnvElement {
        EnvElement::monomial(Monomial(self.strides[i]))
    }

    pub fn embed(&self, x: &LieElement) -> EnvElement {
        let mut terms: Vec<(Monomial, u32)> = x
            .coords()
            .iter()
            .enumerate()
            .filter(|t| *t.1 != 0)
            .map(|(i, &c)| (Monomial(self.strides[i]), c))
            .collect();
        terms.sort_unstable_by_key(|t| t.0);
        EnvElement { terms }
    }

    pub fn constant(&self, c: u32) -> EnvElement {
        let c = c % self.field.p();
        if c == 0 {
            EnvElement::zero()
        } else {
            EnvElement { terms: vec![(Monomial::UNIT, c)] }
        }
    }

    pub fn add(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        acc.add_scaled(1, a);
        acc.add_scaled(1, b);
        acc.finish()
    }

    pub fn sub(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        acc.add_scaled(1, a);
        acc.add_scaled(self.field.neg(1), b);
        acc.finish()
    }

    pub fn scale(&self, c: u32, a: &EnvElement) -> EnvElement {
        let c = c % self.field.p();
        if c == 0 {
            return EnvElement::zero();
        }
        EnvElement { terms: a.terms.iter().map(|&(m, x)| (m, self.field.mul(c, x))).collect() }
    }

    pub fn neg(&self, a: &EnvElement) -> EnvElement {
        self.scale(self.field.neg(1), a)
    }

    /// `Σ c_i a_i`.
    pub fn linear_combination<'a>(&self, parts: impl IntoIterator<Item = (u32, &'a EnvElement)>) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        for (c, e) in parts {
            acc.add_scaled(c % self.field.p(), e);
        }
        acc.finish()
    }

    /// `b_j · m`, memoized.
    fn gen_times(&self, j: usize, m: Monomial) -> Arc<EnvElement> {
        cached(&self.gen_cache, (j as u32, m.0), || self.straighten_gen(j, m))
    }

    fn straighten_gen(&self, j: usize, m: Monomial) -> EnvElement {
        let k = self.first_index(m);
        if j < k {
            return EnvElement::monomial(Monomial(m.0 + self.strides[j]));
        }
        let mut acc = LinComb::new(self.field);
        if j == k {
            let e = self.exponent(m, k);
            if e + 1 < self.field.p() {
                return EnvElement::monomial(Monomial(m.0 + self.strides[j]));
            }
            // b_j^p · rest = b_j^[p] · rest
            let rest = Monomial(m.0 - e * self.strides[k]);
            for &(i, c) in &self.pmap_terms[j] {
                acc.add_scaled(c, &self.gen_times(i, rest));
            }
            return acc.finish();
        }
        // b_j b_k x = b_k (b_j x) + [b_j, b_k] x
        let x = Monomial(m.0 - self.strides[k]);
        let inner = self.gen_times(j, x);
        for &(t, c) in &inner.terms {
            acc.add_scaled(c, &self.gen_times(k, t));
        }
        for &(i, c) in &self.bracket_terms[j * self.n + k] {
            acc.add_scaled(c, &self.gen_times(i, x));
        }
        acc.finish()
    }

    fn left_gen(&self, j: usize, e: &EnvElement) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        for &(m, c) in &e.terms {
            acc.add_scaled(c, &self.gen_times(j, m));
        }
        acc.finish()
    }

    /// Product of two PBW monomials, memoized.
    pub fn monomial_product(&self, s: Monomial, t: Monomial) -> Arc<EnvElement> {
        if s == Monomial::UNIT {
            return Arc::new(EnvElement::monomial(t));
        }
        if t == Monomial::UNIT {
            return Arc::new(EnvElement::monomial(s));
        }
        if let Some(last) = self.last_index(s) {
            let first = self.first_index(t);
            let p = self.field.p();
            if last < first || (last == first && self.exponent(s, last) + self.exponent(t, first) < p) {
                return Arc::new(EnvElement::monomial(Monomial(s.0 + t.0)));
            }
        }
        cached(&self.pair_cache, (s.0, t.0), || {
            let mut acc = EnvElement::monomial(t);
            for i in (0..self.n).rev() {
                for _ in 0..self.exponent(s, i) {
                    acc = self.left_gen(i, &acc);
                }
            }
            acc
        })
    }

    pub fn multiply(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        for &(s, x) in &a.terms {
            for &(t, y) in &b.terms {
                acc.add_scaled(self.field.mul(x, y), &self.monomial_product(s, t));
            }
        }
        acc.finish()
    }

    /// Product of a sequence, left to right; the empty product is 1.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a EnvElement>) -> EnvElement {
        factors.into_iter().fold(EnvElement::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn power(&self, a: &EnvElement, e: u64) -> EnvElement {
        let mut acc = EnvElement::one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `ab - ba`.
    pub fn lie_bracket(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        self.sub(&self.multiply(a, b), &self.multiply(b, a))
    }

    /// Balanced bracket `[x_1, …, x_{2^{k+1}}]^o`: the bracket of the
    /// balanced brackets of the two halves, with `[x_1, x_2]^o = [x_1, x_2]`.
    pub fn solvable_bracket(&self, elements: &[EnvElement]) -> Result<EnvElement, Error> {
        let len = elements.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadBracketLength(len));
        }
        if len == 2 {
            return Ok(self.lie_bracket(&elements[0], &elements[1]));
        }
        let (l, r) = elements.split_at(len / 2);
        Ok(self.lie_bracket(&self.solvable_bracket(l)?, &self.solvable_bracket(r)?))
    }

    fn antipode_monomial(&self, m: Monomial) -> Arc<EnvElement> {
        cached(&self.antipode_cache, m.0, || {
            // reversed word b_n^{e_n} ⋯ b_1^{e_1}, built by left multiplication
            let mut acc = EnvElement::one();
            for i in 0..self.n {
                for _ in 0..self.exponent(m, i) {
                    acc = self.left_gen(i, &acc);
                }
            }
            if self.degree(m) % 2 == 1 {
                self.neg(&acc)
            } else {
                acc
            }
        })
    }

    /// The principal involution: the antiautomorphism with `x ↦ -x` on L.
    pub fn antipode(&self, a: &EnvElement) -> EnvElement {
        let mut acc = LinComb::new(self.field);
        for &(m, c) in &a.terms {
            acc.add_scaled(c, &self.antipode_monomial(m));
        }
        acc.finish()
    }

    /// Reads a degree-one element back as a Lie element.
    pub fn as_lie_element(&self, e: &EnvElement) -> Option<LieElement> {
        let mut coords = vec![0u32; self.n];
        for &(m, c) in &e.terms {
            let i = (0..self.n).find(|&i| m.0 == self.strides[i])?;
            coords[i] = c;
        }
        Some(LieElement::new(coords))
    }

    /// `x^[p]` as the associative p-th power in u(L).
    pub fn lie_pmap(&self, x: &LieElement) -> Result<LieElement, Error> {
        let pow = self.power(&self.embed(x), self.field.p() as u64);
        self.as_lie_element(&pow).ok_or_else(|| Error::PowerEscapes(self.spec.describe(x.coords())))
    }

    /// Canonical text form: terms in increasing monomial order, written
    /// `c*b1^e1*...`, with coefficient 1, exponent 1 and the unit factor omitted.
    pub fn format(&self, e: &EnvElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let names = self.spec.names();
        let terms: Vec<String> = e
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut factors: Vec<String> = Vec::new();
                for i in 0..self.n {
                    match self.exponent(m, i) {
                        0 => {}
                        1 => factors.push(names[i].clone()),
                        k => factors.push(format!("{}^{k}", names[i])),
                    }
                }
                match (c, factors.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => factors.join("*"),
                    _ => format!("{c}*{}", factors.join("*")),
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Parses an expression such as `2*x*y - x` or `x^2*y^2 - 2*x^2*y`.
    ///
    /// Products are words: `y*x` is straightened to `x*y - [x,y]`. Integer
    /// coefficients are reduced modulo p.
    pub fn parse(&self, text: &str) -> Result<EnvElement, Error> {
        expr::parse(self, text)
    }
}
