//! Independent reference implementation of u(L) by word rewriting.
//!
//! Elements are maps from words (sequences of basis indices) to coefficients
//! mod p. Normalisation repeatedly rewrites the first descent `..ab..` with
//! `a > b` into `..ba.. + ..[a,b]..` and the first run of p equal letters into
//! the p-map image, until every word is nondecreasing with multiplicities
//! below p. Nothing here shares code with the engine beyond reading the
//! structure constants.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rla_core::env::{EnvAlgebra, EnvElement};
use rla_core::lie::LieAlgebraSpec;

pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem(pub BTreeMap<Word, u64>);

pub struct Oracle {
    pub p: u64,
    pub n: usize,
    pub names: Vec<String>,
    bracket: Vec<Vec<Vec<u64>>>,
    pmap: Vec<Vec<u64>>,
}

impl Oracle {
    pub fn new(spec: &LieAlgebraSpec) -> Self {
        let n = spec.dim();
        let wide = |v: &[u32]| v.iter().map(|&c| c as u64).collect::<Vec<_>>();
        Oracle {
            p: spec.p() as u64,
            n,
            names: spec.names().to_vec(),
            bracket: (0..n).map(|i| (0..n).map(|j| wide(spec.basis_bracket(i, j))).collect()).collect(),
            pmap: (0..n).map(|i| wide(spec.basis_pmap(i))).collect(),
        }
    }

    fn add_term(&self, e: &mut Elem, w: Word, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let slot = e.0.entry(w.clone()).or_insert(0);
        *slot = (*slot + c) % self.p;
        if *slot == 0 {
            e.0.remove(&w);
        }
    }

    pub fn scalar(&self, c: u64) -> Elem {
        let mut e = Elem::default();
        self.add_term(&mut e, vec![], c);
        e
    }

    pub fn letter(&self, i: usize) -> Elem {
        let mut e = Elem::default();
        self.add_term(&mut e, vec![i], 1);
        e
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = a.clone();
        for (w, &c) in &b.0 {
            self.add_term(&mut out, w.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: u64, a: &Elem) -> Elem {
        let mut out = Elem::default();
        for (w, &c) in &a.0 {
            self.add_term(&mut out, w.clone(), (k % self.p) * c);
        }
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.scale(self.p - 1, b))
    }

    /// The first position where `w` is not in normal form, with the rewrite
    /// that applies there.
    fn rewrite(&self, w: &Word) -> Option<Vec<(Word, u64)>> {
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a > b {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut out = vec![(swapped, 1)];
                for (k, &c) in self.bracket[a][b].iter().enumerate() {
                    if c != 0 {
                        let mut v = w[..i].to_vec();
                        v.push(k);
                        v.extend_from_slice(&w[i + 2..]);
                        out.push((v, c));
                    }
                }
                return Some(out);
            }
        }
        let p = self.p as usize;
        for i in 0..w.len() {
            if i + p <= w.len() && w[i..i + p].iter().all(|&x| x == w[i]) {
                let mut out = Vec::new();
                for (k, &c) in self.pmap[w[i]].iter().enumerate() {
                    if c != 0 {
                        let mut v = w[..i].to_vec();
                        v.push(k);
                        v.extend_from_slice(&w[i + p..]);
                        out.push((v, c));
                    }
                }
                return Some(out);
            }
        }
        None
    }

    pub fn normalize(&self, a: &Elem) -> Elem {
        let mut todo: Vec<(Word, u64)> = a.0.iter().map(|(w, &c)| (w.clone(), c)).collect();
        let mut out = Elem::default();
        while let Some((w, c)) = todo.pop() {
            match self.rewrite(&w) {
                None => self.add_term(&mut out, w, c),
                Some(parts) => todo.extend(parts.into_iter().map(|(v, k)| (v, k * c % self.p))),
            }
        }
        out
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut raw = Elem::default();
        for (u, &c) in &a.0 {
            for (v, &d) in &b.0 {
                let mut w = u.clone();
                w.extend_from_slice(v);
                self.add_term(&mut raw, w, c * d);
            }
        }
        self.normalize(&raw)
    }

    pub fn bracket(&self, a: &Elem, b: &Elem) -> Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn antipode(&self, a: &Elem) -> Elem {
        let mut raw = Elem::default();
        for (w, &c) in &a.0 {
            let mut r = w.clone();
            r.reverse();
            let c = if w.len() % 2 == 1 { (self.p - c) % self.p } else { c };
            self.add_term(&mut raw, r, c);
        }
        self.normalize(&raw)
    }

    pub fn pow(&self, a: &Elem, e: u64) -> Elem {
        let mut out = self.scalar(1);
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    /// Parses `c*x^2*y - 3*(x + y)` style expressions.
    pub fn parse(&self, src: &str) -> Elem {
        let tokens = tokenize(src);
        let mut pos = 0;
        let e = self.parse_sum(&tokens, &mut pos);
        assert_eq!(pos, tokens.len(), "trailing input in {src}");
        e
    }

    fn parse_sum(&self, t: &[String], pos: &mut usize) -> Elem {
        let mut sign = 1;
        if t.get(*pos).is_some_and(|s| s == "-" || s == "+") {
            sign = if t[*pos] == "-" { self.p - 1 } else { 1 };
            *pos += 1;
        }
        let mut acc = self.scale(sign, &self.parse_product(t, pos));
        while let Some(op) = t.get(*pos).filter(|s| *s == "+" || *s == "-").cloned() {
            *pos += 1;
            let rhs = self.parse_product(t, pos);
            acc = if op == "+" { self.add(&acc, &rhs) } else { self.sub(&acc, &rhs) };
        }
        acc
    }

    fn parse_product(&self, t: &[String], pos: &mut usize) -> Elem {
        let mut acc = self.parse_power(t, pos);
        while t.get(*pos).is_some_and(|s| s == "*") {
            *pos += 1;
            acc = self.mul(&acc, &self.parse_power(t, pos));
        }
        acc
    }

    fn parse_power(&self, t: &[String], pos: &mut usize) -> Elem {
        let base = self.parse_atom(t, pos);
        if t.get(*pos).is_some_and(|s| s == "^") {
            *pos += 1;
            let e: u64 = t[*pos].parse().expect("integer exponent");
            *pos += 1;
            self.pow(&base, e)
        } else {
            base
        }
    }

    fn parse_atom(&self, t: &[String], pos: &mut usize) -> Elem {
        let tok = t[*pos].clone();
        *pos += 1;
        if tok == "(" {
            let e = self.parse_sum(t, pos);
            assert_eq!(t[*pos], ")");
            *pos += 1;
            e
        } else if let Ok(c) = tok.parse::<u64>() {
            self.scalar(c % self.p)
        } else {
            let i = self.names.iter().position(|n| *n == tok).unwrap_or_else(|| panic!("unknown name {tok}"));
            self.letter(i)
        }
    }

    /// Converts to the engine's representation through exponent vectors.
    pub fn to_engine(&self, alg: &EnvAlgebra, a: &Elem) -> EnvElement {
        let mut out = EnvElement::zero();
        for (w, &c) in &a.0 {
            let mut e = vec![0u32; self.n];
            for &i in w {
                e[i] += 1;
            }
            let m = alg.monomial_from_exponents(&e).expect("normal words have exponents below p");
            out = alg.add(&out, &alg.scale(c as u32, &EnvElement::monomial(m)));
        }
        out
    }

    /// Converts from the engine's representation by expanding exponents into words.
    pub fn from_engine(&self, alg: &EnvAlgebra, a: &EnvElement) -> Elem {
        let mut out = Elem::default();
        for &(m, c) in a.terms() {
            let w: Word = alg.exponents(m).iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect();
            self.add_term(&mut out, w, c as u64);
        }
        out
    }
}

fn tokenize(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            cur.push(ch);
            continue;
        }
        if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        if !ch.is_whitespace() {
            out.push(ch.to_string());
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Rank of a matrix over F_p by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| {
        let mut r = 1;
        for _ in 0..p - 2 {
            r = r * a % p;
        }
        r
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] % p != 0) else { continue };
        rows.swap(r, k);
        let s = inv(rows[r][c] % p);
        let pivot: Vec<u64> = rows[r].iter().map(|&x| x * s % p).collect();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] % p != 0 {
                let f = row[c] % p;
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

impl Oracle {
    /// All normal words, in no particular order.
    pub fn normal_words(&self) -> Vec<Word> {
        let mut out = vec![vec![]];
        for i in 0..self.n {
            let mut next = Vec::new();
            for w in &out {
                for k in 0..self.p as usize {
                    let mut v = w.clone();
                    v.extend(std::iter::repeat_n(i, k));
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// Coordinates of `a` against the given list of words.
    pub fn coords(&self, words: &[Word], a: &Elem) -> Vec<u64> {
        words.iter().map(|w| a.0.get(w).copied().unwrap_or(0)).collect()
    }

    pub fn word(&self, w: &Word) -> Elem {
        let mut e = Elem::default();
        self.add_term(&mut e, w.clone(), 1);
        e
    }

    /// Dimension of the span of the given elements.
    pub fn span_dim(&self, elems: &[Elem]) -> usize {
        let words = self.normal_words();
        rank(elems.iter().map(|e| self.coords(&words, e)).collect(), self.p)
    }

    /// Dimension of `{a : T(a) = sign·a}`.
    pub fn eigenspace_dim(&self, sign: i64) -> usize {
        let words = self.normal_words();
        let rows: Vec<Vec<u64>> = words
            .iter()
            .map(|w| {
                let e = self.word(w);
                let shifted = if sign > 0 { self.sub(&self.antipode(&e), &e) } else { self.add(&self.antipode(&e), &e) };
                self.coords(&words, &shifted)
            })
            .collect();
        words.len() - rank(rows, self.p)
    }
}
