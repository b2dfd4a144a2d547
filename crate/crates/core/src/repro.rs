//! Regression suite for the published witness computations.
//!
//! Each [`Witness`] records a bracket `[[a, b], [c, d]]` together with the
//! inner brackets and the value as originally stated. Stated values are
//! parsed in the algebra, so they are compared after reduction mod p and
//! after the relations of u(L) have been applied. Each [`SpanClaim`] records
//! a stated basis for a subspace of u(L).

use std::collections::HashMap;

use crate::classify::Part;
use crate::corpus;
use crate::env::{EnvAlgebra, EnvElement, EnvSubspace, DEFAULT_BRUTE_FORCE_BUDGET};
use crate::error::Error;

#[derive(Clone, Copy, Debug)]
pub struct Witness {
    /// Table key, e.g. `"2.1"`.
    pub key: &'static str,
    pub algebra: &'static str,
    /// The part of u(L) the four factors are stated to lie in.
    pub part: Part,
    pub factors: [&'static str; 4],
    pub inner: [&'static str; 2],
    pub value: &'static str,
    /// Whether the value is stated to be nonzero.
    pub nonzero: bool,
}

const fn w(
    key: &'static str,
    algebra: &'static str,
    part: Part,
    factors: [&'static str; 4],
    inner: [&'static str; 2],
    value: &'static str,
) -> Witness {
    Witness { key, algebra, part, factors, inner, value, nonzero: true }
}

pub const WITNESSES: &[Witness] = &[
    w("2.1", "lemma2.1-p5", Part::Minus, ["a^2*w", "b", "a", "c^2*v"], ["2*a*v*w", "2*c*v*w"], "4*v*w^2"),
    w("2.1", "lemma2.1-p5", Part::Plus, ["2*a*c - w", "c^2", "a*v", "2*a*b - v"], ["4*c^2*w", "2*a*v^2"], "-16*c*v^2*w^2"),
    w("2.1", "lemma2.1-p3", Part::Minus, ["a^2*w", "b", "a", "c^2*v"], ["2*a*v*w", "2*c*v*w"], "4*v*w^2"),
    w("2.1", "lemma2.1-p3", Part::Plus, ["2*a*c - w", "c^2", "a*v", "2*a*b - v"], ["4*c^2*w", "2*a*v^2"], "-16*c*v^2*w^2"),
    w("2.2", "lemma2.2-p5", Part::Minus, ["x1*y1*w", "x2", "x1", "x2*y2^2"], ["y1*v*w", "y2^2*v"], "2*y2*v^2*w^2"),
    w("2.2", "lemma2.2-p5", Part::Plus, ["x1*y1", "x2*y1", "x1*y1", "y2^2"], ["y1^2*v", "2*x1*y2*w"], "4*x1*y1*v*w^2"),
    w("2.2", "lemma2.2-p3", Part::Minus, ["x1*y1*w", "x2", "x1", "x2*y2^2"], ["y1*v*w", "y2^2*v"], "2*y2*v^2*w^2"),
    w("2.2", "lemma2.2-p3", Part::Plus, ["x1*y1", "x2*y1", "x1*y1", "y2^2"], ["y1^2*v", "2*x1*y2*w"], "4*x1*y1*v*w^2"),
    w("2.3", "lemma2.3-p5", Part::Minus, ["2*x*y*w - v*w", "y", "x", "y"], ["2*v*y*w + w^2", "v"], "2*v*w^2"),
    w("2.3", "lemma2.3-p5", Part::Plus, ["x^2", "2*x*y - v", "y^2", "v*w"], ["4*x^2*v", "2*y*w^2"], "16*x*v^2*w^2 - 8*x^2*w^3"),
    w("2.3", "lemma2.3-p3", Part::Minus, ["2*x*y*w - v*w", "y", "x", "y"], ["2*v*y*w + w^2", "v"], "2*v*w^2"),
    w("2.3", "lemma2.3-p3", Part::Plus, ["x^2", "2*x*y - v", "y^2", "v*w"], ["4*x^2*v", "2*y*w^2"], "16*x*v^2*w^2 - 8*x^2*w^3"),
    w("2.5", "nonnilp-p5", Part::Minus, ["x", "y", "2*x*y^2 - 2*x*y + x", "y"], ["x", "2*x*y^2 - 2*x*y + x"], "4*x^2*y - 4*x^2"),
    w("2.5", "nonnilp-p5", Part::Plus, ["2*x*y - x", "y^2", "x^2", "2*x*y - x"], ["4*x*y^2 - 4*x*y + x", "4*x^3"], "48*(-x^3*y + 3*x^3 + x^4)"),
    w("2.7", "heis-p5-z0", Part::Plus, ["2*x*y - z", "y*z", "x^2", "2*x*y - z"], ["2*y*z^2", "4*x^2*z"], "-16*x*z^4"),
    w("2.7", "heis-p5-z0", Part::Minus, ["x^2*z", "y", "x^2*y - x*z", "y"], ["2*x*z^2", "2*x*y*z - z^2"], "4*x*z^4"),
];

/// What a stated subspace is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanTarget {
    Symmetric,
    Skew,
    /// Span of `a + T(a)`.
    Trace,
    /// `[u(L)^+, u(L)^+]`.
    SymmetricBracket,
}

impl SpanTarget {
    pub fn name(self) -> &'static str {
        match self {
            SpanTarget::Symmetric => "u(L)^+",
            SpanTarget::Skew => "u(L)^-",
            SpanTarget::Trace => "span{a + T(a)}",
            SpanTarget::SymmetricBracket => "[u(L)^+, u(L)^+]",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpanClaim {
    pub key: &'static str,
    pub algebra: &'static str,
    pub target: SpanTarget,
    pub basis: &'static [&'static str],
}

const SYM_DIM2: &[&str] = &["1", "2*x*y - x", "x^2", "y^2", "x^2*y^2 - 2*x^2*y"];
const SYM_CHAR2: &[&str] = &["x", "y", "z", "x*y", "y*z"];

pub const SPANS: &[SpanClaim] = &[
    SpanClaim { key: "2.6", algebra: "dim2-p3", target: SpanTarget::Symmetric, basis: SYM_DIM2 },
    SpanClaim { key: "2.6", algebra: "dim2-p3", target: SpanTarget::Trace, basis: SYM_DIM2 },
    SpanClaim {
        key: "2.6",
        algebra: "dim2-p3",
        target: SpanTarget::SymmetricBracket,
        basis: &["x^2*y - x^2", "x*y^2 - x*y + x"],
    },
    SpanClaim { key: "example", algebra: "char2-example", target: SpanTarget::Symmetric, basis: SYM_CHAR2 },
    SpanClaim { key: "example", algebra: "char2-example", target: SpanTarget::Skew, basis: SYM_CHAR2 },
];

/// A stated yes/no property of a whole subspace.
#[derive(Clone, Copy, Debug)]
pub struct MetabelianClaim {
    pub key: &'static str,
    pub algebra: &'static str,
    pub part: Part,
    pub metabelian: bool,
}

pub const METABELIAN_CLAIMS: &[MetabelianClaim] = &[
    MetabelianClaim { key: "2.6", algebra: "dim2-p3", part: Part::Plus, metabelian: true },
    MetabelianClaim { key: "example", algebra: "char2-example", part: Part::Plus, metabelian: true },
    MetabelianClaim { key: "example", algebra: "char2-example", part: Part::Minus, metabelian: true },
    MetabelianClaim { key: "example", algebra: "char2-example", part: Part::Full, metabelian: false },
];

/// Stated vanishing brackets `[a, b] = 0`.
pub const VANISHING: &[(&str, &str, [&str; 2])] = &[("2.6", "dim2-p3", ["x^2*y - x^2", "x*y^2 - x*y + x"])];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessOutcome {
    pub factors_in_part: bool,
    pub inner: [String; 2],
    pub inner_match: bool,
    pub value: String,
    /// The stated value after reduction in u(L).
    pub stated: String,
    pub value_match: bool,
    pub nonzero_match: bool,
}

impl WitnessOutcome {
    pub fn passed(&self) -> bool {
        self.factors_in_part && self.inner_match && self.value_match && self.nonzero_match
    }
}

fn in_part(alg: &EnvAlgebra, part: Part, e: &EnvElement) -> bool {
    let t = alg.antipode(e);
    match part {
        Part::Plus => t == *e,
        Part::Minus => t == alg.neg(e),
        Part::Full => true,
    }
}

impl Witness {
    pub fn evaluate(&self, alg: &EnvAlgebra) -> Result<WitnessOutcome, Error> {
        let f = self
            .factors
            .iter()
            .map(|t| alg.parse(t))
            .collect::<Result<Vec<_>, _>>()?;
        let l = alg.lie_bracket(&f[0], &f[1]);
        let r = alg.lie_bracket(&f[2], &f[3]);
        let v = alg.lie_bracket(&l, &r);
        let stated_inner = [alg.parse(self.inner[0])?, alg.parse(self.inner[1])?];
        let stated = alg.parse(self.value)?;
        Ok(WitnessOutcome {
            factors_in_part: f.iter().all(|e| in_part(alg, self.part, e)),
            inner_match: stated_inner[0] == l && stated_inner[1] == r,
            inner: [alg.format(&l), alg.format(&r)],
            value_match: stated == v,
            nonzero_match: !self.nonzero || !v.is_zero(),
            value: alg.format(&v),
            stated: alg.format(&stated),
        })
    }
}

fn target_subspace(alg: &EnvAlgebra, t: SpanTarget) -> Result<EnvSubspace, Error> {
    Ok(match t {
        SpanTarget::Symmetric => alg.symmetric_subspace(),
        SpanTarget::Skew => alg.skew_subspace(),
        SpanTarget::Trace => alg.trace_span()?,
        SpanTarget::SymmetricBracket => {
            let s = alg.symmetric_subspace();
            alg.subspace_bracket(&s, &s)
        }
    })
}

fn render(alg: &EnvAlgebra, s: &EnvSubspace) -> String {
    let parts: Vec<String> = s.canonical_basis().iter().map(|e| alg.format(e)).collect();
    format!("span{{{}}} (dim {})", parts.join(", "), s.dim())
}

/// One line of the regression table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReproCheck {
    pub key: &'static str,
    pub algebra: &'static str,
    pub claim: String,
    pub computed: String,
    pub passed: bool,
}

/// Builds corpus algebras on demand and keeps them for reuse.
#[derive(Default)]
pub struct AlgebraCache {
    built: HashMap<&'static str, EnvAlgebra>,
}

impl AlgebraCache {
    pub fn get(&mut self, name: &'static str) -> Result<&EnvAlgebra, Error> {
        if !self.built.contains_key(name) {
            let entry = corpus::lookup(name)?;
            let alg = EnvAlgebra::build(entry.spec(), u64::MAX)?;
            self.built.insert(name, alg);
        }
        Ok(&self.built[name])
    }
}

pub fn check_witness(cache: &mut AlgebraCache, w: &Witness) -> Result<ReproCheck, Error> {
    let alg = cache.get(w.algebra)?;
    let o = w.evaluate(alg)?;
    let claim = format!(
        "[[{}, {}], [{}, {}]] = [{}, {}] = {}{}",
        w.factors[0],
        w.factors[1],
        w.factors[2],
        w.factors[3],
        w.inner[0],
        w.inner[1],
        w.value,
        if w.nonzero { " != 0" } else { "" }
    );
    let mut computed = format!("[{}, {}] = {} (stated value reduces to {})", o.inner[0], o.inner[1], o.value, o.stated);
    if !o.factors_in_part {
        computed.push_str(&format!("; factors not all in {}", w.part.label()));
    }
    Ok(ReproCheck { key: w.key, algebra: w.algebra, claim, computed, passed: o.passed() })
}

pub fn check_span(cache: &mut AlgebraCache, c: &SpanClaim) -> Result<ReproCheck, Error> {
    let alg = cache.get(c.algebra)?;
    let stated = c.basis.iter().map(|t| alg.parse(t)).collect::<Result<Vec<_>, _>>()?;
    let stated = EnvSubspace::from_elements(alg, stated);
    let actual = target_subspace(alg, c.target)?;
    Ok(ReproCheck {
        key: c.key,
        algebra: c.algebra,
        claim: format!("{} = span{{{}}}", c.target.name(), c.basis.join(", ")),
        computed: render(alg, &actual),
        passed: actual.same_span(&stated),
    })
}

pub fn check_metabelian(cache: &mut AlgebraCache, c: &MetabelianClaim) -> Result<ReproCheck, Error> {
    let alg = cache.get(c.algebra)?;
    let s = c.part.subspace(alg);
    let fast = alg.is_lie_metabelian(&s);
    let slow = alg.brute_force_metabelian(&s, DEFAULT_BRUTE_FORCE_BUDGET)?;
    let verdict = |b: bool| if b { "metabelian" } else { "not metabelian" };
    Ok(ReproCheck {
        key: c.key,
        algebra: c.algebra,
        claim: format!("{} is {}", c.part.label(), verdict(c.metabelian)),
        computed: format!("{} (quadruple enumeration: {})", verdict(fast.holds), verdict(slow.holds)),
        passed: fast.holds == c.metabelian && slow.holds == c.metabelian,
    })
}

pub fn check_vanishing(cache: &mut AlgebraCache, key: &'static str, algebra: &'static str, pair: [&str; 2]) -> Result<ReproCheck, Error> {
    let alg = cache.get(algebra)?;
    let v = alg.lie_bracket(&alg.parse(pair[0])?, &alg.parse(pair[1])?);
    Ok(ReproCheck {
        key,
        algebra,
        claim: format!("[{}, {}] = 0", pair[0], pair[1]),
        computed: alg.format(&v),
        passed: v.is_zero(),
    })
}

/// Runs every witness, span and metabelian claim.
pub fn run_all() -> Result<Vec<ReproCheck>, Error> {
    let mut cache = AlgebraCache::default();
    let mut out = Vec::new();
    for w in WITNESSES {
        out.push(check_witness(&mut cache, w)?);
    }
    for c in SPANS {
        out.push(check_span(&mut cache, c)?);
    }
    for &(key, algebra, pair) in VANISHING {
        out.push(check_vanishing(&mut cache, key, algebra, pair)?);
    }
    for c in METABELIAN_CLAIMS {
        out.push(check_metabelian(&mut cache, c)?);
    }
    out.sort_by(|a, b| a.key.cmp(b.key));
    Ok(out)
}
