//! Line-oriented rendering of results, either aligned text or `key = value`.

use crate::classify::{ClassificationReport, Part, Verdict, VerifyRecord};
use crate::env::{DerivedLength, EnvAlgebra, MetabelianCheck, MetabelianWitness, SolvableCheck};
use crate::lie::{LieAlgebraSpec, ValidationReport};
use crate::linalg::Subspace;
use crate::repro::ReproCheck;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Kv,
}

/// An ordered list of `(key, value)` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.lines.push((key.into(), value.to_string()));
        self
    }

    pub fn extend(&mut self, prefix: &str, other: Report) -> &mut Self {
        for (k, v) in other.lines {
            self.lines.push((format!("{prefix}.{k}"), v));
        }
        self
    }

    pub fn lines(&self) -> &[(String, String)] {
        &self.lines
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Kv => {
                for (k, v) in &self.lines {
                    out.push_str(&format!("{k} = {v}\n"));
                }
            }
            Format::Text => {
                let width = self.lines.iter().map(|(k, _)| k.len() + 1).max().unwrap_or(0);
                for (k, v) in &self.lines {
                    out.push_str(&format!("{:width$}  {v}\n", format!("{k}:")));
                }
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn span(spec: &LieAlgebraSpec, s: &Subspace) -> String {
    let rows: Vec<String> = s.rows().iter().map(|r| spec.describe(r)).collect();
    format!("{{{}}}", rows.join(", "))
}

pub fn validation(spec: &LieAlgebraSpec, r: &ValidationReport) -> Report {
    let names = spec.names();
    let mut out = Report::new();
    out.push("valid", yes_no(r.is_valid()));
    out.push("jacobi_failures", r.jacobi.len());
    for t in &r.jacobi {
        out.push("jacobi", format!("({}, {}, {})", names[t[0]], names[t[1]], names[t[2]]));
    }
    out.push("jacobson_failures", r.jacobson.len());
    for &i in &r.jacobson {
        out.push("jacobson", format!("ad({0}^[p]) != (ad {0})^p", names[i]));
    }
    out
}

pub fn info(spec: &LieAlgebraSpec) -> Report {
    let derived = spec.derived_subalgebra();
    let center = spec.center();
    let dims = |s: Vec<Subspace>| s.iter().map(|x| x.dim().to_string()).collect::<Vec<_>>().join(" ");
    let mut out = Report::new();
    out.push("p", spec.p())
        .push("dim", spec.dim())
        .push("basis", spec.names().join(" "))
        .push("derived_dim", derived.dim())
        .push("derived", span(spec, &derived))
        .push("center_dim", center.dim())
        .push("center", span(spec, &center))
        .push("upper_central_series", dims(spec.upper_central_series()))
        .push("lower_central_series", dims(spec.lower_central_series()))
        .push("nilpotency_class", spec.nilpotency_class().map_or("none".to_string(), |c| c.to_string()))
        .push("abelian", yes_no(spec.is_abelian()))
        .push("env_dim", format!("{}^{}", spec.p(), spec.dim()));
    out
}

pub fn witness(alg: &EnvAlgebra, w: &MetabelianWitness) -> Report {
    let f: Vec<String> = w.factors.iter().map(|e| alg.format(e)).collect();
    let mut out = Report::new();
    out.push("factors", format!("{} | {} | {} | {}", f[0], f[1], f[2], f[3]))
        .push("inner", format!("[{}, {}] = {} | [{}, {}] = {}", f[0], f[1], alg.format(&w.inner[0]), f[2], f[3], alg.format(&w.inner[1])))
        .push("value", alg.format(&w.value));
    out
}

pub fn metabelian(alg: &EnvAlgebra, part: Part, subspace_dim: usize, check: &MetabelianCheck, oracle: Option<bool>) -> Report {
    let mut out = Report::new();
    out.push("check", format!("metabelian:{}", part.name()))
        .push("subspace", part.label())
        .push("subspace_dim", subspace_dim)
        .push("metabelian", yes_no(check.holds));
    if let Some(o) = oracle {
        out.push("brute_force", yes_no(o));
    }
    if let Some(w) = &check.witness {
        out.extend("witness", witness(alg, w));
    }
    out
}

pub fn solvable(part: Part, depth: usize, check: &SolvableCheck) -> Report {
    let dims: Vec<String> = check.dims.iter().map(ToString::to_string).collect();
    let mut out = Report::new();
    out.push("check", format!("solvable:{}:{depth}", part.name()))
        .push("subspace", part.label())
        .push("derived_series_dims", dims.join(" "));
    match check.length {
        DerivedLength::Length(k) => out.push("derived_length", k),
        DerivedLength::Exceeds(d) => out.push("derived_length", format!("> {d}")),
    };
    out.push("solvable_within_depth", yes_no(check.length.within(depth)));
    out
}

fn verdict(v: &Verdict) -> String {
    match v.case {
        Some(c) => format!("metabelian (case {}: {})", c.label(), c.describe()),
        None => "not metabelian".to_string(),
    }
}

pub fn classification(r: &ClassificationReport) -> Report {
    let ev = &r.evidence;
    let mut out = Report::new();
    out.push("p", ev.p)
        .push("dim", ev.dim)
        .push("abelian", yes_no(ev.abelian))
        .push("derived_dim", ev.derived_dim)
        .push("derived_central", yes_no(ev.derived_central))
        .push("derived_pmap", format!("{{{}}}", ev.derived_pmap.join(", ")))
        .push("derived_pmap_zero", yes_no(ev.derived_pmap_zero))
        .push("minus", verdict(&r.minus))
        .push("plus", verdict(&r.plus))
        .push("full", verdict(&r.full));
    out
}

pub fn verification(alg: &EnvAlgebra, r: &VerifyRecord, timings: bool) -> Report {
    let mut out = Report::new();
    out.push("p", r.p).push("lie_dim", r.lie_dim).push("env_dim", r.env_dim);
    if r.classification.is_none() {
        out.push("classifier", "inapplicable in characteristic 2");
    }
    for c in &r.checks {
        let key = c.part.name();
        out.push(format!("{key}.subspace_dim"), c.subspace_dim);
        out.push(format!("{key}.computed"), yes_no(c.metabelian));
        out.push(format!("{key}.brute_force"), c.oracle.map_or("skipped", yes_no));
        if let Some(v) = &c.classifier {
            out.push(format!("{key}.classifier"), verdict(v));
        }
        out.push(format!("{key}.agree"), yes_no(c.agrees()));
        if let Some(w) = &c.witness {
            out.extend(&format!("{key}.witness"), witness(alg, w));
        }
        if timings {
            out.push(format!("{key}.seconds"), format!("{:.6}", c.elapsed.as_secs_f64()));
        }
    }
    out.push("agreement", yes_no(r.agreement()));
    out
}

pub fn repro(checks: &[ReproCheck]) -> Report {
    let mut out = Report::new();
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push(format!("{}.{}", c.key, c.algebra), format!("{status} {} ; computed {}", c.claim, c.computed));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    out.push("passed", format!("{passed}/{}", checks.len()));
    out
}
