//! The algebra file format.
//!
//! ```text
//! # Heisenberg algebra, p = 3
//! p = 3
//! basis = x y z
//! [x,y] = z
//! z^p = 0
//! ```
//!
//! A linear combination is `0` or `term (('+'|'-') term)*` with
//! `term = [coeff '*'] name`; coefficients are decimal integers reduced mod p.
//! Brackets and p-map images that are not given are zero. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::field::{is_prime, Fp};
use crate::lie::{valid_name, LieAlgebraSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, offset: usize, message: impl fmt::Display) -> ParseError {
        ParseError { line: self.number, col: offset + 1, message: message.to_string() }
    }
}

fn offset_in(line: &str, part: &str) -> usize {
    part.as_ptr() as usize - line.as_ptr() as usize
}

/// Parses a linear combination of basis names. `text` must be a subslice of `line.text`.
fn parse_lincomb(line: &Line, text: &str, names: &[String], field: Fp) -> Result<Vec<u32>, ParseError> {
    let base = offset_in(line.text, text);
    let bytes = text.as_bytes();
    let mut coords = vec![0u32; names.len()];
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(line.err(base + pos, "expected a linear combination"));
    }
    let rest = text[pos..].trim_end();
    if rest == "0" {
        return Ok(coords);
    }
    let mut sign_negative = false;
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if !first {
            match bytes.get(pos) {
                None => break,
                Some(b'+') => sign_negative = false,
                Some(b'-') => sign_negative = true,
                Some(_) => return Err(line.err(base + pos, "expected `+` or `-`")),
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        first = false;
        // [coeff '*'] name
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        if start == pos {
            return Err(line.err(base + pos, "expected a term"));
        }
        let mut word = &text[start..pos];
        let mut word_start = start;
        let mut coeff = 1u32;
        let save = pos;
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&b'*') {
            if !word.bytes().all(|b| b.is_ascii_digit()) {
                return Err(line.err(base + start, format!("coefficient `{word}` is not a decimal integer")));
            }
            coeff = word.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % field.p() as u64) as u32;
            pos += 1;
            skip_ws(&mut pos);
            word_start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            if word_start == pos {
                return Err(line.err(base + pos, "expected a basis name after `*`"));
            }
            word = &text[word_start..pos];
        } else {
            pos = save;
        }
        let Some(i) = names.iter().position(|n| n == word) else {
            return Err(line.err(base + word_start, format!("unknown name `{word}`")));
        };
        let c = if sign_negative { field.neg(coeff) } else { coeff };
        coords[i] = field.add(coords[i], c);
    }
    Ok(coords)
}

/// Parses an algebra file into a spec. The result is not validated.
pub fn parse(doc: &str) -> Result<LieAlgebraSpec, Error> {
    let mut field: Option<Fp> = None;
    let mut spec: Option<LieAlgebraSpec> = None;
    let mut brackets: HashMap<(usize, usize), (Vec<u32>, usize)> = HashMap::new();
    let mut pmaps: HashMap<usize, usize> = HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in doc.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("");
        let line = Line { number: idx + 1, text };
        last_line = idx + 1;
        let trimmed = text.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = offset_in(text, trimmed);
        let Some(eq) = text.find('=') else {
            return Err(line.err(lead, "expected `=`").into());
        };
        let lhs = text[..eq].trim();
        let rhs = &text[eq + 1..];

        if lhs.starts_with('[') {
            let Some(spec) = spec.as_mut() else {
                return Err(line.err(lead, "bracket before `basis` line").into());
            };
            let inner = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']'));
            let parts: Vec<&str> = inner.map(|s| s.split(',').map(str::trim).collect()).unwrap_or_default();
            if parts.len() != 2 {
                return Err(line.err(lead, "expected `[a,b]`").into());
            }
            let lookup = |name: &str| {
                spec.index_of(name).ok_or_else(|| {
                    let off = text.find(name).unwrap_or(lead);
                    line.err(off, format!("unknown name `{name}`"))
                })
            };
            let (i, j) = (lookup(parts[0])?, lookup(parts[1])?);
            let f = spec.field();
            let v = parse_lincomb(&line, rhs, spec.names(), f)?;
            if i == j {
                if v.iter().any(|&x| x != 0) {
                    return Err(line.err(lead, format!("[{0},{0}] must be 0", parts[0])).into());
                }
                continue;
            }
            if let Some((_, first)) = brackets.get(&(i, j)) {
                return Err(line
                    .err(lead, format!("duplicate definition of [{},{}] (first on line {first})", parts[0], parts[1]))
                    .into());
            }
            if let Some((other, first)) = brackets.get(&(j, i)) {
                let neg: Vec<u32> = other.iter().map(|&x| f.neg(x)).collect();
                if neg != v {
                    return Err(line
                        .err(
                            lead,
                            format!(
                                "inconsistent antisymmetric pair: [{},{}] on line {first} forces [{},{}] = {}",
                                parts[1],
                                parts[0],
                                parts[0],
                                parts[1],
                                emit_lincomb(spec.names(), &neg)
                            ),
                        )
                        .into());
                }
            }
            brackets.insert((i, j), (v.clone(), line.number));
            spec.set_bracket(i, j, &v)?;
        } else if let Some(name) = lhs.strip_suffix("^p") {
            let Some(spec) = spec.as_mut() else {
                return Err(line.err(lead, "p-map line before `basis` line").into());
            };
            let name = name.trim();
            let Some(i) = spec.index_of(name) else {
                return Err(line.err(lead, format!("unknown name `{name}`")).into());
            };
            if let Some(first) = pmaps.get(&i) {
                return Err(line.err(lead, format!("duplicate definition of {name}^p (first on line {first})")).into());
            }
            let v = parse_lincomb(&line, rhs, spec.names(), spec.field())?;
            pmaps.insert(i, line.number);
            spec.set_pmap(i, &v)?;
        } else if lhs == "p" {
            if field.is_some() {
                return Err(line.err(lead, "duplicate `p` line").into());
            }
            let value = rhs.trim();
            let off = offset_in(text, value);
            let Ok(p) = value.parse::<u64>() else {
                return Err(line.err(off, format!("`{value}` is not a decimal integer")).into());
            };
            if !is_prime(p) {
                return Err(line.err(off, format!("p = {p} is not prime")).into());
            }
            field = Some(Fp::new(p).map_err(|e| line.err(off, e))?);
        } else if lhs == "basis" {
            if spec.is_some() {
                return Err(line.err(lead, "duplicate `basis` line").into());
            }
            let Some(f) = field else {
                return Err(line.err(lead, "`basis` line before `p` line").into());
            };
            let mut names: Vec<String> = Vec::new();
            for name in rhs.split_whitespace() {
                let off = offset_in(text, name);
                if !valid_name(name) {
                    return Err(line.err(off, format!("invalid basis name `{name}`")).into());
                }
                if names.iter().any(|n| n == name) {
                    return Err(line.err(off, format!("duplicate basis name `{name}`")).into());
                }
                names.push(name.to_string());
            }
            spec = Some(LieAlgebraSpec::new(f, names)?);
        } else {
            return Err(line.err(lead, format!("unrecognised line `{trimmed}`")).into());
        }
    }
    let missing = |what: &str| ParseError { line: last_line.max(1), col: 1, message: format!("missing `{what}` line") };
    if field.is_none() {
        return Err(missing("p").into());
    }
    spec.ok_or_else(|| missing("basis").into())
}

/// `c*name + …` in basis order, coefficient 1 omitted; `0` for the zero vector.
pub fn emit_lincomb(names: &[String], v: &[u32]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, n)| if c == 1 { n.clone() } else { format!("{c}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Canonical text: `p`, `basis`, nonzero `[b_i,b_j]` for `i < j`, nonzero `b_i^p`.
pub fn emit(spec: &LieAlgebraSpec) -> String {
    let names = spec.names();
    let mut out = format!("p = {}\n", spec.p());
    if names.is_empty() {
        out.push_str("basis =\n");
    } else {
        out.push_str(&format!("basis = {}\n", names.join(" ")));
    }
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let v = spec.basis_bracket(i, j);
            if v.iter().any(|&x| x != 0) {
                out.push_str(&format!("[{},{}] = {}\n", names[i], names[j], emit_lincomb(names, v)));
            }
        }
    }
    for (i, name) in names.iter().enumerate() {
        let v = spec.basis_pmap(i);
        if v.iter().any(|&x| x != 0) {
            out.push_str(&format!("{name}^p = {}\n", emit_lincomb(names, v)));
        }
    }
    out
}
