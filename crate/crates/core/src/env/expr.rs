//! Small expression language for elements of u(L).
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication; write `2*x*y`, not `2xy`.

use super::{EnvAlgebra, EnvElement};
use crate::error::Error;

struct Parser<'a> {
    alg: &'a EnvAlgebra,
    src: &'a str,
    pos: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, what: &str) -> Result<T, Error> {
        Err(Error::BadExpression(format!("{}: {what} at offset {}", self.src, self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !is_name_char(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn integer(&mut self) -> Result<u64, Error> {
        let w = self.word();
        match w.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => self.fail("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<EnvElement, Error> {
        let alg = self.alg;
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = alg.neg(&acc);
        }
        loop {
            if self.eat('+') {
                acc = alg.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = alg.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<EnvElement, Error> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = self.alg.multiply(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<EnvElement, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            Ok(self.alg.power(&base, e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<EnvElement, Error> {
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return self.fail("expected `)`");
            }
            return Ok(inner);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(self.alg.constant(self.alg.field().reduce(v)))
            }
            Some(c) if is_name_char(c) => {
                let start = self.pos;
                let name = self.word();
                match self.alg.spec().index_of(name) {
                    Some(i) => Ok(self.alg.generator(i)),
                    None => {
                        self.pos = start;
                        self.fail(&format!("unknown generator `{name}`"))
                    }
                }
            }
            _ => self.fail("expected a term"),
        }
    }
}

pub(super) fn parse(alg: &EnvAlgebra, src: &str) -> Result<EnvElement, Error> {
    let mut p = Parser { alg, src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(e)
}
