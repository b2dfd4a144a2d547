//! Built-in algebra files with their expected verdicts.
//!
//! Every entry is stored in canonical form, so `emit(parse(content)) == content`.

use crate::error::Error;
use crate::format::parse;
use crate::lie::LieAlgebraSpec;

/// Whether u(L)^-, u(L)^+ and u(L) are Lie metabelian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub minus: bool,
    pub plus: bool,
    pub full: bool,
}

const ALL: Expected = Expected { minus: true, plus: true, full: true };
const NONE: Expected = Expected { minus: false, plus: false, full: false };
const PLUS_ONLY: Expected = Expected { minus: false, plus: true, full: false };

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    pub content: &'static str,
    pub expected: Expected,
    /// Why the expected verdict holds.
    pub reason: &'static str,
}

impl CorpusEntry {
    pub fn spec(&self) -> LieAlgebraSpec {
        parse(self.content).expect("corpus entries parse")
    }
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "abelian-p3-n1",
        aliases: &[],
        description: "one-dimensional, zero p-map",
        content: "p = 3\nbasis = a\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "abelian-p3-n2",
        aliases: &[],
        description: "two-dimensional abelian, a^[3] = b",
        content: "p = 3\nbasis = a b\na^p = b\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "abelian-p3-n3",
        aliases: &[],
        description: "three-dimensional abelian torus",
        content: "p = 3\nbasis = a b c\na^p = a\nb^p = b\nc^p = c\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "abelian-p5-n1",
        aliases: &[],
        description: "one-dimensional torus",
        content: "p = 5\nbasis = a\na^p = a\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "abelian-p5-n2",
        aliases: &[],
        description: "two-dimensional abelian, zero p-map",
        content: "p = 5\nbasis = a b\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "abelian-p5-n3",
        aliases: &[],
        description: "three-dimensional abelian, mixed p-map",
        content: "p = 5\nbasis = a b c\na^p = b\nb^p = c\nc^p = 2*c\n",
        expected: ALL,
        reason: "L abelian",
    },
    CorpusEntry {
        name: "heis-p3-z0",
        aliases: &[],
        description: "Heisenberg algebra, z^[3] = 0",
        content: "p = 3\nbasis = x y z\n[x,y] = z\n",
        expected: ALL,
        reason: "p = 3, L' = <z> central, z^[3] = 0",
    },
    CorpusEntry {
        name: "heis-p3-zz",
        aliases: &[],
        description: "Heisenberg algebra, z^[3] = z",
        content: "p = 3\nbasis = x y z\n[x,y] = z\nz^p = z\n",
        expected: NONE,
        reason: "L'^[3] != 0",
    },
    CorpusEntry {
        name: "heis-p5-z0",
        aliases: &[],
        description: "Heisenberg algebra, z^[5] = 0",
        content: "p = 5\nbasis = x y z\n[x,y] = z\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "heis-p7-z0",
        aliases: &[],
        description: "Heisenberg algebra, z^[7] = 0",
        content: "p = 7\nbasis = x y z\n[x,y] = z\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "dim2-p3",
        aliases: &["lemma2.6-dim2-p3"],
        description: "nonabelian two-dimensional, [x,y] = x, x^[3] = 0, y^[3] = y",
        content: "p = 3\nbasis = x y\n[x,y] = x\ny^p = y\n",
        expected: PLUS_ONLY,
        reason: "p = 3 and dim L = 2; L' = <x> not central",
    },
    CorpusEntry {
        name: "dim2-p3-swapped",
        aliases: &[],
        description: "dim2-p3 with the basis listed as y, x",
        content: "p = 3\nbasis = y x\n[y,x] = 2*x\ny^p = y\n",
        expected: PLUS_ONLY,
        reason: "p = 3 and dim L = 2; L' = <x> not central",
    },
    CorpusEntry {
        name: "dim2-p3-scaled",
        aliases: &[],
        description: "dim2-p3 with y replaced by 2y: [x,y] = 2x, y^[3] = y",
        content: "p = 3\nbasis = x y\n[x,y] = 2*x\ny^p = y\n",
        expected: PLUS_ONLY,
        reason: "p = 3 and dim L = 2; L' = <x> not central",
    },
    CorpusEntry {
        name: "dim2-p5",
        aliases: &[],
        description: "nonabelian two-dimensional, [x,y] = x, x^[5] = 0, y^[5] = y",
        content: "p = 5\nbasis = x y\n[x,y] = x\ny^p = y\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "lemma2.1-p3",
        aliases: &[],
        description: "[a,b] = v, [a,c] = w, v and w central, zero p-map",
        content: "p = 3\nbasis = a b c v w\n[a,b] = v\n[a,c] = w\n",
        expected: NONE,
        reason: "dim L' = 2",
    },
    CorpusEntry {
        name: "lemma2.1-p5",
        aliases: &[],
        description: "[a,b] = v, [a,c] = w, v and w central, zero p-map",
        content: "p = 5\nbasis = a b c v w\n[a,b] = v\n[a,c] = w\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "lemma2.2-p3",
        aliases: &[],
        description: "two commuting Heisenberg algebras, [x1,x2] = v, [y1,y2] = w",
        content: "p = 3\nbasis = x1 x2 y1 y2 v w\n[x1,x2] = v\n[y1,y2] = w\n",
        expected: NONE,
        reason: "dim L' = 2",
    },
    CorpusEntry {
        name: "lemma2.2-p5",
        aliases: &[],
        description: "two commuting Heisenberg algebras, [x1,x2] = v, [y1,y2] = w",
        content: "p = 5\nbasis = x1 x2 y1 y2 v w\n[x1,x2] = v\n[y1,y2] = w\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "lemma2.3-p3",
        aliases: &[],
        description: "class 3: [x,y] = v, [y,v] = w, w central",
        content: "p = 3\nbasis = x y v w\n[x,y] = v\n[y,v] = w\n",
        expected: NONE,
        reason: "dim L' = 2",
    },
    CorpusEntry {
        name: "lemma2.3-p5",
        aliases: &[],
        description: "class 3: [x,y] = v, [y,v] = w, w central",
        content: "p = 5\nbasis = x y v w\n[x,y] = v\n[y,v] = w\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "nonnilp-p5",
        aliases: &[],
        description: "non-nilpotent, [x,y] = x, x^[5] = 0, y^[5] = y",
        content: "p = 5\nbasis = x y\n[x,y] = x\ny^p = y\n",
        expected: NONE,
        reason: "nonabelian and p != 3",
    },
    CorpusEntry {
        name: "char2-example",
        aliases: &[],
        description: "p = 2, [x,y] = x, x^[2] = z, y^[2] = y",
        content: "p = 2\nbasis = x y z\n[x,y] = x\nx^p = z\ny^p = y\n",
        expected: Expected { minus: true, plus: true, full: false },
        reason: "u(L)^+ = u(L)^- is metabelian while u(L) is not; the criterion does not apply",
    },
];

/// Finds an entry by name or alias.
pub fn lookup(name: &str) -> Result<&'static CorpusEntry, Error> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .ok_or_else(|| Error::UnknownCorpus(name.to_string()))
}
