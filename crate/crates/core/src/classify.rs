//! Structural criteria for u(L)^-, u(L)^+ and u(L) to be Lie metabelian, and
//! the harness that checks them against direct computation in u(L).
//!
//! For odd p:
//!
//! * u(L)^- is Lie metabelian iff L is abelian, or p = 3, L' is
//!   one-dimensional and central, and L'^[p] = 0.
//! * u(L)^+ is Lie metabelian iff (i) L is abelian, (ii) the same condition
//!   as above holds, or (iii) p = 3 and dim L = 2.
//! * u(L) is Lie metabelian iff u(L)^- is. The verdict for u(L) is therefore
//!   routed through the skew criterion; no independent structural criterion
//!   for u(L) is implemented here.
//!
//! None of this holds in characteristic 2, where every classifier entry point
//! returns [`Error::Inapplicable`]. [`verify`] still runs the direct
//! computation there.

use std::time::{Duration, Instant};

use crate::env::{EnvAlgebra, EnvSubspace, MetabelianWitness, DEFAULT_BRUTE_FORCE_BUDGET};
use crate::error::Error;
use crate::lie::LieAlgebraSpec;

/// Which clause of the criterion produced a positive verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// L is abelian.
    Abelian,
    /// p = 3, L' one-dimensional and central, L'^[p] = 0.
    CentralCommutator,
    /// p = 3 and dim L = 2 (symmetric part only).
    TwoDimensional,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::Abelian => "i",
            Case::CentralCommutator => "ii",
            Case::TwoDimensional => "iii",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Case::Abelian => "L abelian",
            Case::CentralCommutator => "p = 3, L' 1-dimensional central, L'^[p] = 0",
            Case::TwoDimensional => "p = 3, dim L = 2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub metabelian: bool,
    pub case: Option<Case>,
}

impl Verdict {
    fn yes(case: Case) -> Self {
        Verdict { metabelian: true, case: Some(case) }
    }

    fn no() -> Self {
        Verdict { metabelian: false, case: None }
    }
}

/// Structural data the verdicts are read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub p: u32,
    pub dim: usize,
    pub derived_dim: usize,
    pub derived_central: bool,
    /// Images of the RREF basis of L' under the p-map, rendered on the basis.
    pub derived_pmap: Vec<String>,
    pub derived_pmap_zero: bool,
    pub abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub minus: Verdict,
    pub plus: Verdict,
    pub full: Verdict,
    pub evidence: Evidence,
}

fn require_odd(spec: &LieAlgebraSpec) -> Result<(), Error> {
    if spec.p() == 2 {
        Err(Error::Inapplicable)
    } else {
        Ok(())
    }
}

pub fn evidence(spec: &LieAlgebraSpec) -> Result<Evidence, Error> {
    let derived = spec.derived_subalgebra();
    let center = spec.center();
    let mut images = Vec::new();
    let mut zero = true;
    for row in derived.rows() {
        let q = spec.pmap_general(&spec.element(row.clone())?)?;
        zero &= q.is_zero();
        images.push(spec.describe(q.coords()));
    }
    Ok(Evidence {
        p: spec.p(),
        dim: spec.dim(),
        derived_dim: derived.dim(),
        derived_central: center.contains_subspace(&derived)?,
        derived_pmap: images,
        derived_pmap_zero: zero,
        abelian: derived.is_zero(),
    })
}

fn central_commutator(ev: &Evidence) -> bool {
    ev.p == 3 && ev.derived_dim == 1 && ev.derived_central && ev.derived_pmap_zero
}

fn minus_from(ev: &Evidence) -> Verdict {
    if ev.abelian {
        Verdict::yes(Case::Abelian)
    } else if central_commutator(ev) {
        Verdict::yes(Case::CentralCommutator)
    } else {
        Verdict::no()
    }
}

fn plus_from(ev: &Evidence) -> Verdict {
    if ev.abelian {
        Verdict::yes(Case::Abelian)
    } else if central_commutator(ev) {
        Verdict::yes(Case::CentralCommutator)
    } else if ev.p == 3 && ev.dim == 2 {
        Verdict::yes(Case::TwoDimensional)
    } else {
        Verdict::no()
    }
}

/// Is u(L)^- Lie metabelian?
pub fn classify_minus(spec: &LieAlgebraSpec) -> Result<Verdict, Error> {
    require_odd(spec)?;
    Ok(minus_from(&evidence(spec)?))
}

/// Is u(L)^+ Lie metabelian, and by which case?
pub fn classify_plus(spec: &LieAlgebraSpec) -> Result<Verdict, Error> {
    require_odd(spec)?;
    Ok(plus_from(&evidence(spec)?))
}

/// Is u(L) Lie metabelian? Same verdict as the skew part.
pub fn classify_full(spec: &LieAlgebraSpec) -> Result<Verdict, Error> {
    classify_minus(spec)
}

pub fn classify(spec: &LieAlgebraSpec) -> Result<ClassificationReport, Error> {
    require_odd(spec)?;
    let ev = evidence(spec)?;
    let minus = minus_from(&ev);
    Ok(ClassificationReport { minus, plus: plus_from(&ev), full: minus, evidence: ev })
}

/// Which subspace of u(L) a check ran on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Minus,
    Plus,
    Full,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::Minus, Part::Plus, Part::Full];

    pub fn name(self) -> &'static str {
        match self {
            Part::Minus => "minus",
            Part::Plus => "plus",
            Part::Full => "full",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Part::Minus => "u(L)^-",
            Part::Plus => "u(L)^+",
            Part::Full => "u(L)",
        }
    }

    pub fn subspace(self, alg: &EnvAlgebra) -> EnvSubspace {
        match self {
            Part::Minus => alg.skew_subspace(),
            Part::Plus => alg.symmetric_subspace(),
            Part::Full => EnvSubspace::full(alg),
        }
    }
}

/// Subspaces up to this dimension are also run through the quadruple oracle.
pub const ORACLE_DIM_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct PartCheck {
    pub part: Part,
    pub subspace_dim: usize,
    pub metabelian: bool,
    pub witness: Option<MetabelianWitness>,
    /// Verdict of the quadruple-enumeration oracle, when the subspace is small enough.
    pub oracle: Option<bool>,
    pub classifier: Option<Verdict>,
    pub elapsed: Duration,
}

impl PartCheck {
    /// Classifier and oracle (where present) both match the computed verdict.
    pub fn agrees(&self) -> bool {
        self.classifier.is_none_or(|v| v.metabelian == self.metabelian)
            && self.oracle.is_none_or(|o| o == self.metabelian)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyRecord {
    pub p: u32,
    pub lie_dim: usize,
    pub env_dim: u64,
    /// `None` in characteristic 2.
    pub classification: Option<ClassificationReport>,
    pub checks: Vec<PartCheck>,
}

impl VerifyRecord {
    pub fn agreement(&self) -> bool {
        self.checks.iter().all(PartCheck::agrees)
    }

    pub fn check(&self, part: Part) -> &PartCheck {
        self.checks.iter().find(|c| c.part == part).expect("all parts are checked")
    }
}

/// Builds u(L), computes u(L)^-, u(L)^+ and u(L), decides each by direct
/// computation, and compares with the classifier.
pub fn verify(spec: &LieAlgebraSpec, max_dim: u64) -> Result<VerifyRecord, Error> {
    let classification = match classify(spec) {
        Ok(r) => Some(r),
        Err(Error::Inapplicable) => None,
        Err(e) => return Err(e),
    };
    let alg = EnvAlgebra::build(spec.clone(), max_dim)?;
    let mut checks = Vec::new();
    for part in Part::ALL {
        let start = Instant::now();
        let s = part.subspace(&alg);
        let res = alg.is_lie_metabelian(&s);
        let oracle = if s.dim() <= ORACLE_DIM_LIMIT {
            Some(alg.brute_force_metabelian(&s, DEFAULT_BRUTE_FORCE_BUDGET)?.holds)
        } else {
            None
        };
        let classifier = classification.as_ref().map(|c| match part {
            Part::Minus => c.minus,
            Part::Plus => c.plus,
            Part::Full => c.full,
        });
        checks.push(PartCheck {
            part,
            subspace_dim: s.dim(),
            metabelian: res.holds,
            witness: res.witness,
            oracle,
            classifier,
            elapsed: start.elapsed(),
        });
    }
    Ok(VerifyRecord { p: spec.p(), lie_dim: spec.dim(), env_dim: alg.dim(), classification, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    fn spec(doc: &str) -> LieAlgebraSpec {
        let s = parse(doc).unwrap();
        assert!(s.is_valid());
        s
    }

    #[test]
    fn heisenberg_variants() {
        let h3 = spec("p = 3\nbasis = x y z\n[x,y] = z\n");
        assert_eq!(classify_minus(&h3).unwrap(), Verdict::yes(Case::CentralCommutator));
        let h5 = spec("p = 5\nbasis = x y z\n[x,y] = z\n");
        assert!(!classify_minus(&h5).unwrap().metabelian);
        let hz = spec("p = 3\nbasis = x y z\n[x,y] = z\nz^p = z\n");
        assert!(!classify_minus(&hz).unwrap().metabelian);
        assert!(!classify_plus(&hz).unwrap().metabelian);
        assert!(classify_full(&h3).unwrap().metabelian);
    }

    #[test]
    fn two_dimensional_gap() {
        let d3 = spec("p = 3\nbasis = x y\n[x,y] = x\ny^p = y\n");
        assert_eq!(classify_plus(&d3).unwrap(), Verdict::yes(Case::TwoDimensional));
        assert!(!classify_minus(&d3).unwrap().metabelian);
        assert!(!classify_full(&d3).unwrap().metabelian);
        let d5 = spec("p = 5\nbasis = x y\n[x,y] = x\ny^p = y\n");
        assert!(!classify_plus(&d5).unwrap().metabelian);
    }

    #[test]
    fn abelian_is_case_i() {
        let a = spec("p = 7\nbasis = a b\na^p = b\n");
        let r = classify(&a).unwrap();
        assert_eq!(r.plus, Verdict::yes(Case::Abelian));
        assert_eq!(r.minus, Verdict::yes(Case::Abelian));
        assert!(r.evidence.abelian);
    }

    #[test]
    fn characteristic_two_is_an_error() {
        let c2 = spec("p = 2\nbasis = x y z\n[x,y] = x\nx^p = z\ny^p = y\n");
        assert_eq!(classify(&c2).unwrap_err(), Error::Inapplicable);
        assert_eq!(classify_plus(&c2).unwrap_err(), Error::Inapplicable);
        assert!(classify_full(&c2).unwrap_err().to_string().contains("characteristic 2"));
        let rec = verify(&c2, 1 << 16).unwrap();
        assert!(rec.classification.is_none());
        assert!(rec.check(Part::Plus).metabelian);
        assert!(!rec.check(Part::Full).metabelian);
    }

    #[test]
    fn evidence_reports_pmap_of_derived() {
        let hz = spec("p = 3\nbasis = x y z\n[x,y] = z\nz^p = 2*z\n");
        let ev = evidence(&hz).unwrap();
        assert_eq!(ev.derived_dim, 1);
        assert!(ev.derived_central);
        assert!(!ev.derived_pmap_zero);
        assert_eq!(ev.derived_pmap, vec!["2*z".to_string()]);
    }

    #[test]
    fn verify_abelian_p5() {
        let a = spec("p = 5\nbasis = a b\n");
        let rec = verify(&a, 1 << 16).unwrap();
        assert!(rec.agreement());
        assert!(rec.checks.iter().all(|c| c.metabelian));
        assert_eq!(rec.env_dim, 25);
    }
}
