//! Subspaces of u(L), the symmetric and skew parts of the principal involution,
//! and Lie metabelian / Lie solvable checks.

use super::{EnvAlgebra, EnvElement, Monomial};
use crate::error::Error;
use crate::linalg::{sparse_kernel, Echelon, SparseVec, Subspace};

/// A subspace of u(L), held as a sparse linearly independent spanning set
/// together with its echelon form. [`EnvSubspace::canonical`] gives the RREF
/// in monomial order.
#[derive(Clone, Debug)]
pub struct EnvSubspace {
    basis: Vec<EnvElement>,
    echelon: Echelon,
}

impl EnvSubspace {
    pub fn zero(alg: &EnvAlgebra) -> Self {
        EnvSubspace { basis: Vec::new(), echelon: Echelon::new(alg.field(), alg.dim() as usize) }
    }

    /// All of u(L), spanned by the PBW monomials.
    pub fn full(alg: &EnvAlgebra) -> Self {
        Self::from_elements(alg, alg.monomials().map(EnvElement::monomial))
    }

    /// Keeps each element that is independent of the ones kept before it.
    pub fn from_elements(alg: &EnvAlgebra, elements: impl IntoIterator<Item = EnvElement>) -> Self {
        let mut s = Self::zero(alg);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Adds `e` to the spanning set if it enlarges the span.
    pub fn insert(&mut self, e: EnvElement) -> bool {
        if e.is_zero() {
            return false;
        }
        let added = self.echelon.insert(&e.to_sparse());
        if added {
            self.basis.push(e);
        }
        added
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[EnvElement] {
        &self.basis
    }

    pub fn contains(&self, e: &EnvElement) -> bool {
        self.echelon.contains(&e.to_sparse())
    }

    pub fn contains_subspace(&self, other: &EnvSubspace) -> bool {
        other.basis.iter().all(|e| self.contains(e))
    }

    pub fn same_span(&self, other: &EnvSubspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Canonical RREF with coordinates indexed by monomial.
    pub fn canonical(&self) -> Subspace {
        self.echelon.to_subspace()
    }

    /// Canonical RREF rows, as elements.
    pub fn canonical_basis(&self) -> Vec<EnvElement> {
        self.canonical().rows().iter().map(|r| EnvElement::from_sparse(&crate::linalg::dense_to_sparse(r))).collect()
    }
}

/// A failed metabelian check: `[[a, b], [c, d]] = value ≠ 0` for basis elements of S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianWitness {
    pub factors: [EnvElement; 4],
    pub inner: [EnvElement; 2],
    pub value: EnvElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianCheck {
    pub holds: bool,
    pub witness: Option<MetabelianWitness>,
}

impl MetabelianCheck {
    fn holds() -> Self {
        MetabelianCheck { holds: true, witness: None }
    }

    fn fails(witness: MetabelianWitness) -> Self {
        MetabelianCheck { holds: false, witness: Some(witness) }
    }
}

/// Result of iterating `D_{k+1} = [D_k, D_k]` from `D_0 = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedLength {
    /// Least `k` with `D_k = 0`. Metabelian means length at most 2.
    Length(usize),
    /// `D_depth` is still nonzero.
    Exceeds(usize),
}

impl DerivedLength {
    pub fn within(&self, depth: usize) -> bool {
        matches!(self, DerivedLength::Length(k) if *k <= depth)
    }
}

/// The derived series dims together with the derived-length verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvableCheck {
    pub length: DerivedLength,
    pub dims: Vec<usize>,
}

impl EnvAlgebra {
    fn sparse_columns(&self, f: impl Fn(Monomial) -> EnvElement) -> Vec<SparseVec> {
        self.monomials().map(|m| f(m).to_sparse()).collect()
    }

    /// `ker(T - sign·I)` for the antipode matrix T.
    fn involution_eigenspace(&self, sign_negative: bool) -> EnvSubspace {
        let f = self.field;
        let shift = if sign_negative { 1 } else { f.neg(1) };
        let columns = self.sparse_columns(|m| {
            let t = self.antipode_monomial(m);
            self.add(&t, &self.scale(shift, &EnvElement::monomial(m)))
        });
        let ker = sparse_kernel(f, self.dim() as usize, &columns);
        EnvSubspace::from_elements(self, ker.iter().map(|v| EnvElement::from_sparse(v)))
    }

    /// `u(L)^+ = {a : a^⊤ = a}`.
    pub fn symmetric_subspace(&self) -> EnvSubspace {
        self.involution_eigenspace(false)
    }

    /// `u(L)^- = {a : a^⊤ = -a}`.
    pub fn skew_subspace(&self) -> EnvSubspace {
        self.involution_eigenspace(true)
    }

    /// Span of the traces `m + m^⊤` over all monomials; equals `u(L)^+` for odd p.
    pub fn trace_span(&self) -> Result<EnvSubspace, Error> {
        if self.field.p() == 2 {
            return Err(Error::TraceInCharTwo);
        }
        Ok(EnvSubspace::from_elements(
            self,
            self.monomials().map(|m| self.add(&EnvElement::monomial(m), &self.antipode_monomial(m))),
        ))
    }

    /// Span of `m - m^⊤`; equals `u(L)^-` for odd p.
    pub fn skew_trace_span(&self) -> Result<EnvSubspace, Error> {
        if self.field.p() == 2 {
            return Err(Error::TraceInCharTwo);
        }
        Ok(EnvSubspace::from_elements(
            self,
            self.monomials().map(|m| self.sub(&EnvElement::monomial(m), &self.antipode_monomial(m))),
        ))
    }

    /// `[U, V]`: span of brackets of spanning elements.
    pub fn subspace_bracket(&self, u: &EnvSubspace, v: &EnvSubspace) -> EnvSubspace {
        let mut out = EnvSubspace::zero(self);
        let same = std::ptr::eq(u, v) || (u.basis == v.basis);
        for (i, a) in u.basis.iter().enumerate() {
            let start = if same { i + 1 } else { 0 };
            for b in &v.basis[start..] {
                out.insert(self.lie_bracket(a, b));
            }
        }
        out
    }

    /// Decides whether `[[s1, s2], [s3, s4]]` vanishes on S.
    ///
    /// Brackets of basis pairs are added to `W = [S, S]` one at a time, and each
    /// new independent element of W is bracketed with the earlier ones, so a
    /// failure is found as soon as it appears. By multilinearity this is the
    /// same as testing `[W, W] = 0`.
    pub fn is_lie_metabelian(&self, s: &EnvSubspace) -> MetabelianCheck {
        let basis = s.basis();
        let mut w = EnvSubspace::zero(self);
        let mut origin: Vec<(usize, usize)> = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let c = self.lie_bracket(&basis[i], &basis[j]);
                if c.is_zero() || w.contains(&c) {
                    continue;
                }
                for (k, prev) in w.basis().iter().enumerate() {
                    let value = self.lie_bracket(prev, &c);
                    if !value.is_zero() {
                        let (a, b) = origin[k];
                        return MetabelianCheck::fails(MetabelianWitness {
                            factors: [basis[a].clone(), basis[b].clone(), basis[i].clone(), basis[j].clone()],
                            inner: [prev.clone(), c],
                            value,
                        });
                    }
                }
                w.insert(c);
                origin.push((i, j));
            }
        }
        MetabelianCheck::holds()
    }

    /// Oracle: enumerates `[[s_i, s_j], [s_k, s_l]]` over the basis of S directly.
    pub fn brute_force_metabelian(&self, s: &EnvSubspace, budget: u64) -> Result<MetabelianCheck, Error> {
        let d = s.dim() as u128;
        let needed = d.pow(4);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let basis = s.basis();
        let mut pairs: Vec<(usize, usize, EnvElement)> = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let c = self.lie_bracket(&basis[i], &basis[j]);
                if !c.is_zero() {
                    pairs.push((i, j, c));
                }
            }
        }
        for (x, (i, j, a)) in pairs.iter().enumerate() {
            for (k, l, b) in &pairs[x + 1..] {
                let value = self.lie_bracket(a, b);
                if !value.is_zero() {
                    return Ok(MetabelianCheck::fails(MetabelianWitness {
                        factors: [basis[*i].clone(), basis[*j].clone(), basis[*k].clone(), basis[*l].clone()],
                        inner: [a.clone(), b.clone()],
                        value,
                    }));
                }
            }
        }
        Ok(MetabelianCheck::holds())
    }

    /// Derived series of S, stopping at zero or after `max_depth` steps.
    pub fn is_lie_solvable(&self, s: &EnvSubspace, max_depth: usize) -> SolvableCheck {
        let mut current = s.clone();
        let mut dims = vec![current.dim()];
        for k in 0.. {
            if current.is_zero() {
                return SolvableCheck { length: DerivedLength::Length(k), dims };
            }
            if k == max_depth {
                break;
            }
            current = self.subspace_bracket(&current, &current);
            dims.push(current.dim());
        }
        SolvableCheck { length: DerivedLength::Exceeds(max_depth), dims }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env::DEFAULT_MAX_DIM;
    use crate::lie::LieAlgebraSpec;

    fn abelian(p: u64, n: usize) -> EnvAlgebra {
        let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        EnvAlgebra::build(LieAlgebraSpec::with_names(p, &refs).unwrap(), DEFAULT_MAX_DIM).unwrap()
    }

    fn heis3() -> EnvAlgebra {
        let mut s = LieAlgebraSpec::with_names(3, &["x", "y", "z"]).unwrap();
        s.set_bracket(0, 1, &[0, 0, 1]).unwrap();
        EnvAlgebra::build(s, DEFAULT_MAX_DIM).unwrap()
    }

    fn degree_span(a: &EnvAlgebra, odd: bool) -> EnvSubspace {
        EnvSubspace::from_elements(
            a,
            a.monomials().filter(|&m| (a.degree(m) % 2 == 1) == odd).map(EnvElement::monomial),
        )
    }

    #[test]
    fn abelian_involution_is_diagonal() {
        // With zero brackets the antipode is (-1)^deg on each monomial.
        let a = abelian(5, 2);
        assert!(a.skew_subspace().same_span(&degree_span(&a, true)));
        assert!(a.symmetric_subspace().same_span(&degree_span(&a, false)));
        assert!(a.trace_span().unwrap().same_span(&degree_span(&a, false)));
    }

    #[test]
    fn heisenberg_trace_span_matches_eigenspace() {
        let a = heis3();
        let sym = a.symmetric_subspace();
        let skew = a.skew_subspace();
        assert_eq!(sym.dim() + skew.dim(), 27);
        assert_eq!(a.trace_span().unwrap().canonical(), sym.canonical());
        assert_eq!(a.skew_trace_span().unwrap().canonical(), skew.canonical());
    }

    #[test]
    fn brackets_of_subspaces() {
        let a = heis3();
        let sx = EnvSubspace::from_elements(&a, [a.generator(0)]);
        let sy = EnvSubspace::from_elements(&a, [a.generator(1)]);
        let b = a.subspace_bracket(&sx, &sy);
        assert!(b.same_span(&EnvSubspace::from_elements(&a, [a.generator(2)])));
        let central = EnvSubspace::from_elements(&a, [a.generator(2), a.parse("z^2").unwrap()]);
        assert!(a.subspace_bracket(&central, &central).is_zero());
    }

    #[test]
    fn zero_subspace_is_metabelian() {
        let a = heis3();
        let z = EnvSubspace::zero(&a);
        assert!(a.is_lie_metabelian(&z).holds);
        assert!(a.brute_force_metabelian(&z, 1).unwrap().holds);
        assert_eq!(a.is_lie_solvable(&z, 3).length, DerivedLength::Length(0));
    }

    #[test]
    fn abelian_full_algebra_has_length_one() {
        let a = abelian(3, 2);
        let full = EnvSubspace::full(&a);
        let res = a.is_lie_solvable(&full, 4);
        assert_eq!(res.length, DerivedLength::Length(1));
        assert_eq!(res.dims, vec![9, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let a = heis3();
        let full = EnvSubspace::full(&a);
        let err = a.brute_force_metabelian(&full, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 531441, budget: 1000 }));
    }

    #[test]
    fn witness_is_genuine() {
        let mut s = LieAlgebraSpec::with_names(5, &["x", "y"]).unwrap();
        s.set_bracket(0, 1, &[1, 0]).unwrap();
        s.set_pmap(1, &[0, 1]).unwrap();
        let a = EnvAlgebra::build(s, DEFAULT_MAX_DIM).unwrap();
        let skew = a.skew_subspace();
        let check = a.is_lie_metabelian(&skew);
        assert!(!check.holds);
        let w = check.witness.unwrap();
        let [p, q, r, t] = &w.factors;
        let lhs = a.lie_bracket(&a.lie_bracket(p, q), &a.lie_bracket(r, t));
        assert_eq!(lhs, w.value);
        assert!(!lhs.is_zero());
        for f in &w.factors {
            assert!(skew.contains(f));
        }
    }

    #[test]
    fn char2_eigenspaces_coincide() {
        let mut s = LieAlgebraSpec::with_names(2, &["x", "y", "z"]).unwrap();
        s.set_bracket(0, 1, &[1, 0, 0]).unwrap();
        s.set_pmap(0, &[0, 0, 1]).unwrap();
        s.set_pmap(1, &[0, 1, 0]).unwrap();
        let a = EnvAlgebra::build(s, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(a.symmetric_subspace().canonical(), a.skew_subspace().canonical());
        assert!(matches!(a.trace_span(), Err(Error::TraceInCharTwo)));
    }
}
