//! Finite-dimensional restricted Lie algebras given by structure constants.
//!
//! A [`LieAlgebraSpec`] stores the full antisymmetric bracket table on the
//! basis together with the images of the basis under the p-map. Everything
//! else here (derived algebra, center, central series, restricted closures,
//! quotients) is linear algebra on top of those tables. The p-map on
//! arbitrary elements is evaluated inside u(L), see [`LieAlgebraSpec::pmap_general`].

use crate::env::{EnvAlgebra, EnvElement};
use crate::error::Error;
use crate::field::Fp;
use crate::linalg::{kernel, rref, unit_vector, Subspace};

/// Coordinates of an element of L on the input basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    coords: Vec<u32>,
}

impl LieElement {
    pub fn new(coords: Vec<u32>) -> Self {
        LieElement { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// The input datum: prime, basis names, bracket table and p-map on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    field: Fp,
    names: Vec<String>,
    // bracket[i * n + j] = [b_i, b_j]
    bracket: Vec<Vec<u32>>,
    pmap: Vec<Vec<u32>>,
}

/// Outcome of [`LieAlgebraSpec::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Basis triples `i < j < k` on which the Jacobi identity fails.
    pub jacobi: Vec<[usize; 3]>,
    /// Basis indices `i` with `ad(b_i^[p]) != (ad b_i)^p`.
    pub jacobson: Vec<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.jacobi.is_empty() && self.jacobson.is_empty()
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

type Matrix = Vec<Vec<u32>>;

fn mat_mul(f: Fp, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0u32; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = f.add(out[i][j], f.mul(aik, b[k][j]));
            }
        }
    }
    out
}

fn mat_pow(f: Fp, a: &Matrix, mut e: u64) -> Matrix {
    let n = a.len();
    let mut acc: Matrix = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(f, &acc, &base);
        }
        base = mat_mul(f, &base, &base);
        e >>= 1;
    }
    acc
}

impl LieAlgebraSpec {
    /// An abelian algebra with zero p-map on the given basis names.
    pub fn new(field: Fp, names: Vec<String>) -> Result<Self, Error> {
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::Malformed(format!("invalid basis name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::Malformed(format!("duplicate basis name `{name}`")));
            }
        }
        let n = names.len();
        Ok(LieAlgebraSpec {
            field,
            names,
            bracket: vec![vec![0; n]; n * n],
            pmap: vec![vec![0; n]; n],
        })
    }

    pub fn with_names(p: u64, names: &[&str]) -> Result<Self, Error> {
        Self::new(Fp::new(p)?, names.iter().map(|s| s.to_string()).collect())
    }

    fn check_coords(&self, v: &[u32]) -> Result<(), Error> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    fn reduce_coords(&self, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&x| x % self.field.p()).collect()
    }

    /// Sets `[b_i, b_j] = v`, and `[b_j, b_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[u32]) -> Result<(), Error> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(Error::Malformed(format!("basis index out of range ({i}, {j})")));
        }
        self.check_coords(v)?;
        let v = self.reduce_coords(v);
        if i == j {
            if v.iter().any(|&x| x != 0) {
                return Err(Error::Malformed(format!("[{0},{0}] must be 0", self.names[i])));
            }
            return Ok(());
        }
        let neg: Vec<u32> = v.iter().map(|&x| self.field.neg(x)).collect();
        self.bracket[i * n + j] = v;
        self.bracket[j * n + i] = neg;
        Ok(())
    }

    pub fn set_pmap(&mut self, i: usize, v: &[u32]) -> Result<(), Error> {
        if i >= self.dim() {
            return Err(Error::Malformed(format!("basis index out of range ({i})")));
        }
        self.check_coords(v)?;
        self.pmap[i] = self.reduce_coords(v);
        Ok(())
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[b_i, b_j]` on coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i * self.dim() + j]
    }

    /// `b_i^[p]` on coordinates.
    pub fn basis_pmap(&self, i: usize) -> &[u32] {
        &self.pmap[i]
    }

    pub fn basis_element(&self, i: usize) -> LieElement {
        LieElement::new(unit_vector(self.dim(), i))
    }

    pub fn zero(&self) -> LieElement {
        LieElement::new(vec![0; self.dim()])
    }

    pub fn element(&self, coords: Vec<u32>) -> Result<LieElement, Error> {
        self.check_coords(&coords)?;
        Ok(LieElement::new(self.reduce_coords(&coords)))
    }

    fn bracket_raw(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 || i == j {
                    continue;
                }
                let c = f.mul(a, b);
                for (o, &t) in out.iter_mut().zip(&self.bracket[i * n + j]) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, Error> {
        self.check_coords(&x.coords)?;
        self.check_coords(&y.coords)?;
        Ok(LieElement::new(self.bracket_raw(&x.coords, &y.coords)))
    }

    /// Matrix of `ad x = [x, -]`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[u32]) -> Vec<Vec<u32>> {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = (0..n).map(|j| self.bracket_raw(x, &unit_vector(n, j))).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }

    /// Exhaustive check of the Jacobi identity on basis triples and of the
    /// Jacobson condition `ad(b_i^[p]) = (ad b_i)^p`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let f = self.field;
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket_raw(self.basis_bracket(i, j), &unit_vector(n, k));
                    let t2 = self.bracket_raw(self.basis_bracket(j, k), &unit_vector(n, i));
                    let t3 = self.bracket_raw(self.basis_bracket(k, i), &unit_vector(n, j));
                    let ok = (0..n).all(|r| f.add(f.add(t1[r], t2[r]), t3[r]) == 0);
                    if !ok {
                        report.jacobi.push([i, j, k]);
                    }
                }
            }
        }
        for i in 0..n {
            let lhs = self.ad_matrix(&self.pmap[i]);
            let rhs = mat_pow(f, &self.ad_matrix(&unit_vector(n, i)), f.p() as u64);
            if lhs != rhs {
                report.jacobson.push(i);
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let rows: Vec<Vec<u32>> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j).to_vec())
            .collect();
        rref(self.field, n, &rows).expect("table rows have length n")
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.iter().all(|&x| x == 0))
    }

    /// `{x : [x, s] = 0 for every s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace, Error> {
        let n = self.dim();
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.ambient_dim() });
        }
        let images: Vec<Vec<u32>> = (0..n)
            .map(|a| {
                let e = unit_vector(n, a);
                s.rows().iter().flat_map(|r| self.bracket_raw(&e, r)).collect()
            })
            .collect();
        if s.is_zero() {
            return Ok(Subspace::full(self.field, n));
        }
        kernel(self.field, n * s.dim(), &images)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.field, self.dim())).expect("ambient matches")
    }

    /// `{x : [x, L] ⊆ below}`.
    fn central_preimage(&self, below: &Subspace) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(self.field, 0);
        }
        let images: Vec<Vec<u32>> = (0..n)
            .map(|a| {
                let e = unit_vector(n, a);
                (0..n)
                    .flat_map(|i| {
                        below.reduce(&self.bracket_raw(&e, &unit_vector(n, i))).expect("length n")
                    })
                    .collect()
            })
            .collect();
        kernel(self.field, n * n, &images).expect("rows have length n*n")
    }

    /// `ζ_0 = 0 ⊂ ζ_1 = Z(L) ⊂ …`, strictly increasing, ending at the first
    /// term that repeats.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.field, self.dim())];
        loop {
            let next = self.central_preimage(series.last().expect("nonempty"));
            if &next == series.last().expect("nonempty") {
                return series;
            }
            series.push(next);
        }
    }

    /// `γ_1 = L ⊇ γ_2 = L' ⊇ …`, ending at `0` or at the first term that repeats.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut series = vec![Subspace::full(self.field, n)];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                return series;
            }
            let rows: Vec<Vec<u32>> = last
                .rows()
                .iter()
                .flat_map(|v| (0..n).map(move |i| (v, i)))
                .map(|(v, i)| self.bracket_raw(v, &unit_vector(n, i)))
                .collect();
            let next = rref(self.field, n, &rows).expect("length n");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// Least `c` with `γ_{c+1} = 0`, or `None` when L is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().expect("nonempty").is_zero() {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    /// The same class read off the upper central series.
    pub fn nilpotency_class_upper(&self) -> Option<usize> {
        let series = self.upper_central_series();
        if series.last().expect("nonempty").dim() == self.dim() {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    /// `x^[p]` for an arbitrary element, computed as the p-th power of `x` in
    /// u(L) and read back from the degree-one part.
    pub fn pmap_general(&self, x: &LieElement) -> Result<LieElement, Error> {
        let alg = EnvAlgebra::build(self.clone(), u32::MAX as u64)?;
        alg.lie_pmap(x)
    }

    /// `⟨S⟩_p`: the smallest ideal containing S that is closed under the p-map.
    pub fn restricted_closure(&self, s: &Subspace) -> Result<Subspace, Error> {
        let n = self.dim();
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.ambient_dim() });
        }
        let alg = EnvAlgebra::build(self.clone(), u32::MAX as u64)?;
        let mut current = s.clone();
        loop {
            let mut rows = current.rows().to_vec();
            for v in current.rows() {
                for i in 0..n {
                    rows.push(self.bracket_raw(v, &unit_vector(n, i)));
                }
                rows.push(alg.lie_pmap(&LieElement::new(v.clone()))?.coords);
            }
            let next = rref(self.field, n, &rows)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `L / I` on the complement basis formed by the non-pivot coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, Error> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: ideal.ambient_dim() });
        }
        let alg = EnvAlgebra::build(self.clone(), u32::MAX as u64)?;
        for v in ideal.rows() {
            for i in 0..n {
                let w = self.bracket_raw(v, &unit_vector(n, i));
                if !ideal.contains(&w)? {
                    return Err(Error::NotRestrictedIdeal(format!(
                        "[{}, {}] = {} lies outside",
                        self.describe(v),
                        self.names[i],
                        self.describe(&w)
                    )));
                }
            }
            let q = alg.lie_pmap(&LieElement::new(v.clone()))?;
            if !ideal.contains(q.coords())? {
                return Err(Error::NotRestrictedIdeal(format!(
                    "({})^[p] = {} lies outside",
                    self.describe(v),
                    self.describe(q.coords())
                )));
            }
        }
        let keep = ideal.complement_columns();
        let names = keep.iter().map(|&c| self.names[c].clone()).collect();
        let mut spec = LieAlgebraSpec::new(self.field, names)?;
        let projection = Projection { ideal: ideal.clone(), keep: keep.clone() };
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate().skip(a + 1) {
                let v = projection.apply_raw(self.basis_bracket(ca, cb));
                spec.set_bracket(a, b, &v)?;
            }
            let q = alg.lie_pmap(&self.basis_element(ca))?;
            spec.set_pmap(a, &projection.apply_raw(q.coords()))?;
        }
        Ok(Quotient { spec, projection })
    }

    /// Human-readable linear combination of basis names.
    pub fn describe(&self, v: &[u32]) -> String {
        crate::format::emit_lincomb(&self.names, v)
    }

    /// Image of a Lie element in u(L) as a degree-one element.
    pub fn embed(&self, alg: &EnvAlgebra, x: &LieElement) -> EnvElement {
        alg.embed(x)
    }
}

/// Projection `L -> L / I` onto the complement coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub ideal: Subspace,
    pub keep: Vec<usize>,
}

impl Projection {
    fn apply_raw(&self, v: &[u32]) -> Vec<u32> {
        self.ideal.project_to_complement(v).expect("length n")
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement, Error> {
        Ok(LieElement::new(self.ideal.project_to_complement(x.coords())?))
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub spec: LieAlgebraSpec,
    pub projection: Projection,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn heis(p: u64, z_pmap: bool) -> LieAlgebraSpec {
        let mut s = LieAlgebraSpec::with_names(p, &["x", "y", "z"]).unwrap();
        s.set_bracket(0, 1, &[0, 0, 1]).unwrap();
        if z_pmap {
            s.set_pmap(2, &[0, 0, 1]).unwrap();
        }
        s
    }

    fn two_dim(p: u64) -> LieAlgebraSpec {
        let mut s = LieAlgebraSpec::with_names(p, &["x", "y"]).unwrap();
        s.set_bracket(0, 1, &[1, 0]).unwrap();
        s.set_pmap(1, &[0, 1]).unwrap();
        s
    }

    fn class3(p: u64) -> LieAlgebraSpec {
        let mut s = LieAlgebraSpec::with_names(p, &["x", "y", "v", "w"]).unwrap();
        s.set_bracket(0, 1, &[0, 0, 1, 0]).unwrap();
        s.set_bracket(1, 2, &[0, 0, 0, 1]).unwrap();
        s
    }

    fn span(s: &LieAlgebraSpec, rows: &[Vec<u32>]) -> Subspace {
        rref(s.field(), s.dim(), rows).unwrap()
    }

    #[test]
    fn validation_examples() {
        let ab = LieAlgebraSpec::with_names(3, &["a", "b"]).unwrap();
        assert!(ab.is_valid());
        assert!(heis(3, false).is_valid());
        assert!(heis(3, true).is_valid());

        // [x,y] = x with x^[3] = x: (ad x)^3 = 0 but ad x != 0.
        let mut bad = LieAlgebraSpec::with_names(3, &["x", "y"]).unwrap();
        bad.set_bracket(0, 1, &[1, 0]).unwrap();
        bad.set_pmap(0, &[1, 0]).unwrap();
        bad.set_pmap(1, &[0, 1]).unwrap();
        assert_eq!(bad.validate().jacobson, vec![0]);
        assert!(bad.validate().jacobi.is_empty());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [x,y]=z, [y,z]=x, [z,x]=z fails Jacobi.
        let mut s = LieAlgebraSpec::with_names(5, &["x", "y", "z"]).unwrap();
        s.set_bracket(0, 1, &[0, 0, 1]).unwrap();
        s.set_bracket(1, 2, &[1, 0, 0]).unwrap();
        s.set_bracket(2, 0, &[0, 0, 1]).unwrap();
        assert_eq!(s.validate().jacobi, vec![[0, 1, 2]]);
    }

    #[test]
    fn names_are_checked() {
        assert!(LieAlgebraSpec::with_names(3, &["x", "x"]).is_err());
        assert!(LieAlgebraSpec::with_names(3, &["x-1"]).is_err());
        assert!(LieAlgebraSpec::with_names(3, &[""]).is_err());
        let mut s = LieAlgebraSpec::with_names(3, &["x"]).unwrap();
        assert!(s.set_bracket(0, 0, &[1]).is_err());
    }

    #[test]
    fn bracket_examples() {
        let h = heis(3, false);
        let z = h.bracket(&h.basis_element(0), &h.basis_element(1)).unwrap();
        assert_eq!(z, h.basis_element(2));
        let yx = h.bracket(&h.basis_element(1), &h.basis_element(0)).unwrap();
        assert_eq!(yx.coords(), &[0, 0, 2]);
        let v = h.element(vec![1, 2, 2]).unwrap();
        assert!(h.bracket(&v, &v).unwrap().is_zero());
        assert!(h.bracket(&v, &LieElement::new(vec![1])).is_err());
    }

    #[test]
    fn derived_and_center() {
        let ab = LieAlgebraSpec::with_names(5, &["a", "b", "c"]).unwrap();
        assert_eq!(ab.derived_subalgebra().dim(), 0);
        let h = heis(3, false);
        assert_eq!(h.derived_subalgebra(), span(&h, &[vec![0, 0, 1]]));
        assert_eq!(h.center(), span(&h, &[vec![0, 0, 1]]));
        // ad-kernel of [x,y]=x: a x + b y central forces b = 0 (from [.,x]) and a = 0.
        assert!(two_dim(3).center().is_zero());
        let full = Subspace::full(h.field(), 3);
        assert_eq!(h.centralizer(&full).unwrap(), h.center());
        assert_eq!(h.centralizer(&Subspace::zero(h.field(), 3)).unwrap(), full);
    }

    #[test]
    fn central_series() {
        let ab = LieAlgebraSpec::with_names(3, &["a", "b"]).unwrap();
        let up = ab.upper_central_series();
        assert_eq!(up.len(), 2);
        assert_eq!(up[1].dim(), 2);

        let h = heis(3, false);
        let up: Vec<usize> = h.upper_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(up, vec![0, 1, 3]);
        assert_eq!(h.nilpotency_class(), Some(2));

        let c3 = class3(3);
        let up = c3.upper_central_series();
        assert!(up[1].contains(&[0, 0, 0, 1]).unwrap());
        let low: Vec<Subspace> = c3.lower_central_series();
        assert_eq!(low[1], span(&c3, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]));
        assert_eq!(low[2], span(&c3, &[vec![0, 0, 0, 1]]));
        assert!(low[3].is_zero());
        assert_eq!(c3.nilpotency_class(), Some(3));
        assert_eq!(c3.nilpotency_class_upper(), Some(3));

        let nn = two_dim(5);
        assert_eq!(nn.nilpotency_class(), None);
        assert_eq!(nn.nilpotency_class_upper(), None);
        let low = nn.lower_central_series();
        assert_eq!(low.last().unwrap(), &span(&nn, &[vec![1, 0]]));
    }

    #[test]
    fn zero_dimensional_algebra() {
        let z = LieAlgebraSpec::with_names(3, &[]).unwrap();
        assert!(z.is_valid());
        assert_eq!(z.nilpotency_class(), Some(0));
        assert_eq!(z.nilpotency_class_upper(), Some(0));
        assert!(z.center().is_zero());
    }

    #[test]
    fn pmap_on_basis_and_sums() {
        let h = heis(3, true);
        let z = h.basis_element(2);
        assert_eq!(h.pmap_general(&z).unwrap(), z);
        let x = h.basis_element(0);
        assert!(h.pmap_general(&x).unwrap().is_zero());

        let mut ab = LieAlgebraSpec::with_names(5, &["a", "b"]).unwrap();
        ab.set_pmap(0, &[1, 1]).unwrap();
        ab.set_pmap(1, &[0, 3]).unwrap();
        let s = ab.pmap_general(&ab.element(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(s.coords(), &[1, 4]);

        // (x+y)^3 in u(L) for the Heisenberg algebra with zero p-map: every
        // Jacobson correction is a double bracket, and z is central.
        let h0 = heis(3, false);
        assert!(h0.pmap_general(&h0.element(vec![1, 1, 0]).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn restricted_closures() {
        let h = heis(3, false);
        let z = h.center();
        assert_eq!(h.restricted_closure(&z).unwrap(), z);
        let sx = span(&h, &[vec![1, 0, 0]]);
        assert_eq!(
            h.restricted_closure(&sx).unwrap(),
            span(&h, &[vec![1, 0, 0], vec![0, 0, 1]])
        );
        let full = Subspace::full(h.field(), 3);
        assert_eq!(h.restricted_closure(&full).unwrap(), full);

        // z^[3] = z keeps span{z}; in the 2-dim algebra y^[3] = y pulls y in.
        let hz = heis(3, true);
        assert_eq!(hz.restricted_closure(&hz.center()).unwrap(), hz.center());
    }

    #[test]
    fn quotients() {
        let h = heis(3, false);
        let q0 = h.quotient(&Subspace::zero(h.field(), 3)).unwrap();
        assert_eq!(q0.spec, h);

        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.spec.dim(), 2);
        assert!(q.spec.is_abelian());
        assert!(q.spec.is_valid());
        assert_eq!(q.spec.names(), &["x".to_string(), "y".to_string()]);

        let c3 = class3(5);
        let q = c3.quotient(&span(&c3, &[vec![0, 0, 0, 1]])).unwrap();
        assert_eq!(q.spec.dim(), 3);
        assert!(q.spec.is_valid());
        assert_eq!(q.spec.nilpotency_class(), Some(2));
        let img = q.projection.apply(&c3.element(vec![1, 2, 3, 4]).unwrap()).unwrap();
        assert_eq!(img.coords(), &[1, 2, 3]);

        let err = h.quotient(&span(&h, &[vec![1, 0, 0]])).unwrap_err();
        assert!(matches!(err, Error::NotRestrictedIdeal(_)), "{err}");
    }

    #[test]
    fn quotient_needs_pmap_closure() {
        // span{z} is an ideal of the abelian algebra, but z^[3] = x leaves it.
        let mut s = LieAlgebraSpec::with_names(3, &["x", "z"]).unwrap();
        s.set_pmap(1, &[1, 0]).unwrap();
        let err = s.quotient(&span(&s, &[vec![0, 1]])).unwrap_err();
        assert!(err.to_string().contains("^[p]"), "{err}");
    }

    proptest! {
        #[test]
        fn pmap_is_semilinear(a in 0u32..3, c in prop::collection::vec(0u32..3, 3)) {
            let h = heis(3, true);
            let x = h.element(c.clone()).unwrap();
            let ax = h.element(c.iter().map(|&v| h.field().mul(a, v)).collect()).unwrap();
            let lhs = h.pmap_general(&ax).unwrap();
            let px = h.pmap_general(&x).unwrap();
            let ap = h.field().pow(a, 3);
            let rhs: Vec<u32> = px.coords().iter().map(|&v| h.field().mul(ap, v)).collect();
            prop_assert_eq!(lhs.coords(), &rhs[..]);
        }
    }
}
