//! Exact linear algebra over F_p.
//!
//! [`Subspace`] is the canonical object: a dense reduced row echelon basis, so
//! two subspaces are equal as sets exactly when they compare equal. Pivots are
//! chosen as the first nonzero entry in column order, which makes every result
//! reproducible.
//!
//! [`Echelon`] is the incremental, sparse counterpart used when spans are
//! accumulated one vector at a time inside u(L), where the ambient dimension
//! can be large and most vectors have few nonzero coordinates.

use crate::error::Error;
use crate::field::Fp;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec = Vec<(usize, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Fp,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

fn check_len(expected: usize, v: &[u32]) -> Result<(), Error> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: v.len() });
    }
    Ok(())
}

/// Row-reduces `rows` (each of length `ambient`) to canonical RREF.
pub fn rref(field: Fp, ambient: usize, rows: &[Vec<u32>]) -> Result<Subspace, Error> {
    for r in rows {
        check_len(ambient, r)?;
    }
    let mut m: Vec<Vec<u32>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ambient {
        if rank == m.len() {
            break;
        }
        let Some(sel) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = field.inv(m[rank][col]);
        for x in m[rank][col..].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let c = field.neg(row[col]);
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if y != 0 {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    Ok(Subspace { field, ambient, rows: m, pivots })
}

/// Kernel of the linear map sending basis vector `e_i` of F_p^`images.len()`
/// to `images[i]` (each of length `target`).
pub fn kernel(field: Fp, target: usize, images: &[Vec<u32>]) -> Result<Subspace, Error> {
    let domain = images.len();
    let columns: Vec<SparseVec> = images
        .iter()
        .map(|v| {
            check_len(target, v)?;
            Ok(dense_to_sparse(v))
        })
        .collect::<Result<_, Error>>()?;
    let basis = sparse_kernel(field, target, &columns);
    let rows: Vec<Vec<u32>> = basis.iter().map(|v| sparse_to_dense(v, domain)).collect();
    rref(field, domain, &rows)
}

pub fn dense_to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect()
}

pub fn sparse_to_dense(v: &[(usize, u32)], len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for &(i, x) in v {
        out[i] = x;
    }
    out
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span(field: Fp, ambient: usize, rows: &[Vec<u32>]) -> Result<Self, Error> {
        rref(field, ambient, rows)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `v` minus its component along the pivot coordinates; zero iff `v` is a member.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>, Error> {
        check_len(self.ambient, v)?;
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = out[piv];
            if c == 0 {
                continue;
            }
            let c = f.neg(c);
            for (x, &y) in out[piv..].iter_mut().zip(&row[piv..]) {
                if y != 0 {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        for r in &other.rows {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let rows: Vec<Vec<u32>> = self.rows.iter().chain(&other.rows).cloned().collect();
        rref(self.field, self.ambient, &rows)
    }

    /// Set equality; identical to `==` but checks the ambient dimension.
    pub fn equal(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let f = self.field;
        // (a, b) with sum a_i s_i - sum b_j t_j = 0 gives the intersection vector sum a_i s_i.
        let images: Vec<Vec<u32>> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|r| r.iter().map(|&x| f.neg(x)).collect()))
            .collect();
        let k = kernel(f, self.ambient, &images)?;
        let mut out = Vec::with_capacity(k.dim());
        for coeffs in k.rows() {
            let mut v = vec![0u32; self.ambient];
            for (c, row) in coeffs[..self.dim()].iter().zip(&self.rows) {
                if *c == 0 {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*c, y));
                }
            }
            out.push(v);
        }
        rref(f, self.ambient, &out)
    }

    /// Coordinates of `v` on the non-pivot columns after reduction, i.e. the image
    /// of `v` in the quotient `F^d / self` on its standard complement basis.
    pub fn project_to_complement(&self, v: &[u32]) -> Result<Vec<u32>, Error> {
        let r = self.reduce(v)?;
        Ok(self.complement_columns().into_iter().map(|c| r[c]).collect())
    }

    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

pub fn unit_vector(len: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Incremental echelon basis over sparse vectors.
///
/// Rows are kept in echelon form with leading entry 1; they are not reduced
/// above their pivots. Reduction uses a dense scratch buffer of the ambient
/// length.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Fp,
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: Fp, ambient: usize) -> Self {
        Echelon { field, ambient, rows: Vec::new(), pivot_row: vec![None; ambient] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, u32)]) -> SparseVec {
        let mut buf = vec![0u32; self.ambient];
        for &(i, x) in v {
            buf[i] = x;
        }
        self.reduce_dense(&mut buf, self.ambient)
    }

    /// Reduces a dense buffer in place, eliminating only pivots below `limit`;
    /// returns its sparse form.
    fn reduce_dense(&self, buf: &mut [u32], limit: usize) -> SparseVec {
        let f = self.field;
        let start = buf.iter().position(|&x| x != 0).unwrap_or(buf.len());
        for col in start..limit.min(buf.len()) {
            let c = buf[col];
            if c == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[col] {
                let c = f.neg(c);
                for &(j, y) in &self.rows[r as usize] {
                    buf[j] = f.add(buf[j], f.mul(c, y));
                }
            }
        }
        dense_to_sparse(buf)
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert(&mut self, v: &[(usize, u32)]) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    fn insert_reduced(&mut self, mut r: SparseVec) -> bool {
        let Some(&(lead, c)) = r.first() else {
            return false;
        };
        let inv = self.field.inv(c);
        for e in r.iter_mut() {
            e.1 = self.field.mul(e.1, inv);
        }
        self.pivot_row[lead] = Some(self.rows.len() as u32);
        self.rows.push(r);
        true
    }

    /// Canonical dense RREF of the accumulated span.
    pub fn to_subspace(&self) -> Subspace {
        let rows: Vec<Vec<u32>> = self.rows.iter().map(|r| sparse_to_dense(r, self.ambient)).collect();
        rref(self.field, self.ambient, &rows).expect("rows have ambient length")
    }
}

/// Basis of the kernel of the map `e_i -> columns[i]` (vectors in F_p^`target`),
/// as sparse vectors of length `columns.len()`.
pub fn sparse_kernel(field: Fp, target: usize, columns: &[SparseVec]) -> Vec<SparseVec> {
    // Augmented rows (image | e_i). Pivots are only taken in the image block;
    // a row whose image part reduces to zero carries a kernel vector.
    let width = target + columns.len();
    let mut ech = Echelon::new(field, width);
    let mut out = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        let mut buf = vec![0u32; width];
        for &(j, x) in col {
            buf[j] = x;
        }
        buf[target + i] = 1;
        let r = ech.reduce_dense(&mut buf, target);
        match r.first() {
            Some(&(lead, _)) if lead < target => {
                ech.insert_reduced(r);
            }
            _ => out.push(r.into_iter().map(|(j, x)| (j - target, x)).collect()),
        }
    }
    out
}
