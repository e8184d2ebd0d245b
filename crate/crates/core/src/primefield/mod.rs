//! Exact dense linear algebra over the prime field `F_p`.
//!
//! Entries are stored reduced in `0..p` as `u32`; products are formed in
//! `u64`, so any prime below `2^31` is supported. For `p = 2` row reduction
//! switches to a bit-packed kernel ([`gf2`]) with identical results.

mod gf2;

use std::fmt;

use crate::error::{Error, Result};
use crate::exec;

/// Trial-division primality test; adequate for the small primes used here.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while (k as u64) * (k as u64) <= p as u64 {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Rejects non-primes with [`Error::NotPrime`].
pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    add(p, a, p - b % p)
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(p: u32, mut a: u32, mut e: u64) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(p, acc, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse; panics on zero.
pub fn inv(p: u32, a: u32) -> u32 {
    assert!(a % p != 0, "zero has no inverse in F_{p}");
    pow(p, a, p as u64 - 2)
}

/// Reduces a signed integer into `0..p`.
pub fn reduce(p: u32, a: i64) -> u32 {
    a.rem_euclid(p as i64) as u32
}

/// `y += c * x` in place.
#[inline]
pub fn axpy(p: u32, y: &mut [u32], c: u32, x: &[u32]) {
    if c == 0 {
        return;
    }
    let p64 = p as u64;
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = ((*yi as u64 + c as u64 * xi as u64) % p64) as u32;
        }
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PFMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`PFMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: PFMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for PFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PFMatrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl PFMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        PFMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::mismatch("from_rows", cols, row.len()));
            }
            for (c, &v) in row.iter().enumerate() {
                m.data[r * cols + c] = reduce(p, v);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from already reduced row-major data.
    pub fn from_data(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::mismatch("from_data", rows * cols, data.len()));
        }
        debug_assert!(data.iter().all(|&x| x < p));
        Ok(PFMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zeros(p, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::mismatch("from_columns", rows, col.len()));
            }
            for (r, &v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v % p;
            }
        }
        Ok(m)
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = reduce(p, f(r, c));
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> PFMatrix {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn check_field(&self, other: &PFMatrix, op: &'static str) -> Result<()> {
        if self.p != other.p {
            return Err(Error::mismatch(op, format!("F_{}", self.p), format!("F_{}", other.p)));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "matmul")?;
        if self.cols != other.rows {
            return Err(Error::mismatch(
                "matmul",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let p = self.p as u64;
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = Self::zeros(self.p, n, m);
        // Accumulate in u64 and reduce lazily; p < 2^31 keeps (p-1)^2 < 2^62.
        let lazy = (u64::MAX / ((p - 1).max(1) * (p - 1).max(1))).min(1 << 20) as usize;
        let a = &self.data;
        let b = &other.data;
        exec::for_each_chunk_mut(&mut out.data, m.max(1), |r, out_row| {
            let mut acc = vec![0u64; m];
            let mut pending = 0usize;
            for t in 0..k {
                let x = a[r * k + t] as u64;
                if x == 0 {
                    continue;
                }
                let brow = &b[t * m..(t + 1) * m];
                for (acc_c, &y) in acc.iter_mut().zip(brow) {
                    *acc_c += x * y as u64;
                }
                pending += 1;
                if pending >= lazy {
                    acc.iter_mut().for_each(|v| *v %= p);
                    pending = 0;
                }
            }
            for (o, v) in out_row.iter_mut().zip(acc) {
                *o = (v % p) as u32;
            }
        });
        Ok(out)
    }

    pub fn mat_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::mismatch("mat_vec", self.cols, v.len()));
        }
        let p = self.p as u64;
        Ok((0..self.rows)
            .map(|r| {
                let s = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect())
    }

    pub fn add(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "add")?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::mismatch(
                "add",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let p = self.p;
        Ok(PFMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| add(p, a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.add(&other.scale(other.p - 1))
    }

    pub fn scale(&self, c: u32) -> PFMatrix {
        let p = self.p;
        PFMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| mul(p, a, c % p)).collect(),
        }
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "kron")?;
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Self::zeros(self.p, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.data[(i * r2 + k) * (c1 * c2) + j * c2 + l] =
                            mul(self.p, a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "hstack")?;
        if self.rows != other.rows {
            return Err(Error::mismatch("hstack", self.rows, other.rows));
        }
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.p, self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "vstack")?;
        if self.cols != other.cols {
            return Err(Error::mismatch("vstack", self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(PFMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal composition `diag(self, other)`.
    pub fn block_diag(&self, other: &PFMatrix) -> Result<PFMatrix> {
        self.check_field(other, "block_diag")?;
        let mut out = Self::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// Sub-matrix of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> PFMatrix {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + k] = self.get(r, c);
            }
        }
        out
    }

    /// Sub-matrix of the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> PFMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        PFMatrix {
            p: self.p,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        if self.p == 2 {
            gf2::rref(self)
        } else {
            self.rref_generic()
        }
    }

    /// Reduced row-echelon form via the generic `F_p` kernel, regardless of `p`.
    pub fn rref_generic(&self) -> Rref {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    m.swap(pr * cols + k, r * cols + k);
                }
            }
            let s = inv(p, m[r * cols + c]);
            for k in c..cols {
                m[r * cols + k] = mul(p, m[r * cols + k], s);
            }
            let pivot_row: Vec<u32> = m[r * cols..(r + 1) * cols].to_vec();
            let pr_idx = r;
            exec::for_each_chunk_mut(&mut m, cols, |i, row| {
                if i == pr_idx {
                    return;
                }
                let f = row[c];
                if f != 0 {
                    axpy(p, &mut row[c..], p - f, &pivot_row[c..]);
                }
            });
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: PFMatrix {
                p,
                rows,
                cols,
                data: m,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel, as the columns of a `cols x nullity` matrix.
    pub fn kernel_basis(&self) -> PFMatrix {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if v != 0 {
                    k.set(pc, j, neg(p, v));
                }
            }
        }
        k
    }

    /// Canonical basis of the column space, as columns.
    pub fn column_space(&self) -> PFMatrix {
        let r = self.transpose().rref();
        r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>()).transpose()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is not in the column span.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::mismatch("solve", self.rows, b.len()));
        }
        let col = PFMatrix::from_columns(self.p, self.rows, &[b.to_vec()])?;
        Ok(self.solve_matrix(&col)?.map(|x| x.column(0)))
    }

    /// Some `X` with `self * X = B`, or `None` if a column of `B` is outside the span.
    pub fn solve_matrix(&self, b: &PFMatrix) -> Result<Option<PFMatrix>> {
        self.check_field(b, "solve")?;
        if b.rows != self.rows {
            return Err(Error::mismatch("solve", self.rows, b.rows));
        }
        let aug = self.hstack(b)?.rref();
        let mut x = Self::zeros(self.p, self.cols, b.cols);
        for (i, &pc) in aug.pivots.iter().enumerate() {
            if pc >= self.cols {
                return Ok(None);
            }
            for j in 0..b.cols {
                x.set(pc, j, aug.matrix.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Result<Option<PFMatrix>> {
        if !self.is_square() {
            return Err(Error::mismatch("inverse", self.rows, self.cols));
        }
        let id = Self::identity(self.p, self.rows);
        let aug = self.hstack(&id)?.rref();
        if aug.pivots.iter().take(self.rows).any(|&c| c >= self.cols) || aug.rank < self.rows {
            return Ok(None);
        }
        if aug.pivots[..self.rows].iter().enumerate().any(|(i, &c)| c != i) {
            return Ok(None);
        }
        let idx: Vec<usize> = (self.cols..2 * self.cols).collect();
        Ok(Some(aug.matrix.select_columns(&idx)))
    }
}

/// Incrementally built semi-echelon basis of a subspace of `F_p^dim`.
///
/// Rows are kept in insertion order with distinct pivots; each new row is
/// reduced against all earlier rows before insertion.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    p: u32,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(p: u32, dim: usize) -> Self {
        EchelonBasis {
            p,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` in place against the basis.
    pub fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                axpy(p, v, p - f, row);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns `true` if it was independent of the current span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let s = inv(self.p, w[pc]);
                w.iter_mut().for_each(|x| *x = mul(self.p, *x, s));
                self.rows.push(w);
                self.pivots.push(pc);
                true
            }
        }
    }

    /// The stored (reduced) basis vectors.
    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// Subspace of `F_p^dim` held as a reduced row-echelon basis.
///
/// Because the basis is fully reduced, the coordinates of a member vector are
/// simply its entries at the pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, dim: usize) -> Self {
        Subspace {
            p,
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of the given vectors (each of length `dim`).
    pub fn span(p: u32, dim: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(p, dim);
        }
        let mut data = Vec::with_capacity(vectors.len() * dim);
        for v in vectors {
            debug_assert_eq!(v.len(), dim);
            data.extend_from_slice(v);
        }
        let m = PFMatrix::from_data(p, vectors.len(), dim, data).expect("span shape");
        Self::row_space(&m)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &PFMatrix) -> Self {
        let r = m.rref();
        Subspace {
            p: m.p(),
            dim: m.cols(),
            basis: (0..r.rank).map(|k| r.matrix.row(k).to_vec()).collect(),
            pivots: r.pivots,
        }
    }

    /// Column space of a matrix.
    pub fn column_space_of(m: &PFMatrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c: Vec<u32> = self.pivots.iter().map(|&k| v[k]).collect();
        let mut w = v.to_vec();
        for (b, &x) in self.basis.iter().zip(&c) {
            if x != 0 {
                axpy(self.p, &mut w, self.p - x, b);
            }
        }
        w.iter().all(|&x| x == 0).then_some(c)
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&k| v[k]).collect()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        for (b, &x) in self.basis.iter().zip(coords) {
            axpy(self.p, &mut v, x, b);
        }
        v
    }

    /// Basis as the rows of a matrix.
    pub fn to_matrix(&self) -> PFMatrix {
        let data = self.basis.concat();
        PFMatrix::from_data(self.p, self.basis.len(), self.dim, data).expect("basis shape")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn rref_identity_and_zero() {
        for p in [2, 3, 5] {
            let id = PFMatrix::identity(p, 4);
            let r = id.rref();
            assert_eq!(r.matrix, id);
            assert_eq!(r.rank, 4);
            assert_eq!(r.pivots, vec![0, 1, 2, 3]);
            let z = PFMatrix::zeros(p, 3, 5);
            let r = z.rref();
            assert_eq!(r.rank, 0);
            assert!(r.pivots.is_empty());
            assert!(r.matrix.is_zero());
        }
    }

    #[test]
    fn rank_one_over_f5() {
        let m = PFMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(PFMatrix::identity(3, 4).kernel_basis().cols(), 0);
        let k = PFMatrix::zeros(3, 4, 4).kernel_basis();
        assert_eq!(k.cols(), 4);
        assert_eq!(k.rank(), 4);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = PFMatrix::identity(7, 3);
        assert_eq!(id.solve(&[1, 5, 6]).unwrap(), Some(vec![1, 5, 6]));
        let m = PFMatrix::from_rows(3, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.solve(&[1, 2]).unwrap(), None);
        assert!(m.solve(&[1]).is_err());
    }

    #[test]
    fn kron_of_identities() {
        let k = PFMatrix::identity(5, 2)
            .kron(&PFMatrix::identity(5, 3))
            .unwrap();
        assert_eq!(k, PFMatrix::identity(5, 6));
    }

    #[test]
    fn matmul_shape_mismatch_is_reported() {
        let a = PFMatrix::zeros(3, 2, 3);
        assert!(matches!(
            a.matmul(&a),
            Err(Error::DimensionMismatch { .. })
        ));
        let b = PFMatrix::zeros(5, 3, 2);
        assert!(a.matmul(&b).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = PFMatrix::from_rows(5, &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.matmul(&inv).unwrap(), PFMatrix::identity(5, 2));
        let s = PFMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(s.inverse().unwrap(), None);
    }

    #[test]
    fn echelon_basis_membership() {
        let mut b = EchelonBasis::new(3, 3);
        assert!(b.insert(&[1, 2, 0]));
        assert!(b.insert(&[0, 1, 1]));
        assert!(!b.insert(&[1, 1, 2]));
        assert!(b.contains(&[2, 1, 0]));
        assert!(!b.contains(&[0, 0, 1]));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::span(5, 3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![1, 3, 4];
        let c = s.coords(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert_eq!(s.coords(&[0, 1, 0]), None);
    }

    #[test]
    fn gf2_path_matches_generic() {
        let m = PFMatrix::from_fn(2, 9, 70, |r, c| ((r * 7 + c * 3 + r * c) % 5 == 0) as i64);
        assert_eq!(m.rref(), m.rref_generic());
    }
}
