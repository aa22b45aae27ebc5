//! Dense linear algebra over a prime field `F_p`.
//!
//! Everything else in the crate (representations, intertwiners, chain maps,
//! homotopies) is eventually flattened into vectors and matrices over `F_p`
//! and handed to [`FpMatrix::reduce`].

use std::fmt;

use crate::error::{Error, Result};

/// A prime field `F_p`. Cheap to copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=65521).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    field: Fp,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over F_{}", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of Gauss-Jordan elimination of a matrix `m`.
#[derive(Clone, Debug)]
pub struct EchelonReport {
    pub rank: usize,
    /// Reduced row echelon form of `m`.
    pub rref: FpMatrix,
    /// Pivot column of each of the first `rank` rows of `rref`.
    pub pivots: Vec<usize>,
    /// Basis of the right kernel `{x : m x = 0}`.
    pub kernel: Vec<Vec<u32>>,
    /// Basis of the column space, taken from the pivot columns of `m`.
    pub image: Vec<Vec<u32>>,
    // invertible row transform with transform * m = rref
    transform: FpMatrix,
}

impl EchelonReport {
    pub fn nullity(&self) -> usize {
        self.kernel.len()
    }

    /// A preimage of `b` under `m`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.transform.cols, "right-hand side has wrong length");
        let c = self.transform.mul_vec(b);
        if c[self.rank..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut x = vec![0u32; self.rref.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = c[i];
        }
        Some(x)
    }
}

impl FpMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw entries; entries are reduced mod p.
    pub fn from_entries(field: Fp, rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(FpMatrix { rows, cols, field, data: entries.into_iter().map(|x| field.reduce(x)).collect() })
    }

    pub fn from_rows(field: Fp, rows: &[Vec<u32>], cols: usize) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &x) in row.iter().enumerate() {
                m.data[r * cols + c] = x % field.p;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
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

    fn check_field(&self, other: &FpMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.p, other.field.p));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let p = self.field.p as u64;
        let mut out = FpMatrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (acc_j, &b) in acc.iter_mut().zip(orow) {
                    *acc_j += a * b as u64;
                }
                // keep the accumulator bounded for large p
                if p > 256 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = (x % p) as u32;
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape or modulus mismatch (a usage error).
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        self.try_mul(other).expect("matrix product")
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn try_add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("matrix sum with different shapes".into()));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(FpMatrix { data, rows: self.rows, cols: self.cols, field: f })
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        self.try_add(other).expect("matrix sum")
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FpMatrix {
        let f = self.field;
        FpMatrix { data: self.data.iter().map(|&a| f.neg(a)).collect(), rows: self.rows, cols: self.cols, field: f }
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let f = self.field;
        FpMatrix { data: self.data.iter().map(|&a| f.mul(a, c)).collect(), rows: self.rows, cols: self.cols, field: f }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = FpMatrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn block_diag(&self, other: &FpMatrix) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.write_block(0, 0, self);
        m.write_block(self.rows, self.cols, other);
        m
    }

    pub fn write_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, nr, nc);
        for r in 0..nr {
            for c in 0..nc {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix { rows: rows.len(), cols: self.cols, field: self.field, data }
    }

    /// Gauss-Jordan elimination with rank, kernel, image and a solver.
    pub fn reduce(&self) -> EchelonReport {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut t = FpMatrix::identity(f, rows).data;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
                for j in 0..rows {
                    t.swap(pr * rows + j, r * rows + j);
                }
            }
            let inv = f.inv(a[r * cols + c]);
            if inv != 1 {
                for j in 0..cols {
                    a[r * cols + j] = f.mul(a[r * cols + j], inv);
                }
                for j in 0..rows {
                    t[r * rows + j] = f.mul(t[r * rows + j], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, a[r * cols + j]);
                    a[i * cols + j] = f.sub(a[i * cols + j], v);
                }
                for j in 0..rows {
                    let v = f.mul(factor, t[r * rows + j]);
                    t[i * rows + j] = f.sub(t[i * rows + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        let rref = FpMatrix { rows, cols, field: f, data: a };
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(rref.get(i, free));
                }
                v
            })
            .collect();
        let image = pivots.iter().map(|&c| self.column(c)).collect();
        EchelonReport { rank, rref, pivots, kernel, image, transform: FpMatrix { rows, cols: rows, field: f, data: t } }
    }

    pub fn rank(&self) -> usize {
        // cheaper than reduce(): no transform bookkeeping
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(a[r * cols + c]);
            for i in r + 1..rows {
                let factor = f.mul(a[i * cols + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, a[r * cols + j]);
                    a[i * cols + j] = f.sub(a[i * cols + j], v);
                }
            }
            r += 1;
        }
        r
    }

    pub fn kernel(&self) -> Vec<Vec<u32>> {
        self.reduce().kernel
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let rep = self.reduce();
        if rep.rank != self.rows {
            return None;
        }
        Some(rep.transform)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        let mut m = self.clone();
        for _ in 0..self.rows.max(1) {
            if m.is_zero() {
                return true;
            }
            m = m.mul(self);
        }
        m.is_zero()
    }

    pub fn pow(&self, e: usize) -> FpMatrix {
        let mut r = FpMatrix::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }
}

/// Linear algebra on explicit lists of vectors (columns).
pub mod span {
    use super::{Fp, FpMatrix};

    pub fn rank(field: Fp, dim: usize, vectors: &[Vec<u32>]) -> usize {
        if vectors.is_empty() || dim == 0 {
            return 0;
        }
        FpMatrix::from_rows(field, vectors, dim).rank()
    }

    /// A basis of the span, chosen among the given vectors in order.
    pub fn basis(field: Fp, dim: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
        if dim == 0 {
            return Vec::new();
        }
        let m = FpMatrix::from_columns(field, dim, vectors);
        let rep = m.reduce();
        rep.pivots.iter().map(|&c| vectors[c].clone()).collect()
    }

    /// Vectors of `candidates` that extend a basis of `span(base)`, greedily.
    pub fn complement(field: Fp, dim: usize, base: &[Vec<u32>], candidates: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut all: Vec<Vec<u32>> = base.to_vec();
        let start = rank(field, dim, base);
        let mut r = start;
        let mut out = Vec::new();
        for c in candidates {
            all.push(c.clone());
            let nr = rank(field, dim, &all);
            if nr > r {
                r = nr;
                out.push(c.clone());
            } else {
                all.pop();
            }
        }
        out
    }

    pub fn contains(field: Fp, dim: usize, base: &[Vec<u32>], v: &[u32]) -> bool {
        let r = rank(field, dim, base);
        let mut all = base.to_vec();
        all.push(v.to_vec());
        rank(field, dim, &all) == r
    }

    /// `span(a) == span(b)`
    pub fn same_span(field: Fp, dim: usize, a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
        let ra = rank(field, dim, a);
        if ra != rank(field, dim, b) {
            return false;
        }
        let mut all = a.to_vec();
        all.extend_from_slice(b);
        rank(field, dim, &all) == ra
    }

    /// Coefficient vectors of length `d`: all `p^d` of them when that is at
    /// most `limit`, otherwise `sample` random draws.
    pub fn coefficient_vectors<R: rand::Rng>(field: Fp, d: usize, limit: u64, sample: usize, rng: &mut R) -> Vec<Vec<u32>> {
        let p = field.p() as u64;
        match u32::try_from(d).ok().and_then(|e| p.checked_pow(e)).filter(|&c| c <= limit) {
            Some(count) => (0..count).map(|k| (0..d as u32).map(|i| ((k / p.pow(i)) % p) as u32).collect()).collect(),
            None => (0..sample).map(|_| (0..d).map(|_| rng.gen_range(0..field.p())).collect()).collect(),
        }
    }

    pub fn standard_basis(dim: usize) -> Vec<Vec<u32>> {
        (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect()
    }

    pub fn lin_comb(field: Fp, dim: usize, coeffs: &[u32], vectors: &[Vec<u32>]) -> Vec<u32> {
        let mut out = vec![0u32; dim];
        for (&c, v) in coeffs.iter().zip(vectors) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(v) {
                *o = field.add(*o, field.mul(c, x));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn identity_over_f2_has_full_rank() {
        let rep = FpMatrix::identity(f2(), 2).reduce();
        assert_eq!(rep.rank, 2);
        assert!(rep.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_over_f3() {
        let f3 = Fp::new(3).unwrap();
        let rep = FpMatrix::zeros(f3, 3, 4).reduce();
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.kernel.len(), 4);
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(matches!(Fp::new(4), Err(Error::NotPrime(4))));
        assert!(Fp::new(1).is_err());
    }

    #[test]
    fn modulus_mismatch_is_reported() {
        let a = FpMatrix::identity(f2(), 2);
        let b = FpMatrix::identity(Fp::new(3).unwrap(), 2);
        assert!(matches!(a.try_mul(&b), Err(Error::ModulusMismatch(2, 3))));
    }

    #[test]
    fn solve_rejects_vectors_outside_image() {
        let f3 = Fp::new(3).unwrap();
        let m = FpMatrix::from_entries(f3, 2, 2, vec![1, 2, 2, 4]).unwrap();
        let rep = m.reduce();
        assert_eq!(rep.rank, 1);
        assert!(rep.solve(&[1, 0]).is_none());
        let x = rep.solve(&[1, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 2]);
    }

    #[test]
    fn inverse_round_trip() {
        let f5 = Fp::new(5).unwrap();
        let m = FpMatrix::from_entries(f5, 2, 2, vec![2, 1, 1, 1]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMatrix::identity(f5, 2));
    }
}
