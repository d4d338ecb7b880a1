//! Dense linear algebra over a prime field GF(p).
//!
//! Entries are stored as residues `0 <= v < p`. Every matrix carries its
//! characteristic so that mixed-field arithmetic is caught early.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A residue modulo the ambient prime.
pub type Scalar = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("characteristic mismatch: {0} vs {1}")]
    FieldMismatch(u32, u32),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    pub p: u32,
}

impl Field {
    pub fn new(p: u32) -> Self {
        debug_assert!(is_prime(p as u64));
        Field { p }
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as Scalar
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + self.p as u64 - b as u64;
        (s % self.p as u64) as Scalar
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        // Fermat: a^(p-2)
        let mut base = a as u64 % self.p as u64;
        let mut e = self.p as u64 - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as Scalar
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    pub fn from_i64(self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows of integers, reducing each entry modulo `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let f = Field::new(p);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch { expected: c, found: row.len() });
            }
            entries.extend(row.iter().map(|&v| f.from_i64(v)));
        }
        Ok(Matrix { p, rows: r, cols: c, entries })
    }

    /// A matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        Field { p: self.p }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::FieldMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (c, &b) in orow.iter().enumerate() {
                    acc[c] += a * b as u64;
                }
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for c in 0..other.cols {
                out.set(r, c, (acc[c] % p) as Scalar);
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.checked_mul(other).expect("matrix product shape mismatch")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as Scalar
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape mismatch");
        let f = self.field();
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape mismatch");
        let f = self.field();
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let f = self.field();
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn block_diag(p: u32, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = self.field();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
            if piv != row {
                for c in 0..m.cols {
                    m.entries.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col));
            if inv != 1 {
                for c in col..m.cols {
                    let v = f.mul(m.get(row, c), inv);
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().rank
    }

    /// Basis of the null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field();
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Null space basis as the columns of a `cols x nullity` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.p, self.cols, &self.kernel_basis())
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let bm = Matrix::from_columns(self.p, self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&bm)?.map(|x| x.column(0)))
    }

    /// Some `X` with `self * X = b`, or `None` if some column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.rows });
        }
        if b.p != self.p {
            return Err(LinalgError::FieldMismatch(self.p, b.p));
        }
        let aug = self.hstack(b);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.p, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(r, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve_matrix(&Matrix::identity(self.p, self.rows)).ok().flatten()
    }

    /// Indices of a maximal independent set of columns (leftmost first).
    pub fn column_basis_indices(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns spanning the image, as a `rows x rank` matrix.
    pub fn image_matrix(&self) -> Matrix {
        self.select_columns(&self.column_basis_indices())
    }

    /// A matrix `Q` with independent rows and `ker Q = image(self)`.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_matrix().transpose()
    }

    /// Flattened row-major vector.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Incremental row space used to test membership and extend bases.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: Field,
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(p: u32, width: usize) -> Self {
        RowSpace { field: Field::new(p), width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduce `v` against the stored echelon rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width);
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(w[pc]);
        w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}

/// Iterates over all coefficient vectors in GF(p)^n in Gray-code-like
/// odometer order, starting from the zero vector.
pub struct CoefficientIter {
    p: u32,
    current: Vec<Scalar>,
    done: bool,
}

impl CoefficientIter {
    pub fn new(p: u32, n: usize) -> Self {
        CoefficientIter { p, current: vec![0; n], done: false }
    }
}

impl Iterator for CoefficientIter {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = 0;
        loop {
            if i == self.current.len() {
                self.done = true;
                break;
            }
            self.current[i] += 1;
            if self.current[i] < self.p {
                break;
            }
            self.current[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// `p^n`, saturating at `u64::MAX`.
pub fn count_vectors(p: u32, n: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(p as u64);
    }
    acc
}

/// All subspaces of GF(p)^n of dimension exactly `k`, each given by its
/// reduced row-echelon basis. Returns `None` if more than `cap` would be
/// produced.
pub fn subspaces(p: u32, n: usize, k: usize, cap: u64) -> Option<Vec<Vec<Vec<Scalar>>>> {
    if k > n {
        return Some(Vec::new());
    }
    if k == 0 {
        return Some(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    // choose pivot columns
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions: for row r, columns c > pivots[r] that are not pivots
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let count = count_vectors(p, free.len());
        if out.len() as u64 + count > cap {
            return None;
        }
        for coeffs in CoefficientIter::new(p, free.len()) {
            let mut rows = vec![vec![0; n]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&coeffs) {
                rows[r][c] = v;
            }
            out.push(rows);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(2, rows).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(2, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zeros(2, 3, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_all_ones_gf2() {
        let r = m2(&[vec![1, 1], vec![1, 1]]).rref();
        assert_eq!(r.reduced, m2(&[vec![1, 1], vec![0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2, 3).kernel_basis().is_empty());
        let k = Matrix::zeros(2, 2, 3).kernel_basis();
        assert_eq!(k, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m2(&[vec![1, 1]]).kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(2, 3);
        assert_eq!(id.solve(&[1, 0, 1]).unwrap(), Some(vec![1, 0, 1]));
        let a = m2(&[vec![1, 1]]);
        let x = a.solve(&[1]).unwrap().unwrap();
        assert!(x == vec![1, 0] || x == vec![0, 1]);
        assert_eq!(a.mul_vec(&x), vec![1]);
        assert_eq!(Matrix::zeros(2, 2, 2).solve(&[1, 0]).unwrap(), None);
        assert!(id.solve(&[1]).is_err());
    }

    #[test]
    fn inverse_over_gf3() {
        let a = Matrix::from_rows(3, &[vec![1, 2], vec![0, 1]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3, 2));
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // [4 choose 2]_2 = 35, [3 choose 1]_2 = 7
        assert_eq!(subspaces(2, 4, 2, u64::MAX).unwrap().len(), 35);
        assert_eq!(subspaces(2, 3, 1, u64::MAX).unwrap().len(), 7);
        assert_eq!(subspaces(3, 2, 1, u64::MAX).unwrap().len(), 4);
        assert!(subspaces(2, 4, 2, 10).is_none());
    }

    #[test]
    fn row_space_membership() {
        let mut rs = RowSpace::new(2, 3);
        assert!(rs.insert(&[1, 1, 0]));
        assert!(rs.insert(&[0, 1, 1]));
        assert!(rs.contains(&[1, 0, 1]));
        assert!(!rs.insert(&[1, 0, 1]));
        assert!(!rs.contains(&[1, 0, 0]));
    }
}
