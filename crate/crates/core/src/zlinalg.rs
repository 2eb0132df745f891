//! Exact integer linear algebra over `i64`.
//!
//! Everything here is overflow-checked: an operation that would leave the
//! `i64` range returns [`LinalgError::Overflow`] instead of wrapping. The
//! Smith normal form is the workhorse; cokernels, ranks and lattice
//! membership are all read off from it.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, LinalgError>;

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(LinalgError::Overflow)
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(LinalgError::Overflow)
}

fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(LinalgError::Overflow)
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows. An empty slice gives a `0 x cols` matrix
    /// only through [`IntMatrix::zeros`]; here it yields `0 x 0`.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::Ragged { row: i, expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `dim`.
    pub fn from_columns<R: AsRef<[i64]>>(dim: usize, columns: &[R]) -> Result<Self> {
        let mut m = Self::zeros(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != dim {
                return Err(LinalgError::DimensionMismatch { expected: dim, got: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = add(out[(i, j)], mul(a, rhs[(k, j)])?)?;
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `v^T * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![0i64; self.cols];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = add(*o, mul(x, self[(i, j)])?)?;
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let v = add(self[(dst, j)], mul(q, self[(src, j)])?)?;
            self[(dst, j)] = v;
        }
        Ok(())
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let v = add(self[(i, dst)], mul(q, self[(i, src)])?)?;
            self[(i, dst)] = v;
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(r, j)] = neg(self[(r, j)])?;
        }
        Ok(())
    }

    fn negate_col(&mut self, c: usize) -> Result<()> {
        for i in 0..self.rows {
            self[(i, c)] = neg(self[(i, c)])?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(LinalgError::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    a.iter().zip(b).try_fold(0i64, |acc, (&x, &y)| add(acc, mul(x, y)?))
}

/// Result of a Smith normal form computation: `u * m * v == s`, with the
/// inverses of both transforms tracked alongside.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros up to
    /// `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)]).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&d| d != 0).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += q * row[src], keeping `u_inv` in step.
    fn row_op(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        self.a.add_row_multiple(dst, src, q)?;
        self.u.add_row_multiple(dst, src, q)?;
        self.u_inv.add_col_multiple(src, dst, neg(q)?)
    }

    /// col[dst] += q * col[src], keeping `v_inv` in step.
    fn col_op(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        self.a.add_col_multiple(dst, src, q)?;
        self.v.add_col_multiple(dst, src, q)?;
        self.v_inv.add_row_multiple(src, dst, neg(q)?)
    }

    fn negate_row(&mut self, r: usize) -> Result<()> {
        self.a.negate_row(r)?;
        self.u.negate_row(r)?;
        self.u_inv.negate_col(r)
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing block starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].unsigned_abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(mut self) -> Result<Smith> {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            let Some((pi, pj)) = self.min_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.a.rows() {
                    let q = self.a[(i, t)] / self.a[(t, t)];
                    self.row_op(i, t, neg(q)?)?;
                    if self.a[(i, t)] != 0 {
                        dirty = true;
                    }
                }
                for j in t + 1..self.a.cols() {
                    let q = self.a[(t, j)] / self.a[(t, t)];
                    self.col_op(j, t, neg(q)?)?;
                    if self.a[(t, j)] != 0 {
                        dirty = true;
                    }
                }
                if dirty {
                    // a remainder is smaller than the pivot; bring it forward
                    let mut best = (self.a[(t, t)].unsigned_abs(), t, t);
                    for i in t + 1..self.a.rows() {
                        let x = self.a[(i, t)].unsigned_abs();
                        if x != 0 && x < best.0 {
                            best = (x, i, t);
                        }
                    }
                    for j in t + 1..self.a.cols() {
                        let x = self.a[(t, j)].unsigned_abs();
                        if x != 0 && x < best.0 {
                            best = (x, t, j);
                        }
                    }
                    self.swap_rows(t, best.1);
                    self.swap_cols(t, best.2);
                    continue;
                }
                let p = self.a[(t, t)];
                let offender =
                    (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| self.a[(i, j)] % p != 0));
                match offender {
                    Some(i) => self.row_op(t, i, 1)?,
                    None => break,
                }
            }
            if self.a[(t, t)] < 0 {
                self.negate_row(t)?;
            }
        }
        Ok(Smith { u: self.u, s: self.a, v: self.v, u_inv: self.u_inv, v_inv: self.v_inv })
    }
}

/// Smith normal form with unimodular transforms: `u * m * v == s`.
///
/// Pivots on the entry of least absolute value to keep intermediate
/// coefficients small.
pub fn smith_normal_form(m: &IntMatrix) -> Result<Smith> {
    Reducer {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    }
    .reduce()
}

pub fn rank(m: &IntMatrix) -> Result<usize> {
    Ok(smith_normal_form(m)?.rank())
}

/// `Z^cols` modulo the row lattice of a relation matrix, in Smith
/// coordinates: free part first, then torsion residues.
#[derive(Debug, Clone)]
pub struct Cokernel {
    pub rank: usize,
    pub torsion: Vec<i64>,
    /// Nonzero diagonal entries of the Smith form of the relations.
    pub invariant_factors: Vec<i64>,
    // columns of V giving each free coordinate, sign-normalised
    free_basis: Vec<Vec<i64>>,
    // (column of V, modulus) for each torsion coordinate
    torsion_basis: Vec<(Vec<i64>, i64)>,
    ngens: usize,
}

impl Cokernel {
    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Linear forms giving the free coordinates of a class.
    pub fn free_forms(&self) -> &[Vec<i64>] {
        &self.free_basis
    }

    /// Number of Smith coordinates: `rank + torsion.len()`.
    pub fn width(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Class of an integer vector, free coordinates followed by torsion
    /// residues in `[0, d)`.
    pub fn project(&self, n: &[i64]) -> Result<Vec<i64>> {
        if n.len() != self.ngens {
            return Err(LinalgError::DimensionMismatch { expected: self.ngens, got: n.len() });
        }
        let mut out = Vec::with_capacity(self.width());
        for col in &self.free_basis {
            out.push(dot(n, col)?);
        }
        for (col, d) in &self.torsion_basis {
            out.push(dot(n, col)?.rem_euclid(*d));
        }
        Ok(out)
    }

    pub fn is_zero(&self, n: &[i64]) -> Result<bool> {
        Ok(self.project(n)?.iter().all(|&x| x == 0))
    }
}

/// Cokernel of the map whose image is the row lattice of `m`.
///
/// Each free coordinate is oriented so that the first generator with a
/// nonzero value in it gets a positive one.
pub fn cokernel_presentation(m: &IntMatrix) -> Result<Cokernel> {
    let smith = smith_normal_form(m)?;
    let diag = smith.diagonal();
    let nonzero = smith.rank();
    let mut free_basis = Vec::new();
    let mut torsion_basis = Vec::new();
    let mut torsion = Vec::new();
    for (j, &d) in diag.iter().enumerate().take(nonzero) {
        if d > 1 {
            torsion.push(d);
            torsion_basis.push((smith.v.column(j), d));
        }
    }
    for j in nonzero..m.cols() {
        let mut col = smith.v.column(j);
        if col.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            for x in &mut col {
                *x = neg(*x)?;
            }
        }
        free_basis.push(col);
    }
    Ok(Cokernel {
        rank: m.cols() - nonzero,
        torsion,
        invariant_factors: diag[..nonzero].to_vec(),
        free_basis,
        torsion_basis,
        ngens: m.cols(),
    })
}

/// Whether `v` lies in the integer span of `gens`.
pub fn in_lattice(v: &[i64], gens: &[Vec<i64>]) -> Result<bool> {
    let dim = v.len();
    if gens.is_empty() {
        return Ok(v.iter().all(|&x| x == 0));
    }
    let g = IntMatrix::from_columns(dim, gens)?;
    let smith = smith_normal_form(&g)?;
    let w = smith.u.mul_vec(v)?;
    let diag = smith.diagonal();
    for (i, &wi) in w.iter().enumerate() {
        let d = diag.get(i).copied().unwrap_or(0);
        let ok = if d == 0 { wi == 0 } else { wi % d == 0 };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(mat: &IntMatrix) -> Smith {
        let s = smith_normal_form(mat).unwrap();
        assert_eq!(s.u.mul(mat).unwrap().mul(&s.v).unwrap(), s.s);
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntMatrix::identity(mat.rows()));
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(mat.cols()));
        s
    }

    #[test]
    fn snf_small_cases() {
        assert_eq!(check(&m(&[&[1, 1]])).diagonal(), vec![1]);
        assert_eq!(check(&m(&[&[2]])).diagonal(), vec![2]);
        assert_eq!(check(&m(&[&[2, -1], &[-1, 2]])).diagonal(), vec![1, 3]);
        assert_eq!(check(&m(&[&[2, 0], &[0, 3]])).diagonal(), vec![1, 6]);
        assert_eq!(check(&m(&[&[0, 0], &[0, 0]])).diagonal(), vec![0, 0]);
        assert_eq!(check(&m(&[&[4, 6], &[6, 9]])).diagonal(), vec![1, 0]);
    }

    #[test]
    fn snf_empty_shapes() {
        let s = check(&IntMatrix::zeros(0, 3));
        assert!(s.diagonal().is_empty());
        let s = check(&IntMatrix::zeros(2, 0));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX;
        let mat = m(&[&[2, big], &[big, 3]]);
        assert_eq!(smith_normal_form(&mat).unwrap_err(), LinalgError::Overflow);
    }

    #[test]
    fn cokernel_examples() {
        let c = cokernel_presentation(&m(&[&[1, 1]])).unwrap();
        assert_eq!((c.rank, c.torsion.clone()), (1, vec![]));
        assert_eq!(c.project(&[1, 0]).unwrap(), vec![1]);
        assert_eq!(c.project(&[0, 1]).unwrap(), vec![-1]);
        assert!(c.is_zero(&[1, 1]).unwrap());

        let c = cokernel_presentation(&m(&[&[2]])).unwrap();
        assert_eq!((c.rank, c.torsion.clone()), (0, vec![2]));
        assert_eq!(c.project(&[1]).unwrap(), vec![1]);
        assert_eq!(c.project(&[2]).unwrap(), vec![0]);

        let c = cokernel_presentation(&IntMatrix::zeros(0, 3)).unwrap();
        assert_eq!((c.rank, c.torsion.len()), (3, 0));
        assert_eq!(c.project(&[0, 1, 0]).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn lattice_membership_examples() {
        assert!(in_lattice(&[0, 0], &[vec![1, 2]]).unwrap());
        assert!(in_lattice(&[0, 0], &[]).unwrap());
        assert!(!in_lattice(&[1, 0], &[]).unwrap());
        assert!(in_lattice(&[3, 1], &[vec![1, 0], vec![2, 1]]).unwrap());
        assert!(!in_lattice(&[1, 0], &[vec![2, 0], vec![0, 1]]).unwrap());
        assert!(!in_lattice(&[1, 1], &[vec![1, 0]]).unwrap());
        assert!(matches!(in_lattice(&[1, 1], &[vec![1, 0, 0]]), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = IntMatrix::from_rows(&[vec![1, 2], vec![3]]);
        assert!(matches!(r, Err(LinalgError::Ragged { row: 1, .. })));
    }
}
