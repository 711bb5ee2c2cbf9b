//! Exact dense linear algebra over an ExtField.
//!
//! Everything is Gaussian elimination with first-nonzero pivoting; the
//! arithmetic is exact so there are no pivot-magnitude heuristics, and
//! row reduction is fully deterministic.  Matrices here stay small
//! (ad rho needs at most 16x16 stacked systems).

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::ff::{ExtField, FqElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent of degree <= {0}")]
    NotNilpotent(usize),
    #[error("characteristic {0} too small to invert {1}!")]
    SmallCharacteristic(u64, usize),
    #[error("input is not an involution")]
    NotInvolution,
    #[error("characteristic 2 not supported here")]
    CharTwo,
}

/// Dense row-major matrix over a fixed ExtField.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: ExtField,
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

impl Index<(usize, usize)> for FMatrix {
    type Output = FqElem;
    fn index(&self, (i, j): (usize, usize)) -> &FqElem {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for FMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FqElem {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {:?}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl FMatrix {
    pub fn zeros(field: &ExtField, rows: usize, cols: usize) -> FMatrix {
        FMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &ExtField, n: usize) -> FMatrix {
        let mut m = FMatrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Build from rows of integer entries (reduced mod p).
    pub fn from_int_rows(field: &ExtField, rows: &[&[i64]]) -> FMatrix {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut m = FMatrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = field.from_i64(x);
            }
        }
        m
    }

    pub fn from_fn(
        field: &ExtField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FqElem,
    ) -> FMatrix {
        let mut m = FMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(field: &ExtField, entries: &[FqElem]) -> FMatrix {
        let n = entries.len();
        let mut m = FMatrix::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FMatrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        })
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FMatrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            &self[(i, j)] - &other[(i, j)]
        })
    }

    pub fn neg(&self) -> FMatrix {
        FMatrix::from_fn(&self.field, self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scale(&self, s: &FqElem) -> FMatrix {
        FMatrix::from_fn(&self.field, self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = FMatrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FqElem]) -> Vec<FqElem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = &acc + &(&self[(i, j)] * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> FMatrix {
        assert!(self.is_square());
        let mut acc = FMatrix::identity(&self.field, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> FqElem {
        assert!(self.is_square());
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = &acc + &self[(i, i)];
        }
        acc
    }

    /// Stack vertically: [self; other].
    pub fn vstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.cols);
        FMatrix::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn block_diag(blocks: &[&FMatrix]) -> FMatrix {
        assert!(!blocks.is_empty());
        let field = blocks[0].field.clone();
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = FMatrix::zeros(&field, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.field, field);
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Kronecker product self (x) other.
    pub fn kronecker(&self, other: &FMatrix) -> FMatrix {
        FMatrix::from_fn(
            &self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (a, b) = (i / other.rows, i % other.rows);
                let (c, d) = (j / other.cols, j % other.cols);
                &self[(a, c)] * &other[(b, d)]
            },
        )
    }

    /// Extract the square submatrix on the given (row = col) indices.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> FMatrix {
        FMatrix::from_fn(&self.field, row_idx.len(), col_idx.len(), |i, j| {
            self[(row_idx[i], col_idx[j])].clone()
        })
    }

    /// Conjugate self by t: t^{-1} * self * t.
    pub fn conjugate_by(&self, t: &FMatrix) -> Result<FMatrix, LinalgError> {
        let tinv = t.inverse().ok_or(LinalgError::Singular)?;
        Ok(tinv.mul(self).mul(t))
    }

    /// Reduced row echelon form with first-nonzero pivoting; deterministic.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m[(i, c)].is_zero());
            let Some(pi) = pivot_row else { continue };
            if pi != r {
                for j in 0..m.cols {
                    let tmp = m[(pi, j)].clone();
                    m[(pi, j)] = m[(r, j)].clone();
                    m[(r, j)] = tmp;
                }
            }
            let inv = m[(r, c)].inv().expect("pivot nonzero");
            for j in 0..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let t = &factor * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, from the reduced echelon form.
    /// Deterministic: one vector per free column, ascending, free entry = 1.
    pub fn kernel_basis(&self) -> Vec<Vec<FqElem>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (rank_row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(rank_row, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = FMatrix::from_fn(&self.field, n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(FMatrix::from_fn(&self.field, n, n, |i, j| {
            r[(i, j + n)].clone()
        }))
    }

    /// Solve self * X = rhs for all columns of rhs at once.
    /// Returns None if any column is inconsistent; free variables are set to 0.
    pub fn solve_multi(&self, rhs: &FMatrix) -> Option<FMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let k = rhs.cols;
        let aug = FMatrix::from_fn(&self.field, self.rows, n + k, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - n)].clone()
            }
        });
        let (r, pivots) = aug.rref();
        // inconsistent if a pivot lands in the rhs block
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = FMatrix::zeros(&self.field, n, k);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..k {
                x[(pc, j)] = r[(row, j + n)].clone();
            }
        }
        Some(x)
    }

    /// exp(self * s) for nilpotent self, truncated at the nilpotency degree.
    /// Exact: requires p not to divide any k! used, i.e. p >= degree.
    pub fn exp_nilpotent(&self, s: &FqElem) -> Result<FMatrix, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let max_deg = n; // self^n = 0 for any nilpotent n x n matrix
        let mut powers = vec![FMatrix::identity(&self.field, n)];
        let mut cur = FMatrix::identity(&self.field, n);
        let mut deg = max_deg + 1;
        for k in 1..=max_deg {
            cur = cur.mul(self);
            if cur.is_zero() {
                deg = k;
                break;
            }
            powers.push(cur.clone());
        }
        if deg > max_deg {
            return Err(LinalgError::NotNilpotent(max_deg));
        }
        let p = self.field.characteristic();
        let mut acc = FMatrix::identity(&self.field, n);
        let mut s_pow = self.field.one();
        let mut factorial = self.field.one();
        for (k, nk) in powers.iter().enumerate().skip(1) {
            s_pow = &s_pow * s;
            factorial = &factorial * &self.field.from_u64(k as u64);
            if factorial.is_zero() {
                return Err(LinalgError::SmallCharacteristic(p, k));
            }
            let inv = factorial.inv().expect("nonzero factorial");
            let coeff = &s_pow * &inv;
            acc = acc.add(&nk.scale(&coeff));
        }
        Ok(acc)
    }
}

/// GL-conjugacy of two involutions, decided by (+1)-eigenspace dimensions.
/// Involutions over odd characteristic are diagonalizable, so this is exact.
pub fn conjugacy_test_order2(g: &FMatrix, h: &FMatrix) -> Result<bool, LinalgError> {
    if g.field().characteristic() == 2 {
        return Err(LinalgError::CharTwo);
    }
    if !g.is_square() || !h.is_square() || g.rows() != h.rows() {
        return Err(LinalgError::Shape(
            "involutions must be square of equal size".into(),
        ));
    }
    let id = FMatrix::identity(g.field(), g.rows());
    if g.mul(g) != id || h.mul(h) != id {
        return Err(LinalgError::NotInvolution);
    }
    let fixed = |m: &FMatrix| m.sub(&id).kernel_basis().len();
    Ok(fixed(g) == fixed(h))
}

/// Dimension of the joint commutant {M : M A_i = A_i M for all i}.
/// For a semisimple module this is the sum of squared multiplicities of
/// the absolutely irreducible constituents.
pub fn commutant_dimension(gens: &[&FMatrix]) -> usize {
    assert!(!gens.is_empty());
    let n = gens[0].rows();
    let field = gens[0].field().clone();
    // unknowns: M as n^2 vector (row major); equations: M A - A M = 0
    let mut rows: Vec<FMatrix> = Vec::new();
    for a in gens {
        assert_eq!(a.rows(), n);
        // (MA - AM)_{ij} = sum_k M_{ik} A_{kj} - A_{ik} M_{kj}
        let block = FMatrix::from_fn(&field, n * n, n * n, |eq, unk| {
            let (i, j) = (eq / n, eq % n);
            let (r, c) = (unk / n, unk % n);
            let mut v = field.zero();
            if r == i {
                v = &v + &a[(c, j)];
            }
            if c == j {
                v = &v - &a[(i, r)];
            }
            v
        });
        rows.push(block);
    }
    let mut stacked = rows[0].clone();
    for b in &rows[1..] {
        stacked = stacked.vstack(b);
    }
    stacked.kernel_basis().len()
}

/// Dimension of the space of intertwiners {M : M A_i = B_i M}.
pub fn hom_dimension(a_gens: &[&FMatrix], b_gens: &[&FMatrix]) -> usize {
    assert_eq!(a_gens.len(), b_gens.len());
    assert!(!a_gens.is_empty());
    let na = a_gens[0].cols();
    let nb = b_gens[0].rows();
    let field = a_gens[0].field().clone();
    // unknowns: M (nb x na); equations M A - B M = 0, entry (i,j): i<nb, j<na
    let mut blocks = Vec::new();
    for (a, b) in a_gens.iter().zip(b_gens) {
        let block = FMatrix::from_fn(&field, nb * na, nb * na, |eq, unk| {
            let (i, j) = (eq / na, eq % na);
            let (r, c) = (unk / na, unk % na);
            let mut v = field.zero();
            if r == i {
                v = &v + &a[(c, j)];
            }
            if c == j {
                v = &v - &b[(i, r)];
            }
            v
        });
        blocks.push(block);
    }
    let mut stacked = blocks[0].clone();
    for b in &blocks[1..] {
        stacked = stacked.vstack(b);
    }
    stacked.kernel_basis().len()
}
