//! Dense matrices over `QRat` and exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use super::{QError, QRat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QRat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![QRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(vec![QRat::one(); n])
    }

    pub fn diag(entries: Vec<QRat>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<QRat>>) -> Result<Self, QError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(QError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[QRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<QRat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QRat::is_zero)
    }

    /// `Some(c)` when the matrix is `c * Id`.
    pub fn scalar_value(&self) -> Option<QRat> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { QRat::zero() } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = &self[(i, j)];
                if (i == j && *v != c) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Kronecker product, `(A ⊗ B)[(a,b),(a',b')] = A[a,a'] B[b,b']` with
    /// combined index `a * B.rows + b`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, QError> {
        if self.cols != rhs.rows {
            return Err(QError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn map(&self, f: impl FnMut(&QRat) -> QRat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        let mut work = self.to_rows();
        eliminate(&mut work, self.cols, false).len()
    }

    /// Solves `self * X = rhs`.
    ///
    /// Pivot columns are taken left to right; within a column the
    /// structurally simplest nonzero entry is the pivot. Free variables are
    /// set to zero. An inconsistent system is an error.
    pub fn solve(&self, rhs: &Self) -> Result<Self, QError> {
        if rhs.rows != self.rows {
            return Err(QError::DimensionMismatch(format!(
                "system has {} rows, right-hand side {}",
                self.rows, rhs.rows
            )));
        }
        let n = self.cols;
        let k = rhs.cols;
        let mut work: Vec<Vec<QRat>> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(rhs.row(i)).cloned().collect())
            .collect();
        let pivots = eliminate(&mut work, n, true);
        let rank = pivots.len();
        if work[rank..].iter().any(|row| row[n..].iter().any(|v| !v.is_zero())) {
            return Err(QError::Inconsistent);
        }
        let mut x = Self::zeros(n, k);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..k {
                x[(c, j)] = work[r][n + j].clone();
            }
        }
        Ok(x)
    }
}

/// Row-reduces `rows` on its first `ncols` columns. Returns the pivot column of
/// each pivot row; pivot rows end up at the top, normalized to 1. With
/// `reduce_above` the result is in reduced row echelon form.
fn eliminate(rows: &mut [Vec<QRat>], ncols: usize, reduce_above: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(best) = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].complexity())
        else {
            continue;
        };
        rows.swap(top, best);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        for v in rows[top].iter_mut().skip(col) {
            *v = &*v * &inv;
        }
        let pivot_row = rows[top].clone();
        let start = if reduce_above { 0 } else { top + 1 };
        for (r, row) in rows.iter_mut().enumerate().skip(start) {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

impl Index<(usize, usize)> for QMatrix {
    type Output = QRat;

    fn index(&self, (i, j): (usize, usize)) -> &QRat {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QRat {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;

    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;

    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a matrix.
pub fn qmat_rank(m: &QMatrix) -> usize {
    m.rank()
}

/// Particular solution of `m * X = rhs`, or [`QError::Inconsistent`].
pub fn qmat_solve(m: &QMatrix, rhs: &QMatrix) -> Result<QMatrix, QError> {
    m.solve(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(QMatrix::identity(3).rank(), 3);
        assert_eq!(QMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn rank_deficient_symbolic() {
        let a = m(&[&["q", "q^2"], &["1", "q"], &["q+1", "q^2+q"]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn solve_unique() {
        let a = m(&[&["q", "1"], &["1", "q"]]);
        let b = m(&[&["1"], &["0"]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        assert_eq!(x[(0, 0)], "q/(q^2-1)".parse().unwrap());
    }

    #[test]
    fn solve_free_variables_zero() {
        let a = m(&[&["1", "1"], &["q", "q"]]);
        let b = m(&[&["2"], &["2*q"]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x, m(&[&["2"], &["0"]]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&["1", "1"], &["q", "q"]]);
        let b = m(&[&["1"], &["1"]]);
        assert_eq!(a.solve(&b), Err(QError::Inconsistent));
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&["0", "1"], &["0", "0"]]);
        let k = a.kron(&QMatrix::identity(2));
        assert!(k[(0, 2)].is_one() && k[(1, 3)].is_one());
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn scalar_detection() {
        let c: QRat = "q+1".parse().unwrap();
        assert_eq!(QMatrix::identity(3).scale(&c).scalar_value(), Some(c));
        assert_eq!(m(&[&["1", "1"], &["0", "1"]]).scalar_value(), None);
    }
}
