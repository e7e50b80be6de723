use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense matrix over the arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect(),
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let tmp = a[(k, j)].clone();
                            a[(k, j)] = a[(i, j)].clone();
                            a[(i, j)] = tmp;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev; // exact division (Bareiss)
                }
            }
            for i in k + 1..n {
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Rational rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..a.cols {
            let pivot = (row..a.rows).find(|&i| !a[(i, col)].is_zero());
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..a.cols {
                    let tmp = a[(row, j)].clone();
                    a[(row, j)] = a[(p, j)].clone();
                    a[(p, j)] = tmp;
                }
            }
            let inv = a[(row, col)].recip();
            for i in row + 1..a.rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let factor = &a[(i, col)] * &inv;
                for j in col..a.cols {
                    let sub = &factor * &a[(row, j)];
                    a[(i, j)] -= sub;
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Exact inverse of a nonsingular integer matrix, over the rationals.
pub fn rational_inverse(a: &IntMatrix) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::InvalidArgument("inverse of non-square matrix".into()));
    }
    let n = a.rows;
    let mut m = a.to_rational();
    let mut inv = QMatrix::identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[(i, col)].is_zero());
        let Some(p) = pivot else {
            return Err(Error::InvalidArgument("singular matrix".into()));
        };
        if p != col {
            for j in 0..n {
                let tmp = m[(col, j)].clone();
                m[(col, j)] = m[(p, j)].clone();
                m[(p, j)] = tmp;
                let tmp = inv[(col, j)].clone();
                inv[(col, j)] = inv[(p, j)].clone();
                inv[(p, j)] = tmp;
            }
        }
        let pinv = m[(col, col)].recip();
        for j in 0..n {
            m[(col, j)] *= &pinv;
            inv[(col, j)] *= &pinv;
        }
        for i in 0..n {
            if i == col || m[(i, col)].is_zero() {
                continue;
            }
            let factor = m[(i, col)].clone();
            for j in 0..n {
                let s = &factor * &m[(col, j)];
                m[(i, j)] -= s;
                let s = &factor * &inv[(col, j)];
                inv[(i, j)] -= s;
            }
        }
    }
    Ok(inv)
}

/// Signature of a symmetric integer matrix, by exact congruence reduction.
///
/// Zero eigenvalues contribute 0; the matrix may be singular.
pub fn symmetric_signature(a: &IntMatrix) -> Result<i64> {
    if !a.is_symmetric() {
        return Err(Error::InvalidArgument("signature of non-symmetric matrix".into()));
    }
    let mut m = a.to_rational();
    let n = m.rows;
    let mut alive: Vec<usize> = (0..n).collect();
    let mut sig: i64 = 0;
    while !alive.is_empty() {
        // Prefer a nonzero diagonal pivot.
        if let Some(pos) = alive.iter().position(|&i| !m[(i, i)].is_zero()) {
            let p = alive.remove(pos);
            sig += if m[(p, p)].is_positive() { 1 } else { -1 };
            let pinv = m[(p, p)].recip();
            for &i in &alive {
                if m[(i, p)].is_zero() {
                    continue;
                }
                let factor = &m[(i, p)] * &pinv;
                for &j in &alive {
                    let s = &factor * &m[(p, j)];
                    m[(i, j)] -= s;
                }
            }
            continue;
        }
        // All remaining diagonal entries vanish: a nonzero off-diagonal entry
        // spans a hyperbolic 2x2 block of signature 0.
        let mut found = None;
        'search: for (pi, &i) in alive.iter().enumerate() {
            for (pj, &j) in alive.iter().enumerate().skip(pi + 1) {
                if !m[(i, j)].is_zero() {
                    found = Some((pi, pj));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break }; // remaining block is zero
        let j = alive.remove(pj);
        let i = alive.remove(pi);
        // Block [[0, h], [h, 0]] with inverse [[0, 1/h], [1/h, 0]]: the Schur
        // complement update is m[u][v] -= m[u][i]/h * m[j][v] + m[u][j]/h * m[i][v].
        let hinv = m[(i, j)].recip();
        let rest = alive.clone();
        for &u in &rest {
            let ci = &m[(u, i)] * &hinv;
            let cj = &m[(u, j)] * &hinv;
            if ci.is_zero() && cj.is_zero() {
                continue;
            }
            for &v in &rest {
                let sub = &ci * &m[(j, v)] + &cj * &m[(i, v)];
                m[(u, v)] -= sub;
            }
        }
    }
    Ok(sig)
}
