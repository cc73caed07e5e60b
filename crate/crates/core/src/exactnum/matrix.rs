//! Dense matrices over a [`Ring`], with exact elimination over ℚ(i).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{ExactError, Field, GaussianRational, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&Matrix<T>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(ExactError::DimensionMismatch("matrix sum".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(ExactError::DimensionMismatch("matrix difference".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul_ref(s))
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Determinant by cofactor expansion; intended for the small (≤ 4×4)
    /// minors used on polynomial matrices.
    pub fn det_laplace(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.laplace(0, &idx)
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> T {
        match cols.len() {
            0 => T::one(),
            1 => self.get(row, cols[0]).clone(),
            2 => {
                let a = self.get(row, cols[0]).mul_ref(self.get(row + 1, cols[1]));
                let b = self.get(row, cols[1]).mul_ref(self.get(row + 1, cols[0]));
                a.sub_ref(&b)
            }
            _ => {
                let mut acc = T::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(row, c);
                    if a.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a.mul_ref(&self.laplace(row + 1, &rest));
                    acc = if k % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
                }
                acc
            }
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and pivot columns. Pivots are taken at the
    /// leftmost column with a nonzero entry, from the first available row.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&k| !m.get(k, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for k in c..m.cols {
                let v = m.get(r, k).mul_ref(&inv);
                m.set(r, k, v);
            }
            for k in 0..m.rows {
                if k == r || m.get(k, c).is_zero() {
                    continue;
                }
                let f = m.get(k, c).clone();
                for j in c..m.cols {
                    let v = m.get(k, j).sub_ref(&f.mul_ref(m.get(r, j)));
                    m.set(k, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, itself in reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let raw = Matrix::from_fn(free.len(), self.cols, |k, c| {
            if c == free[k] {
                T::one()
            } else if let Some(pr) = pivots.iter().position(|&p| p == c) {
                red.get(pr, free[k]).neg_ref()
            } else {
                T::zero()
            }
        });
        let (basis, _) = raw.rref();
        (0..basis.rows).map(|r| basis.row(r).to_vec()).collect()
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl Matrix<GaussianRational> {
    /// Clear denominators row by row so that every entry is a Gaussian
    /// integer; the row space is unchanged.
    fn integral_rows(&self) -> Matrix<GaussianRational> {
        let mut m = self.clone();
        for r in 0..m.rows {
            let l = m.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.den()));
            let s = GaussianRational::from(l);
            for c in 0..m.cols {
                let v = m.get(r, c) * &s;
                m.set(r, c, v);
            }
        }
        m
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the rank and, for
    /// square input, the determinant of the original matrix.
    fn bareiss(&self) -> (usize, Option<GaussianRational>) {
        let mut m = self.integral_rows();
        let scale: GaussianRational = (0..self.rows)
            .map(|r| self.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.den())))
            .fold(GaussianRational::one(), |acc, l| &acc * &GaussianRational::from(l));
        let mut prev = GaussianRational::one();
        let mut sign = 1;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&k| !m.get(k, c).is_zero()) else { continue };
            if p != r {
                m.swap_rows(r, p);
                sign = -sign;
            }
            let piv = m.get(r, c).clone();
            for k in r + 1..m.rows {
                let f = m.get(k, c).clone();
                for j in c..m.cols {
                    let v = &(&(&piv * m.get(k, j)) - &(&f * m.get(r, j))) / &prev;
                    m.set(k, j, v);
                }
            }
            prev = piv;
            r += 1;
        }
        let det = (self.rows == self.cols).then(|| {
            if r < self.rows {
                GaussianRational::zero()
            } else {
                let d = &m.get(self.rows - 1, self.cols - 1).clone() / &scale;
                if sign < 0 {
                    -d
                } else {
                    d
                }
            }
        });
        (r, det)
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.bareiss().0
    }

    /// Rank via naive Gauss–Jordan elimination; an independent route used to
    /// cross-check [`Matrix::rank`].
    pub fn rank_naive(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return GaussianRational::one();
        }
        self.bareiss().1.expect("square")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_fn(rows.len(), rows.first().map_or(0, |r| r.len()), |r, c| {
            GaussianRational::from_int(rows[r][c])
        })
    }

    /// Row-major nested JSON arrays of canonical scalar strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl<T: Ring + Serialize> Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = (0..self.rows).map(|r| self.row(r)).collect();
        rows.serialize(serializer)
    }
}

impl<'de, T: Ring + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &self.data).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type Q = GaussianRational;

    #[test]
    fn rank_of_trivial_matrices() {
        assert_eq!(Matrix::<Q>::identity(4).rank(), 4);
        assert_eq!(Matrix::<Q>::zeros(7, 16).rank(), 0);
    }

    #[test]
    fn kernel_of_trivial_matrices() {
        assert!(Matrix::<Q>::identity(3).kernel_basis().is_empty());
        let k = Matrix::<Q>::zeros(2, 5).kernel_basis();
        assert_eq!(k.len(), 5);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn kernel_is_annihilated_and_echelon() {
        let m = Matrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(Q::is_zero));
        }
        let km = Matrix::from_rows(k).unwrap();
        assert_eq!(km.rref().0, km);
    }

    #[test]
    fn determinant_routes_agree() {
        let m = Matrix::from_fn(4, 4, |r, c| Q::new((r * 3 + c * c) as i64 - 4, (r + c) as i64 % 3, 1 + (r % 2) as i64));
        assert_eq!(m.det(), m.det_laplace());
        let mut swapped = m.clone();
        for c in 0..4 {
            swapped.set(0, c, m.get(1, c).clone());
            swapped.set(1, c, m.get(0, c).clone());
        }
        assert_eq!(swapped.det(), -m.det());
    }

    #[test]
    fn inverse_round_trips() {
        let m = Matrix::from_fn(3, 3, |r, c| Q::new((r + 2 * c) as i64 % 5 + (r == c) as i64, c as i64, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        assert!(Matrix::<Q>::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn json_is_row_major() {
        let m = Matrix::from_rows(vec![vec![Q::one(), Q::i()], vec![Q::ratio(1, 2), Q::zero()]]).unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"[["1","i"],["1/2","0"]]"#);
        let back: Matrix<Q> = serde_json::from_value(m.to_json()).unwrap();
        assert_eq!(back, m);
    }
}
