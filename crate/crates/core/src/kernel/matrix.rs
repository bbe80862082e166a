use std::fmt;
use std::ops::{Index, IndexMut};

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// A column vector of scalars over a single field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    /// Build a vector; every entry must belong to `field`.
    pub fn new(field: Field, entries: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(Vector { field, entries })
    }

    pub fn zeros(field: Field, n: usize) -> Self {
        Vector {
            field,
            entries: vec![field.zero(); n],
        }
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.entries[i] = field.one();
        v
    }

    pub fn from_ints(field: Field, xs: &[i64]) -> Self {
        Vector {
            field,
            entries: xs.iter().map(|&x| field.int(x)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&-&self.field.one())
    }

    pub fn dot(&self, other: &Vector) -> Result<Scalar> {
        self.check(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Self {
        Self::identity(field, n).scale(s)
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Convenience for fixtures and tests.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged integer matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = field.int(x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn diag(field: Field, entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(field, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Rebuild from a row-major flattening.
    pub fn from_flat(field: Field, rows: usize, cols: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: flat.len(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data: flat.to_vec(),
        })
    }

    pub fn field(&self) -> Field {
        self.field
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

    /// Row-major entries.
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|i| self[(i, j)].clone()).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).into_entries()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn check_field(&self, other: Field) -> Result<()> {
        if self.field != other {
            return Err(Error::FieldMismatch(self.field.to_string(), other.to_string()));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        self.check_field(other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        self.check_field(v.field)?;
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(self.field.zero(), |acc, j| {
                    &acc + &(&self[(i, j)] * &v[j])
                })
            })
            .collect();
        Ok(Vector {
            field: self.field,
            entries,
        })
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other.field)?;
        if self.rows > 0 && other.rows > 0 && self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(r, j)]);
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

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the null space, one vector per free column (free variable
    /// set to 1, the others to 0).
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.entries[free] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v.entries[p] = -&r[(row, free)];
                }
                v
            })
            .collect()
    }

    /// A solution of `self · x = b` (free variables set to zero), or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        self.check_field(b.field)?;
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.dim(),
            });
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x.entries[p] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(Some(inv))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn mat_solve(a: &Matrix, b: &Vector) -> Result<Option<Vector>> {
    a.solve(b)
}

pub fn mat_kernel(a: &Matrix) -> Vec<Vector> {
    a.kernel()
}

pub fn mat_inverse(a: &Matrix) -> Result<Option<Matrix>> {
    a.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(Q, 2);
        let b = Vector::from_ints(Q, &[3, 4]);
        assert_eq!(mat_solve(&id, &b).unwrap(), Some(b.clone()));

        let a = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(mat_solve(&a, &Vector::from_ints(Q, &[1, 3])).unwrap(), None);

        let f5 = Field::prime(5).unwrap();
        let a = Matrix::from_ints(f5, &[&[2]]);
        let x = mat_solve(&a, &Vector::from_ints(f5, &[3])).unwrap().unwrap();
        assert_eq!(x, Vector::from_ints(f5, &[4]));
    }

    #[test]
    fn solve_rejects_bad_shapes() {
        let a = Matrix::identity(Q, 2);
        assert!(matches!(
            mat_solve(&a, &Vector::from_ints(Q, &[1])),
            Err(Error::DimensionMismatch { .. })
        ));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            mat_solve(&a, &Vector::from_ints(f5, &[1, 1])),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn kernel_examples() {
        let a = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(mat_kernel(&a), vec![Vector::from_ints(Q, &[-2, 1])]);
        assert!(mat_kernel(&Matrix::identity(Q, 3)).is_empty());
        assert_eq!(mat_kernel(&Matrix::zeros(Q, 2, 3)).len(), 3);
    }

    #[test]
    fn inverse_examples() {
        let a = Matrix::from_ints(Q, &[&[2, 0], &[0, 3]]);
        let inv = mat_inverse(&a).unwrap().unwrap();
        assert_eq!(inv[(0, 0)], Q.frac(1, 2).unwrap());
        assert_eq!(inv[(1, 1)], Q.frac(1, 3).unwrap());
        assert!(inv[(0, 1)].is_zero());

        let sing = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(mat_inverse(&sing).unwrap(), None);

        let f7 = Field::prime(7).unwrap();
        let a = Matrix::from_ints(f7, &[&[3]]);
        assert_eq!(mat_inverse(&a).unwrap().unwrap(), Matrix::from_ints(f7, &[&[5]]));

        assert!(matches!(
            mat_inverse(&Matrix::zeros(Q, 2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn rref_is_idempotent() {
        let a = Matrix::from_ints(Q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (r, _) = a.rref();
        assert_eq!(r.rref().0, r);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn empty_shapes() {
        let z = Matrix::zeros(Q, 0, 0);
        assert_eq!(z.inverse().unwrap(), Some(Matrix::zeros(Q, 0, 0)));
        assert!(z.kernel().is_empty());
    }
}
