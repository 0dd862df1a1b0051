//! Dense exact linear algebra: reduced row echelon forms, kernels, and
//! subspaces in canonical form.
//!
//! Vectors are plain `Vec<Scalar>`. [`Matrix::kernel`] and
//! [`Matrix::image`] use the column convention (`M x`); a [`Subspace`] is the
//! row space of its canonical basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, len: usize) -> Vector {
    vec![field.zero(); len]
}

pub fn unit_vector(field: Field, len: usize, index: usize) -> Vector {
    let mut v = zero_vector(field, len);
    v[index] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += coeff * v`
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(coeff * x);
        }
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
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
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar_identity(field: Field, n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {r} has length {}, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| !field.contains(s)) {
                return Err(Error::FieldMismatch(format!(
                    "entry {bad} does not belong to {field}"
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M x` for a column vector `x`.
    pub fn apply(&self, x: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `v M` for a row vector `v`.
    pub fn apply_row(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = zero_vector(self.field, self.cols);
        for (r, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(r));
        }
        out
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let idx = row * self.cols + c;
                if !self.data[idx].is_zero() {
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            let pivot_row: Vector = self.row(row).to_vec();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    if pivot_row[c].is_zero() {
                        continue;
                    }
                    let idx = r * self.cols + c;
                    self.data[idx] = &self.data[idx] - &(&factor * &pivot_row[c]);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, rank, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.field, self.cols);
            v[free] = self.field.one();
            for (k, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -r.get(k, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::from_vectors(self.field, self.rows, cols)
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.field, self.cols);
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = red.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|r| format_vector(self.row(r))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A subspace of `field^ambient` in canonical form: its basis is the
/// nonzero rows of a reduced row echelon matrix, so equal subspaces have
/// equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vector>) -> Self {
        let m = Matrix::from_rows(field, ambient, vectors).expect("vector lengths match ambient");
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, rank, pivots) = m.rref();
        let rows: Vec<Vector> = (0..rank).map(|k| r.row(k).to_vec()).collect();
        let basis = Matrix::from_rows(m.field(), m.cols(), rows).expect("consistent rows");
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Remainder of `v` after reduction against the canonical basis; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = w[p].clone();
                let row = self.basis.row(k);
                for (x, b) in w.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x = &*x - &(&c * b);
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::row_space(&self.basis.stack(&other.basis)?))
    }

    /// Linear functionals vanishing on the subspace, as rows.
    pub fn annihilator(&self) -> Matrix {
        let k = self.basis.kernel();
        k.basis.clone()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let constraints = self.annihilator().stack(&other.annihilator())?;
        Ok(constraints.kernel())
    }

    pub fn with_vectors(&self, vectors: Vec<Vector>) -> Subspace {
        let extra = Matrix::from_rows(self.field(), self.ambient, vectors).expect("lengths");
        Subspace::row_space(&self.basis.stack(&extra).expect("same width"))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_of_zero_and_identity() {
        let z = Matrix::zeros(Field::Rational, 2, 3);
        let (r, rank, _) = z.rref();
        assert_eq!(rank, 0);
        assert_eq!(r, z);
        let i = Matrix::identity(Field::Rational, 3);
        assert_eq!(i.rref(), (i.clone(), 3, vec![0, 1, 2]));
    }

    #[test]
    fn rref_rank_one() {
        let (r, rank, _) = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(rank, 1);
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(Matrix::identity(Field::Rational, 4).kernel().is_zero());
    }

    #[test]
    fn kernel_and_solve() {
        let m = q(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        for v in k.basis_vectors() {
            assert!(is_zero(&m.apply(&v)));
        }
        let f = Field::Rational;
        let x = m.solve(&[f.int(2), f.int(3)]).unwrap().unwrap();
        assert_eq!(m.apply(&x), vec![f.int(2), f.int(3)]);
        let inconsistent = q(&[&[1, 1], &[1, 1]]);
        assert!(inconsistent.solve(&[f.int(1), f.int(2)]).unwrap().is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Field::Rational, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_membership_and_coordinates() {
        let f = Field::Rational;
        let u = Subspace::from_vectors(f, 3, vec![vec![f.int(1), f.int(1), f.int(0)]]);
        assert!(u.contains(&[f.int(2), f.int(2), f.int(0)]));
        assert!(!u.contains(&[f.int(1), f.int(0), f.int(0)]));
        assert_eq!(
            u.coordinates(&[f.int(3), f.int(3), f.int(0)]),
            Some(vec![f.int(3)])
        );
    }

    #[test]
    fn gf_p_elimination() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_rows(
            f,
            2,
            vec![vec![f.int(1), f.int(2)], vec![f.int(2), f.int(1)]],
        )
        .unwrap();
        // second row is 2 * first row mod 3
        assert_eq!(m.rank(), 1);
    }
}
