//! Truncated ℕ-graded unital associative algebras stored by structure
//! constants, with an optional basis-aligned even/odd typing.
//!
//! Degree `i` has a fixed basis for `0 <= i <= D`; the product
//! `A_i ⊗ A_j → A_{i+j}` is stored densely for `i + j <= D`.

mod checks;
mod free;
mod ideals;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix, Vector};

pub use checks::{AlgebraViolation, Rule};
pub use free::free_gperm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ProductTable {
    pub(crate) right_dim: usize,
    pub(crate) values: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    max_degree: usize,
    dims: Vec<usize>,
    unit: Vector,
    products: BTreeMap<(usize, usize), ProductTable>,
    /// `odd[i][b]` is true when basis vector `b` of degree `i >= 1` has odd
    /// type; `odd[0]` is empty.
    typing: Option<Vec<Vec<bool>>>,
}

impl GradedAlgebra {
    /// An algebra skeleton with `dims[i] = dim A_i`, zero unit and zero
    /// products, untyped.
    pub fn new(field: Field, dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidAlgebra("at least degree 0 is required".into()));
        }
        let max_degree = dims.len() - 1;
        let mut products = BTreeMap::new();
        for i in 0..=max_degree {
            for j in 0..=max_degree - i {
                products.insert(
                    (i, j),
                    ProductTable {
                        right_dim: dims[j],
                        values: vec![linalg::zero_vector(field, dims[i + j]); dims[i] * dims[j]],
                    },
                );
            }
        }
        Ok(GradedAlgebra {
            field,
            max_degree,
            dims: dims.to_vec(),
            unit: linalg::zero_vector(field, dims[0]),
            products,
            typing: None,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    /// `dim A_0, ..., dim A_D`, which is also the Hilbert series.
    pub fn dims(&self) -> Vec<usize> {
        self.dims.clone()
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.dims.clone()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize, b: usize) -> Vector {
        linalg::unit_vector(self.field, self.dim(i), b)
    }

    pub fn set_unit(&mut self, v: Vector) -> Result<()> {
        self.check_vector(0, &v)?;
        self.unit = v;
        Ok(())
    }

    fn check_degrees(&self, i: usize, j: usize) -> Result<()> {
        if i + j > self.max_degree {
            return Err(Error::TruncationExceeded {
                needed: i + j,
                bound: self.max_degree,
            });
        }
        Ok(())
    }

    fn check_vector(&self, i: usize, v: &[Scalar]) -> Result<()> {
        if i > self.max_degree {
            return Err(Error::TruncationExceeded {
                needed: i,
                bound: self.max_degree,
            });
        }
        if v.len() != self.dim(i) {
            return Err(Error::Dimension(format!(
                "vector of length {} in degree {i} of dimension {}",
                v.len(),
                self.dim(i)
            )));
        }
        if let Some(s) = v.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(format!("{s} is not in {}", self.field)));
        }
        Ok(())
    }

    /// Sets `e_a · e_b` for `e_a ∈ A_i`, `e_b ∈ A_j`.
    pub fn set_product(&mut self, i: usize, j: usize, a: usize, b: usize, value: Vector) -> Result<()> {
        self.check_degrees(i, j)?;
        if a >= self.dim(i) || b >= self.dim(j) {
            return Err(Error::Dimension(format!(
                "basis index ({a}, {b}) out of range for degrees ({i}, {j})"
            )));
        }
        self.check_vector(i + j, &value)?;
        let t = self.products.get_mut(&(i, j)).expect("table exists");
        let idx = a * t.right_dim + b;
        t.values[idx] = value;
        Ok(())
    }

    pub fn set_product_entry(&mut self, key: (usize, usize), a: usize, b: usize, c: usize, value: Scalar) -> Result<()> {
        let (i, j) = key;
        self.check_degrees(i, j)?;
        if a >= self.dim(i) || b >= self.dim(j) || c >= self.dim(i + j) {
            return Err(Error::Dimension(format!(
                "entry ({a}, {b}, {c}) out of range for product ({i}, {j})"
            )));
        }
        if !self.field.contains(&value) {
            return Err(Error::FieldMismatch(format!("{value} is not in {}", self.field)));
        }
        let t = self.products.get_mut(&(i, j)).expect("table exists");
        let idx = a * t.right_dim + b;
        t.values[idx][c] = value;
        Ok(())
    }

    /// `e_a · e_b`.
    pub fn product_of_basis(&self, i: usize, j: usize, a: usize, b: usize) -> &Vector {
        let t = &self.products[&(i, j)];
        &t.values[a * t.right_dim + b]
    }

    pub fn product_keys(&self) -> Vec<(usize, usize)> {
        self.products.keys().copied().collect()
    }

    /// Nonzero entries `(a, b, c, value)` of the product table.
    pub fn product_entries(&self, i: usize, j: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let t = &self.products[&(i, j)];
        let mut out = Vec::new();
        for a in 0..self.dim(i) {
            for b in 0..self.dim(j) {
                for (c, s) in t.values[a * t.right_dim + b].iter().enumerate() {
                    if !s.is_zero() {
                        out.push((a, b, c, s.clone()));
                    }
                }
            }
        }
        out
    }

    /// `x · y` for `x ∈ A_i`, `y ∈ A_j`.
    pub fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Result<Vector> {
        self.check_degrees(i, j)?;
        self.check_vector(i, x)?;
        self.check_vector(j, y)?;
        Ok(self.mul(i, x, j, y))
    }

    pub(crate) fn mul(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vector {
        let t = &self.products[&(i, j)];
        let mut out = linalg::zero_vector(self.field, self.dim(i + j));
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                linalg::axpy(&mut out, &(xa * yb), &t.values[a * t.right_dim + b]);
            }
        }
        out
    }

    pub fn typing(&self) -> Option<&Vec<Vec<bool>>> {
        self.typing.as_ref()
    }

    pub fn is_typed(&self) -> bool {
        self.typing.is_some()
    }

    /// Installs an even/odd typing; `odd[i]` lists the flags of the basis
    /// of degree `i` (`odd[0]` must be empty).
    pub fn set_typing(&mut self, odd: Vec<Vec<bool>>) -> Result<()> {
        if odd.len() != self.max_degree + 1 {
            return Err(Error::Dimension(format!(
                "typing covers {} degrees, expected {}",
                odd.len(),
                self.max_degree + 1
            )));
        }
        for (i, flags) in odd.iter().enumerate() {
            let expected = if i == 0 { 0 } else { self.dim(i) };
            if flags.len() != expected {
                return Err(Error::Dimension(format!(
                    "typing of degree {i} has {} flags, expected {expected}",
                    flags.len()
                )));
            }
        }
        self.typing = Some(odd);
        Ok(())
    }

    pub fn with_typing(&self, odd: Vec<Vec<bool>>) -> Result<GradedAlgebra> {
        let mut out = self.clone();
        out.set_typing(odd)?;
        Ok(out)
    }

    /// Every positive-degree basis vector of one type.
    pub fn uniform_typing(&self, odd: bool) -> Vec<Vec<bool>> {
        (0..=self.max_degree)
            .map(|i| if i == 0 { Vec::new() } else { vec![odd; self.dim(i)] })
            .collect()
    }

    pub fn without_typing(&self) -> GradedAlgebra {
        let mut out = self.clone();
        out.typing = None;
        out
    }

    /// `t(e_b)` for `e_b ∈ A_i`: 1 for odd type, 0 for even type or degree 0.
    pub fn t(&self, i: usize, b: usize) -> Result<u32> {
        let typing = self.typing.as_ref().ok_or(Error::MissingTyping)?;
        Ok(if i == 0 { 0 } else { u32::from(typing[i][b]) })
    }

    /// `x ∗ Ξ` for `x ∈ A_1`: identity on even, minus identity on odd.
    pub fn xi(&self, x: &[Scalar]) -> Result<Vector> {
        let typing = self.typing.as_ref().ok_or(Error::MissingTyping)?;
        Ok(x.iter()
            .zip(&typing[1])
            .map(|(s, &odd)| if odd { -s } else { s.clone() })
            .collect())
    }

    /// Re-expresses `A_i` in a new basis for each `Some` entry (row `r`
    /// is the new `r`-th basis vector in old coordinates). Any typing is
    /// dropped.
    pub fn change_basis(&self, bases: &[Option<Matrix>]) -> Result<GradedAlgebra> {
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for i in 0..=self.max_degree {
            let d = self.dim(i);
            match bases.get(i).cloned().flatten() {
                Some(b) => {
                    if b.rows() != d || b.cols() != d {
                        return Err(Error::Dimension(format!("basis change for degree {i} must be {d}x{d}")));
                    }
                    let inv = b
                        .inverse()
                        .ok_or_else(|| Error::Invalid(format!("basis change for degree {i} is singular")))?;
                    forward.push(b);
                    backward.push(inv);
                }
                None => {
                    forward.push(Matrix::identity(self.field, d));
                    backward.push(Matrix::identity(self.field, d));
                }
            }
        }
        let mut out = GradedAlgebra::new(self.field, &self.dims)?;
        out.set_unit(backward[0].apply_row(&self.unit))?;
        for &(i, j) in self.products.keys() {
            for a in 0..self.dim(i) {
                for b in 0..self.dim(j) {
                    let v = self.mul(i, forward[i].row(a), j, forward[j].row(b));
                    out.set_product(i, j, a, b, backward[i + j].apply_row(&v))?;
                }
            }
        }
        Ok(out)
    }

    /// The Veronese subring `⊕ A_{2k}`, with `A_{2k}` in degree `k`.
    /// Typing is dropped.
    pub fn veronese_2(&self) -> Result<GradedAlgebra> {
        let top = self.max_degree / 2;
        let dims: Vec<usize> = (0..=top).map(|k| self.dim(2 * k)).collect();
        let mut out = GradedAlgebra::new(self.field, &dims)?;
        out.set_unit(self.unit.clone())?;
        for i in 0..=top {
            for j in 0..=top - i {
                for a in 0..self.dim(2 * i) {
                    for b in 0..self.dim(2 * j) {
                        out.set_product(i, j, a, b, self.product_of_basis(2 * i, 2 * j, a, b).clone())?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The subring `A_{w}`: the unit in degree 0, zero in degrees
    /// `1..w−1`, and `A_i` for `i >= w`. Typing of kept degrees is kept.
    pub fn subring_truncation(&self, w: usize) -> Result<GradedAlgebra> {
        if w < 1 || w > self.max_degree {
            return Err(Error::WindowOutOfRange {
                window: w,
                constraint: format!("1 <= w <= {}", self.max_degree),
            });
        }
        if linalg::is_zero(&self.unit) {
            return Err(Error::InvalidAlgebra("unit is zero".into()));
        }
        let dims: Vec<usize> = (0..=self.max_degree)
            .map(|i| match i {
                0 => 1,
                i if i < w => 0,
                i => self.dim(i),
            })
            .collect();
        let mut out = GradedAlgebra::new(self.field, &dims)?;
        out.set_unit(vec![self.field.one()])?;
        let lift = |i: usize, b: usize| if i == 0 { self.unit.clone() } else { self.basis_vector(i, b) };
        for &(i, j) in self.products.keys() {
            let kept = |d: usize| d == 0 || d >= w;
            if !kept(i) || !kept(j) {
                continue;
            }
            for a in 0..out.dim(i) {
                for b in 0..out.dim(j) {
                    let v = self.mul(i, &lift(i, a), j, &lift(j, b));
                    let v = if i + j == 0 {
                        let (c, e) = v
                            .iter()
                            .zip(&self.unit)
                            .find(|(_, e)| !e.is_zero())
                            .expect("unit is nonzero");
                        vec![c.div(e)]
                    } else {
                        v
                    };
                    out.set_product(i, j, a, b, v)?;
                }
            }
        }
        if let Some(typing) = &self.typing {
            let t = (0..=self.max_degree)
                .map(|i| if i >= w { typing[i].clone() } else { Vec::new() })
                .collect();
            out.set_typing(t)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn polynomial_ring_products() {
        let f = Field::Rational;
        let a = catalog::polynomial(f, 1, 4).unwrap();
        let x = a.basis_vector(1, 0);
        assert_eq!(a.multiply(1, &x, 1, &x).unwrap(), a.basis_vector(2, 0));
        assert!(matches!(
            a.multiply(3, &a.basis_vector(3, 0), 2, &a.basis_vector(2, 0)),
            Err(Error::TruncationExceeded { needed: 5, bound: 4 })
        ));
    }

    #[test]
    fn truncation_and_veronese() {
        let f = Field::Rational;
        let free = free_gperm(f, &[1, 1], 5).unwrap();
        let t = free.subring_truncation(2).unwrap();
        assert_eq!(t.dims(), vec![1, 0, 4, 6, 8, 10]);
        assert!(t.check_gperm().is_empty());
        assert_eq!(free.subring_truncation(1).unwrap(), free);
        let x = catalog::polynomial(f, 1, 6).unwrap();
        assert_eq!(x.veronese_2().unwrap(), catalog::polynomial(f, 1, 3).unwrap());
    }
}
