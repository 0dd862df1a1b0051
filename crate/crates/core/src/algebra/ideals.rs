//! Two-sided ideals and torsion of a truncated graded algebra.

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::graded::{GradedSubset, WindowedSubset};
use crate::linalg::{self, Matrix, Subspace, Vector};

impl GradedAlgebra {
    pub fn zero_ideal(&self) -> GradedSubset {
        GradedSubset::zero(self.field, 0, &self.dims)
    }

    fn check_graded(&self, s: &GradedSubset) -> Result<()> {
        if s.first() == 0 && s.ambient_dims() == self.dims {
            Ok(())
        } else {
            Err(Error::Dimension("graded subset does not match the algebra".into()))
        }
    }

    fn span_by_degree(&self, gens: Vec<Vec<Vector>>) -> GradedSubset {
        GradedSubset::new(
            0,
            gens.into_iter()
                .enumerate()
                .map(|(i, v)| Subspace::from_vectors(self.field, self.dim(i), v))
                .collect(),
        )
    }

    /// The smallest two-sided ideal containing `s`, within the truncation.
    pub fn generated_ideal(&self, s: &GradedSubset) -> Result<GradedSubset> {
        self.check_graded(s)?;
        let mut current = s.clone();
        loop {
            let mut gens: Vec<Vec<Vector>> = (0..=self.max_degree)
                .map(|i| current.component(i).basis_vectors())
                .collect();
            for i in 0..=self.max_degree {
                for x in current.component(i).basis_vectors() {
                    for j in 0..=self.max_degree - i {
                        for b in 0..self.dim(j) {
                            let e = self.basis_vector(j, b);
                            gens[i + j].push(self.mul(i, &x, j, &e));
                            gens[i + j].push(self.mul(j, &e, i, &x));
                        }
                    }
                }
            }
            let next = self.span_by_degree(gens);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `span{xy : x ∈ I, y ∈ J}` by degree.
    pub fn ideal_product(&self, left: &GradedSubset, right: &GradedSubset) -> Result<GradedSubset> {
        self.check_graded(left)?;
        self.check_graded(right)?;
        let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); self.max_degree + 1];
        for i in 0..=self.max_degree {
            for x in left.component(i).basis_vectors() {
                for j in 0..=self.max_degree - i {
                    for y in right.component(j).basis_vectors() {
                        gens[i + j].push(self.mul(i, &x, j, &y));
                    }
                }
            }
        }
        Ok(self.span_by_degree(gens))
    }

    /// The ideal generated by all commutators `xy − yx` of basis elements.
    pub fn commutator_ideal(&self) -> GradedSubset {
        let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); self.max_degree + 1];
        for i in 0..=self.max_degree {
            for j in 0..=self.max_degree - i {
                for a in 0..self.dim(i) {
                    let x = self.basis_vector(i, a);
                    for b in 0..self.dim(j) {
                        let y = self.basis_vector(j, b);
                        gens[i + j].push(linalg::sub(&self.mul(i, &x, j, &y), &self.mul(j, &y, i, &x)));
                    }
                }
            }
        }
        let s = self.span_by_degree(gens);
        self.generated_ideal(&s).expect("matching dimensions")
    }

    /// `A_{>=1}`.
    pub fn augmentation_ideal(&self) -> GradedSubset {
        GradedSubset::new(
            0,
            (0..=self.max_degree)
                .map(|i| {
                    if i == 0 {
                        Subspace::zero(self.field, self.dim(0))
                    } else {
                        Subspace::full(self.field, self.dim(i))
                    }
                })
                .collect(),
        )
    }

    fn torsion(&self, w: usize, left: bool) -> Result<WindowedSubset> {
        if w < 1 || w > self.max_degree {
            return Err(Error::WindowOutOfRange {
                window: w,
                constraint: format!("1 <= w <= {}", self.max_degree),
            });
        }
        let mut components = Vec::new();
        let mut decided = Vec::new();
        for d in 0..=self.max_degree {
            let mut rows: Vec<Vector> = Vec::new();
            for j in w..=self.max_degree - d {
                for b in 0..self.dim(j) {
                    let e = self.basis_vector(j, b);
                    let images: Vec<Vector> = (0..self.dim(d))
                        .map(|a| {
                            let x = self.basis_vector(d, a);
                            if left {
                                self.mul(j, &e, d, &x)
                            } else {
                                self.mul(d, &x, j, &e)
                            }
                        })
                        .collect();
                    for c in 0..self.dim(d + j) {
                        rows.push(images.iter().map(|v| v[c].clone()).collect());
                    }
                }
            }
            let space = if rows.is_empty() {
                Subspace::full(self.field, self.dim(d))
            } else {
                Matrix::from_rows(self.field, self.dim(d), rows)
                    .expect("consistent rows")
                    .kernel()
            };
            components.push(space);
            decided.push(d + w <= self.max_degree);
        }
        Ok(WindowedSubset {
            window: w,
            subset: GradedSubset::new(0, components),
            decided,
        })
    }

    /// `{x : A_{>=w} · x = 0}` within the truncation; degree `d` is decided
    /// when `d + w <= D`.
    pub fn left_torsion(&self, w: usize) -> Result<WindowedSubset> {
        self.torsion(w, true)
    }

    /// `{x : x · A_{>=w} = 0}` within the truncation.
    pub fn right_torsion(&self, w: usize) -> Result<WindowedSubset> {
        self.torsion(w, false)
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::field::Field;

    #[test]
    fn commutative_algebra_has_zero_commutator_ideal() {
        let a = catalog::polynomial(Field::Rational, 1, 5).unwrap();
        assert!(a.commutator_ideal().is_zero());
        let t = a.left_torsion(1).unwrap();
        assert!(t.decided_dims().iter().all(|&(_, d)| d == 0));
        // the top degree is undecided and reported as everything
        assert!(!t.is_decided(5));
        assert_eq!(t.subset.component(5).dim(), 1);
    }

    #[test]
    fn left_torsion_of_the_monomial_gperm_algebra() {
        let a = catalog::build_xy_algebra(Field::Rational, 6).unwrap();
        let t = a.left_torsion(1).unwrap();
        for d in 1..=5 {
            // spanned by y x^{d-1}, basis index 1
            assert_eq!(t.subset.component(d).basis_vectors(), vec![a.basis_vector(d, 1)]);
        }
        assert_eq!(t.subset.component(0).dim(), 0);
        let comm = a.commutator_ideal();
        let prod = a.ideal_product(&a.augmentation_ideal(), &comm).unwrap();
        assert!(!comm.is_zero());
        assert!(prod.is_zero());
        assert!(a.right_torsion(1).unwrap().subset.component(1).is_zero());
    }
}
