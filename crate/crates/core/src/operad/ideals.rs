//! Graded subsets of an operad: ideals and their products, torsion and
//! centrality, all within the truncation window.

use super::TruncatedOperad;
use crate::error::{Error, Result};
use crate::graded::{GradedSubset, WindowedSubset};
use crate::linalg::{self, Matrix, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityWitness {
    /// Arity and basis index of `ν`.
    pub other: (usize, usize),
    pub i: usize,
    pub j: usize,
    pub left: Vector,
    pub right: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPrimeWitness {
    /// Arity and basis index generating `I`.
    pub first: (usize, usize),
    /// Arity and basis index generating `J`.
    pub second: (usize, usize),
    pub first_ideal: GradedSubset,
    pub second_ideal: GradedSubset,
}

impl TruncatedOperad {
    pub fn zero_subset(&self) -> GradedSubset {
        GradedSubset::zero(self.field, 1, &self.dims())
    }

    pub fn full_subset(&self) -> GradedSubset {
        GradedSubset::full(self.field, 1, &self.dims())
    }

    fn check_subset(&self, s: &GradedSubset) -> Result<()> {
        let ok = s.first() == 1 && s.ambient_dims() == self.dims();
        if ok {
            Ok(())
        } else {
            Err(Error::Dimension("graded subset does not match the operad".into()))
        }
    }

    /// `I ∘ J`: the Σ-submodule generated by all `x ∘_i y`, `x ∈ I`, `y ∈ J`.
    pub fn ideal_product(&self, left: &GradedSubset, right: &GradedSubset) -> Result<GradedSubset> {
        self.check_subset(left)?;
        self.check_subset(right)?;
        let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); self.max_arity + 1];
        for m in 1..=self.max_arity {
            for n in 1..=self.max_arity + 1 - m {
                for x in left.component(m).basis_vectors() {
                    for y in right.component(n).basis_vectors() {
                        for i in 1..=m {
                            gens[m + n - 1].push(self.compose_unchecked(m, &x, i, n, &y));
                        }
                    }
                }
            }
        }
        Ok(self.closure_from(gens))
    }

    /// `I • J`: the Σ-submodule generated by all full compositions
    /// `x ∘ (y_1, ..., y_m)`, `x ∈ I(m)`, `y_j ∈ J`.
    pub fn bullet_product(&self, left: &GradedSubset, right: &GradedSubset) -> Result<GradedSubset> {
        self.check_subset(left)?;
        self.check_subset(right)?;
        let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); self.max_arity + 1];
        let inputs: Vec<(usize, Vector)> = (1..=self.max_arity)
            .flat_map(|n| right.component(n).basis_vectors().into_iter().map(move |v| (n, v)))
            .collect();
        for m in 1..=self.max_arity {
            for x in left.component(m).basis_vectors() {
                self.for_each_full_composition(m, &x, &inputs, &mut |arity, v| gens[arity].push(v));
            }
        }
        Ok(self.closure_from(gens))
    }

    /// Calls `visit(arity, x ∘ (y_1..y_m))` for every tuple of inputs whose
    /// total arity fits in the truncation.
    fn for_each_full_composition(
        &self,
        m: usize,
        x: &[crate::Scalar],
        inputs: &[(usize, Vector)],
        visit: &mut dyn FnMut(usize, Vector),
    ) {
        // fill slots from the last one, matching the iterated order
        fn rec(
            p: &TruncatedOperad,
            slot: usize,
            arity: usize,
            acc: Vector,
            inputs: &[(usize, Vector)],
            visit: &mut dyn FnMut(usize, Vector),
        ) {
            if slot == 0 {
                visit(arity, acc);
                return;
            }
            for (n, y) in inputs {
                let next = arity + n - 1;
                if next > p.max_arity() {
                    continue;
                }
                let v = p.compose_unchecked(arity, &acc, slot, *n, y);
                rec(p, slot - 1, next, v, inputs, visit);
            }
        }
        rec(self, m, m, x.to_vec(), inputs, visit);
    }

    fn closure_from(&self, gens: Vec<Vec<Vector>>) -> GradedSubset {
        GradedSubset::new(
            1,
            (1..=self.max_arity)
                .map(|n| self.sigma_closure(n, gens[n].clone()))
                .collect(),
        )
    }

    /// The smallest ideal containing `s`: Σ-stable and closed under
    /// composition with arbitrary elements on either side.
    pub fn generated_ideal(&self, s: &GradedSubset) -> Result<GradedSubset> {
        self.check_subset(s)?;
        let mut current = s.clone();
        loop {
            let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); self.max_arity + 1];
            for n in 1..=self.max_arity {
                gens[n] = current.component(n).basis_vectors();
            }
            for m in 1..=self.max_arity {
                for n in 1..=self.max_arity + 1 - m {
                    let r = m + n - 1;
                    // ideal element on the left
                    for x in current.component(m).basis_vectors() {
                        for b in 0..self.dim(n) {
                            let y = self.basis_vector(n, b);
                            for i in 1..=m {
                                gens[r].push(self.compose_unchecked(m, &x, i, n, &y));
                            }
                        }
                    }
                    // ideal element on the right
                    for y in current.component(n).basis_vectors() {
                        for a in 0..self.dim(m) {
                            let x = self.basis_vector(m, a);
                            for i in 1..=m {
                                gens[r].push(self.compose_unchecked(m, &x, i, n, &y));
                            }
                        }
                    }
                }
            }
            let next = self.closure_from(gens);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Searches principal ideals generated by basis vectors for a nonzero
    /// pair `I, J` with `I ∘ J = 0` inside the truncation. Finding one
    /// shows the operad is not prime; finding none decides nothing.
    pub fn nonprime_witness(&self) -> Result<Option<NonPrimeWitness>> {
        let mut principal = Vec::new();
        for n in 1..=self.max_arity {
            for b in 0..self.dim(n) {
                let mut gen = self.zero_subset();
                gen.add_vector(n, self.basis_vector(n, b))?;
                principal.push(((n, b), self.generated_ideal(&gen)?));
            }
        }
        for (first, i_ideal) in &principal {
            for (second, j_ideal) in &principal {
                if self.ideal_product(i_ideal, j_ideal)?.is_zero() {
                    return Ok(Some(NonPrimeWitness {
                        first: *first,
                        second: *second,
                        first_ideal: i_ideal.clone(),
                        second_ideal: j_ideal.clone(),
                    }));
                }
            }
        }
        Ok(None)
    }

    fn check_window(&self, w: usize) -> Result<()> {
        if w < 2 || w > self.max_arity {
            return Err(Error::WindowOutOfRange {
                window: w,
                constraint: format!("2 <= w <= {}", self.max_arity),
            });
        }
        Ok(())
    }

    /// Common kernel of linear maps on `P(k)`, each given by the images of
    /// the basis vectors.
    fn common_kernel(&self, k: usize, maps: &[Vec<Vector>]) -> Subspace {
        let d = self.dim(k);
        let mut rows = Vec::new();
        for images in maps {
            let out_dim = images.first().map_or(0, Vec::len);
            for c in 0..out_dim {
                rows.push(images.iter().map(|img| img[c].clone()).collect::<Vector>());
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.field, d);
        }
        Matrix::from_rows(self.field, d, rows)
            .expect("consistent rows")
            .kernel()
    }

    fn windowed(&self, w: usize, comps: Vec<(Subspace, bool)>) -> WindowedSubset {
        let (components, decided) = comps.into_iter().unzip();
        WindowedSubset {
            window: w,
            subset: GradedSubset::new(1, components),
            decided,
        }
    }

    /// Left torsion: `x ∈ P(k)` with `y ∘_i x = 0` for all `y ∈ P(m)`,
    /// `m >= w`, within the truncation. Decided for `k <= N − w + 1`.
    pub fn left_torsion(&self, w: usize) -> Result<WindowedSubset> {
        self.check_window(w)?;
        let comps = (1..=self.max_arity)
            .map(|k| {
                let mut maps = Vec::new();
                for m in w..=self.max_arity + 1 - k {
                    for a in 0..self.dim(m) {
                        let y = self.basis_vector(m, a);
                        for i in 1..=m {
                            maps.push(
                                (0..self.dim(k))
                                    .map(|b| self.compose_unchecked(m, &y, i, k, &self.basis_vector(k, b)))
                                    .collect(),
                            );
                        }
                    }
                }
                (self.common_kernel(k, &maps), k + w <= self.max_arity + 1)
            })
            .collect();
        Ok(self.windowed(w, comps))
    }

    /// Right torsion: `x ∈ P(k)` with `x ∘_i y = 0` for all `y ∈ P(m)`,
    /// `m >= w`, within the truncation. Decided for `k <= N − w + 1`.
    pub fn right_torsion(&self, w: usize) -> Result<WindowedSubset> {
        self.check_window(w)?;
        let comps = (1..=self.max_arity)
            .map(|k| {
                let mut maps = Vec::new();
                for m in w..=self.max_arity + 1 - k {
                    for a in 0..self.dim(m) {
                        let y = self.basis_vector(m, a);
                        for i in 1..=k {
                            maps.push(
                                (0..self.dim(k))
                                    .map(|b| self.compose_unchecked(k, &self.basis_vector(k, b), i, m, &y))
                                    .collect(),
                            );
                        }
                    }
                }
                (self.common_kernel(k, &maps), k + w <= self.max_arity + 1)
            })
            .collect();
        Ok(self.windowed(w, comps))
    }

    /// Bullet-right torsion: `x ∈ P(k)` with `x ∘ (y_1, ..., y_k) = 0` for
    /// all `y_j` of arity `>= w`, within the truncation. Decided for
    /// `k·w <= N`.
    pub fn bullet_right_torsion(&self, w: usize) -> Result<WindowedSubset> {
        self.check_window(w)?;
        let inputs: Vec<(usize, Vector)> = (w..=self.max_arity)
            .flat_map(|n| (0..self.dim(n)).map(move |b| (n, b)))
            .map(|(n, b)| (n, self.basis_vector(n, b)))
            .collect();
        let comps = (1..=self.max_arity)
            .map(|k| {
                // images[b] lists x_b ∘ (tuple) over all tuples in a fixed order
                let mut images: Vec<Vec<Vector>> = Vec::new();
                for b in 0..self.dim(k) {
                    let mut outs = Vec::new();
                    self.for_each_full_composition(k, &self.basis_vector(k, b), &inputs, &mut |_, v| {
                        outs.push(v)
                    });
                    images.push(outs);
                }
                let tuples = images.first().map_or(0, Vec::len);
                let maps: Vec<Vec<Vector>> = (0..tuples)
                    .map(|t| images.iter().map(|outs| outs[t].clone()).collect())
                    .collect();
                (self.common_kernel(k, &maps), k * w <= self.max_arity)
            })
            .collect();
        Ok(self.windowed(w, comps))
    }

    /// First `ν, i, j` with `μ ∘_i ν ≠ ν ∘_j μ`, over basis `ν` and all
    /// slots whose results fit in the truncation; `None` when `μ` is central
    /// within the truncation.
    pub fn centrality_witness(&self, m: usize, mu: &[crate::Scalar]) -> Result<Option<CentralityWitness>> {
        if m == 0 || m > self.max_arity || mu.len() != self.dim(m) {
            return Err(Error::Dimension(format!("not an element of arity {m}")));
        }
        for n in 1..=self.max_arity + 1 - m {
            for b in 0..self.dim(n) {
                let nu = self.basis_vector(n, b);
                for i in 1..=m {
                    let left = self.compose_unchecked(m, mu, i, n, &nu);
                    for j in 1..=n {
                        let right = self.compose_unchecked(n, &nu, j, m, mu);
                        if left != right {
                            return Ok(Some(CentralityWitness {
                                other: (n, b),
                                i,
                                j,
                                left,
                                right,
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_central(&self, m: usize, mu: &[crate::Scalar]) -> Result<bool> {
        Ok(self.centrality_witness(m, mu)?.is_none())
    }

    /// Elements of each arity that are central within the truncation.
    /// Arity `m` is decided when some `ν` of arity `>= 2` can be composed
    /// with it, i.e. `m < N`.
    pub fn center(&self) -> WindowedSubset {
        let comps = (1..=self.max_arity)
            .map(|m| {
                let mut maps = Vec::new();
                for n in 1..=self.max_arity + 1 - m {
                    for b in 0..self.dim(n) {
                        let nu = self.basis_vector(n, b);
                        for i in 1..=m {
                            for j in 1..=n {
                                maps.push(
                                    (0..self.dim(m))
                                        .map(|a| {
                                            let mu = self.basis_vector(m, a);
                                            linalg::sub(
                                                &self.compose_unchecked(m, &mu, i, n, &nu),
                                                &self.compose_unchecked(n, &nu, j, m, &mu),
                                            )
                                        })
                                        .collect(),
                                );
                            }
                        }
                    }
                }
                (self.common_kernel(m, &maps), m < self.max_arity)
            })
            .collect();
        self.windowed(2, comps)
    }

    /// `dim P(n)` minus the dimension of what lower arities generate:
    /// the identity for `n = 1`, and for `n >= 2` the Σ-closure of all
    /// `x ∘_i y` with `x, y` of arity `>= 2`.
    pub fn generator_defect(&self) -> Vec<usize> {
        (1..=self.max_arity)
            .map(|n| {
                let generated = if n == 1 {
                    Subspace::from_vectors(self.field, self.dim(1), vec![self.identity.clone()])
                } else {
                    let mut gens = Vec::new();
                    for m in 2..n {
                        let k = n + 1 - m;
                        for a in 0..self.dim(m) {
                            let x = self.basis_vector(m, a);
                            for b in 0..self.dim(k) {
                                let y = self.basis_vector(k, b);
                                for i in 1..=m {
                                    gens.push(self.compose_unchecked(m, &x, i, k, &y));
                                }
                            }
                        }
                    }
                    self.sigma_closure(n, gens)
                };
                self.dim(n) - generated.dim()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::field::Field;

    #[test]
    fn products_with_zero() {
        let p = catalog::build_com(Field::Rational, 5).unwrap();
        let full = p.full_subset();
        let zero = p.zero_subset();
        assert!(p.ideal_product(&full, &zero).unwrap().is_zero());
        assert!(p.bullet_product(&zero, &full).unwrap().is_zero());
        assert_eq!(p.ideal_product(&full, &full).unwrap().dims(), vec![1; 5]);
    }

    #[test]
    fn com_has_no_torsion() {
        let p = catalog::build_com(Field::Rational, 6).unwrap();
        for w in 2..=4 {
            let t = p.left_torsion(w).unwrap();
            assert!(t.decided_dims().iter().all(|&(_, d)| d == 0));
        }
    }

    #[test]
    fn generator_defects() {
        let f = Field::Rational;
        assert_eq!(
            catalog::build_com(f, 6).unwrap().generator_defect(),
            vec![0, 1, 0, 0, 0, 0]
        );
        assert_eq!(
            catalog::build_ope(f, 7).unwrap().generator_defect(),
            vec![0, 0, 1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn ope_is_central() {
        let p = catalog::build_ope(Field::Rational, 7).unwrap();
        for n in [1, 3, 5, 7] {
            assert!(p.is_central(n, &p.basis_vector(n, 0)).unwrap());
        }
    }
}
