//! Truncated symmetric operads stored by structure constants.
//!
//! `P(n)` has a fixed basis for `1 <= n <= N`. The right action of the
//! adjacent transposition `s_k` on `P(n)` is a matrix whose row `b` is
//! `e_b ∗ s_k`, so a row vector `v` acts as `v ∗ s_k = v M`. The partial
//! composition `∘_i : P(m) ⊗ P(n) → P(m+n−1)` is stored densely for every
//! `(m, n, i)` with `m+n−1 <= N`.

mod axioms;
mod classify;
mod ideals;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::symgroup::Permutation;

pub use axioms::{Axiom, Violation};
pub use classify::{ArityClass, SymmetryReport};
pub use ideals::{CentralityWitness, NonPrimeWitness};

/// Output vectors of `∘_i`, indexed by `a * dim P(n) + b` for basis
/// elements `e_a ∈ P(m)` and `e_b ∈ P(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CompTable {
    pub(crate) left_dim: usize,
    pub(crate) right_dim: usize,
    pub(crate) values: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOperad {
    field: Field,
    max_arity: usize,
    dims: Vec<usize>,
    actions: Vec<Vec<Matrix>>,
    identity: Vector,
    comps: BTreeMap<(usize, usize, usize), CompTable>,
}

impl TruncatedOperad {
    /// An operad skeleton with the given dimensions (`dims[n-1] = dim P(n)`),
    /// trivial actions, zero identity and zero compositions. Callers fill
    /// in the data with the setters.
    pub fn new(field: Field, dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidOperad("max arity must be at least 1".into()));
        }
        let max_arity = dims.len();
        let mut all_dims = vec![0];
        all_dims.extend_from_slice(dims);
        let actions = (0..=max_arity)
            .map(|n| {
                (1..n)
                    .map(|_| Matrix::identity(field, all_dims[n]))
                    .collect()
            })
            .collect();
        let mut comps = BTreeMap::new();
        for m in 1..=max_arity {
            for n in 1..=max_arity + 1 - m {
                let r = m + n - 1;
                for i in 1..=m {
                    comps.insert(
                        (m, n, i),
                        CompTable {
                            left_dim: all_dims[m],
                            right_dim: all_dims[n],
                            values: vec![
                                linalg::zero_vector(field, all_dims[r]);
                                all_dims[m] * all_dims[n]
                            ],
                        },
                    );
                }
            }
        }
        Ok(TruncatedOperad {
            field,
            max_arity,
            identity: linalg::zero_vector(field, all_dims[1]),
            dims: all_dims,
            actions,
            comps,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// `dim P(n)`; zero for `n = 0` and beyond the truncation.
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// `dim P(1), ..., dim P(N)`.
    pub fn dims(&self) -> Vec<usize> {
        self.dims[1..].to_vec()
    }

    pub fn identity(&self) -> &Vector {
        &self.identity
    }

    /// Action matrix of `s_k` on `P(n)`.
    pub fn action(&self, n: usize, k: usize) -> &Matrix {
        &self.actions[n][k - 1]
    }

    pub fn basis_vector(&self, n: usize, b: usize) -> Vector {
        linalg::unit_vector(self.field, self.dim(n), b)
    }

    pub fn set_identity(&mut self, v: Vector) -> Result<()> {
        self.check_vector(1, &v)?;
        self.identity = v;
        Ok(())
    }

    pub fn set_action(&mut self, n: usize, k: usize, m: Matrix) -> Result<()> {
        if n < 2 || n > self.max_arity || k == 0 || k >= n {
            return Err(Error::InvalidOperad(format!(
                "no generator s_{k} acting on arity {n}"
            )));
        }
        let d = self.dim(n);
        if m.rows() != d || m.cols() != d || m.field() != self.field {
            return Err(Error::Dimension(format!(
                "action of s_{k} on arity {n} must be a {d}x{d} matrix over {}",
                self.field
            )));
        }
        self.actions[n][k - 1] = m;
        Ok(())
    }

    /// Sets `e_a ∘_i e_b` for `e_a ∈ P(m)`, `e_b ∈ P(n)`.
    pub fn set_composition(
        &mut self,
        m: usize,
        n: usize,
        i: usize,
        a: usize,
        b: usize,
        value: Vector,
    ) -> Result<()> {
        self.check_slot(m, n, i)?;
        if a >= self.dim(m) || b >= self.dim(n) {
            return Err(Error::Dimension(format!(
                "basis index ({a}, {b}) out of range for arities ({m}, {n})"
            )));
        }
        self.check_vector(m + n - 1, &value)?;
        let table = self.comps.get_mut(&(m, n, i)).expect("table exists");
        let idx = a * table.right_dim + b;
        table.values[idx] = value;
        Ok(())
    }

    pub fn set_composition_entry(
        &mut self,
        key: (usize, usize, usize),
        a: usize,
        b: usize,
        c: usize,
        value: Scalar,
    ) -> Result<()> {
        let (m, n, i) = key;
        self.check_slot(m, n, i)?;
        let r = m + n - 1;
        if a >= self.dim(m) || b >= self.dim(n) || c >= self.dim(r) {
            return Err(Error::Dimension(format!(
                "entry ({a}, {b}, {c}) out of range for composition ({m}, {n}, {i})"
            )));
        }
        if !self.field.contains(&value) {
            return Err(Error::FieldMismatch(format!("{value} is not in {}", self.field)));
        }
        let table = self.comps.get_mut(&(m, n, i)).expect("table exists");
        let idx = a * table.right_dim + b;
        table.values[idx][c] = value;
        Ok(())
    }

    /// `e_a ∘_i e_b`.
    pub fn composition_of_basis(&self, m: usize, n: usize, i: usize, a: usize, b: usize) -> &Vector {
        let table = &self.comps[&(m, n, i)];
        &table.values[a * table.right_dim + b]
    }

    /// Keys `(m, n, i)` of all stored composition tables in ascending order.
    pub fn composition_keys(&self) -> Vec<(usize, usize, usize)> {
        self.comps.keys().copied().collect()
    }

    /// Nonzero entries `(a, b, c, value)` of the composition table.
    pub fn composition_entries(&self, m: usize, n: usize, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let table = &self.comps[&(m, n, i)];
        let mut out = Vec::new();
        for a in 0..table.left_dim {
            for b in 0..table.right_dim {
                for (c, s) in table.values[a * table.right_dim + b].iter().enumerate() {
                    if !s.is_zero() {
                        out.push((a, b, c, s.clone()));
                    }
                }
            }
        }
        out
    }

    fn check_slot(&self, m: usize, n: usize, i: usize) -> Result<()> {
        if m == 0 || n == 0 || m > self.max_arity || n > self.max_arity {
            return Err(Error::Dimension(format!(
                "arities ({m}, {n}) outside 1..{}",
                self.max_arity
            )));
        }
        if i == 0 || i > m {
            return Err(Error::SlotOutOfRange { slot: i, arity: m });
        }
        if m + n - 1 > self.max_arity {
            return Err(Error::TruncationExceeded {
                needed: m + n - 1,
                bound: self.max_arity,
            });
        }
        Ok(())
    }

    fn check_vector(&self, n: usize, v: &[Scalar]) -> Result<()> {
        if n == 0 || n > self.max_arity {
            return Err(Error::TruncationExceeded {
                needed: n,
                bound: self.max_arity,
            });
        }
        if v.len() != self.dim(n) {
            return Err(Error::Dimension(format!(
                "vector of length {} in arity {n} of dimension {}",
                v.len(),
                self.dim(n)
            )));
        }
        if let Some(s) = v.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(format!("{s} is not in {}", self.field)));
        }
        Ok(())
    }

    /// `v ∗ p` for `v ∈ P(n)`.
    pub fn act(&self, n: usize, v: &[Scalar], p: &Permutation) -> Result<Vector> {
        self.check_vector(n, v)?;
        if p.len() != n {
            return Err(Error::Dimension(format!(
                "permutation of {} letters acting on arity {n}",
                p.len()
            )));
        }
        let mut out = v.to_vec();
        for k in p.adjacent_word() {
            out = self.act_adjacent(n, &out, k);
        }
        Ok(out)
    }

    pub(crate) fn act_adjacent(&self, n: usize, v: &[Scalar], k: usize) -> Vector {
        self.actions[n][k - 1].apply_row(v)
    }

    /// `x ∘_i y` for `x ∈ P(m)`, `y ∈ P(n)`.
    pub fn compose(&self, m: usize, x: &[Scalar], i: usize, n: usize, y: &[Scalar]) -> Result<Vector> {
        self.check_slot(m, n, i)?;
        self.check_vector(m, x)?;
        self.check_vector(n, y)?;
        Ok(self.compose_unchecked(m, x, i, n, y))
    }

    pub(crate) fn compose_unchecked(&self, m: usize, x: &[Scalar], i: usize, n: usize, y: &[Scalar]) -> Vector {
        let table = &self.comps[&(m, n, i)];
        let mut out = linalg::zero_vector(self.field, self.dim(m + n - 1));
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let coeff = xa * yb;
                linalg::axpy(&mut out, &coeff, &table.values[a * table.right_dim + b]);
            }
        }
        out
    }

    /// `x ∘ (y_1, ..., y_m)` computed as `((x ∘_m y_m) ∘_{m−1} y_{m−1}) ... ∘_1 y_1`.
    pub fn compose_full(&self, m: usize, x: &[Scalar], ys: &[(usize, Vector)]) -> Result<Vector> {
        if ys.len() != m {
            return Err(Error::Dimension(format!(
                "full composition of arity {m} needs {m} inputs, got {}",
                ys.len()
            )));
        }
        let mut arity = m;
        let mut acc = x.to_vec();
        for (slot, (n, y)) in ys.iter().enumerate().rev() {
            acc = self.compose(arity, &acc, slot + 1, *n, y)?;
            arity += n - 1;
        }
        Ok(acc)
    }

    /// Re-expresses `P(n)` in a new basis for each `Some` entry of `bases`
    /// (indexed by arity, entry 0 ignored). Row `r` of a basis matrix gives
    /// the new `r`-th basis vector in old coordinates.
    pub fn change_basis(&self, bases: &[Option<Matrix>]) -> Result<TruncatedOperad> {
        let mut forward = Vec::with_capacity(self.max_arity + 1);
        let mut backward = Vec::with_capacity(self.max_arity + 1);
        for n in 0..=self.max_arity {
            let d = self.dim(n);
            match bases.get(n).cloned().flatten() {
                Some(b) if n > 0 => {
                    if b.rows() != d || b.cols() != d {
                        return Err(Error::Dimension(format!(
                            "basis change for arity {n} must be {d}x{d}"
                        )));
                    }
                    let inv = b.inverse().ok_or_else(|| {
                        Error::Invalid(format!("basis change for arity {n} is singular"))
                    })?;
                    forward.push(b);
                    backward.push(inv);
                }
                _ => {
                    forward.push(Matrix::identity(self.field, d));
                    backward.push(Matrix::identity(self.field, d));
                }
            }
        }
        let mut out = TruncatedOperad::new(self.field, &self.dims())?;
        out.set_identity(backward[1].apply_row(&self.identity))?;
        for n in 2..=self.max_arity {
            for k in 1..n {
                let m = forward[n].mul(self.action(n, k))?.mul(&backward[n])?;
                out.set_action(n, k, m)?;
            }
        }
        for &(m, n, i) in self.comps.keys() {
            let r = m + n - 1;
            for a in 0..self.dim(m) {
                for b in 0..self.dim(n) {
                    let x = forward[m].row(a).to_vec();
                    let y = forward[n].row(b).to_vec();
                    let old = self.compose_unchecked(m, &x, i, n, &y);
                    out.set_composition(m, n, i, a, b, backward[r].apply_row(&old))?;
                }
            }
        }
        Ok(out)
    }

    /// The truncation `P_{w}`: arity 1 is spanned by the identity, arities
    /// `2..w−1` vanish and higher arities are unchanged.
    pub fn truncation_suboperad(&self, w: usize) -> Result<TruncatedOperad> {
        if w < 2 || w > self.max_arity {
            return Err(Error::WindowOutOfRange {
                window: w,
                constraint: format!("2 <= w <= {}", self.max_arity),
            });
        }
        if linalg::is_zero(&self.identity) {
            return Err(Error::InvalidOperad("identity element is zero".into()));
        }
        let kept = |n: usize| n == 1 || n >= w;
        let dims: Vec<usize> = (1..=self.max_arity)
            .map(|n| match n {
                1 => 1,
                n if n < w => 0,
                n => self.dim(n),
            })
            .collect();
        let mut out = TruncatedOperad::new(self.field, &dims)?;
        out.set_identity(vec![self.field.one()])?;
        for n in w..=self.max_arity {
            for k in 1..n {
                out.set_action(n, k, self.action(n, k).clone())?;
            }
        }
        // arity-1 elements of the truncation are multiples of the identity
        let lift = |n: usize, b: usize| -> Vector {
            if n == 1 {
                self.identity.clone()
            } else {
                self.basis_vector(n, b)
            }
        };
        for &(m, n, i) in self.comps.keys() {
            let r = m + n - 1;
            if !kept(m) || !kept(n) {
                continue;
            }
            for a in 0..out.dim(m) {
                for b in 0..out.dim(n) {
                    let value = self.compose_unchecked(m, &lift(m, a), i, n, &lift(n, b));
                    let value = if r == 1 {
                        let c = value
                            .iter()
                            .zip(&self.identity)
                            .find(|(_, e)| !e.is_zero())
                            .map(|(v, e)| v.div(e))
                            .expect("identity is nonzero");
                        vec![c]
                    } else {
                        value
                    };
                    out.set_composition(m, n, i, a, b, value)?;
                }
            }
        }
        Ok(out)
    }

    /// The Σ-submodule of `P(n)` generated by `vectors`.
    pub fn sigma_closure(&self, n: usize, vectors: Vec<Vector>) -> Subspace {
        let mut space = Subspace::from_vectors(self.field, self.dim(n), vectors);
        loop {
            let mut extra = Vec::new();
            for v in space.basis_vectors() {
                for k in 1..n {
                    let w = self.act_adjacent(n, &v, k);
                    if !space.contains(&w) {
                        extra.push(w);
                    }
                }
            }
            if extra.is_empty() {
                return space;
            }
            space = space.with_vectors(extra);
        }
    }

    /// Hilbert series coefficients `0, dim P(1), ..., dim P(N)`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.dims.clone()
    }
}
