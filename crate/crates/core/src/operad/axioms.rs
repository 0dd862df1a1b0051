use std::fmt;

use super::TruncatedOperad;
use crate::linalg::{self, Matrix};
use crate::symgroup::{phi_doubleprime, Permutation};

/// The operad axioms, in reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `s_k` acts as an involution.
    Involution,
    /// `s_k s_{k+1} s_k = s_{k+1} s_k s_{k+1}`.
    Braid,
    /// `s_j s_k = s_k s_j` for `|j − k| >= 2`.
    FarCommute,
    /// `θ ∘_i 1 = θ = 1 ∘_1 θ`.
    Unit,
    /// `(λ ∘_i μ) ∘_{i−1+j} ν = λ ∘_i (μ ∘_j ν)`.
    Sequential,
    /// `(λ ∘_i μ) ∘_{k−1+m} ν = (λ ∘_k ν) ∘_i μ` for `i < k`.
    Parallel,
    /// `μ ∘_i (ν ∗ σ) = (μ ∘_i ν) ∗ σ′`.
    InnerEquivariance,
    /// `(μ ∗ φ) ∘_i ν = (μ ∘_{φ(i)} ν) ∗ φ″`.
    OuterEquivariance,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Involution => "involution",
            Axiom::Braid => "braid",
            Axiom::FarCommute => "far-commute",
            Axiom::Unit => "unit",
            Axiom::Sequential => "sequential",
            Axiom::Parallel => "parallel",
            Axiom::InnerEquivariance => "inner-equivariance",
            Axiom::OuterEquivariance => "outer-equivariance",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: Axiom,
    /// Arities involved, outermost first.
    pub arities: Vec<usize>,
    /// Slots or generator indices involved.
    pub slots: Vec<usize>,
    /// Basis indices of the witnesses and the two sides that differ.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} arities={:?} slots={:?}: {}",
            self.axiom, self.arities, self.slots, self.detail
        )
    }
}

fn differ(lhs: &[crate::Scalar], rhs: &[crate::Scalar]) -> String {
    format!("{} != {}", linalg::format_vector(lhs), linalg::format_vector(rhs))
}

impl TruncatedOperad {
    /// Checks every axiom on basis elements and adjacent transpositions.
    /// By multilinearity and generation this is complete within the
    /// truncation. An empty result means the data defines an operad.
    pub fn check_axioms(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.check_actions(&mut out);
        self.check_unit(&mut out);
        self.check_sequential(&mut out);
        self.check_parallel(&mut out);
        self.check_inner_equivariance(&mut out);
        self.check_outer_equivariance(&mut out);
        out.sort();
        out
    }

    fn check_actions(&self, out: &mut Vec<Violation>) {
        let f = self.field;
        for n in 2..=self.max_arity {
            let id = Matrix::identity(f, self.dim(n));
            let mats: Vec<&Matrix> = (1..n).map(|k| self.action(n, k)).collect();
            let prod = |a: &Matrix, b: &Matrix| a.mul(b).expect("square matrices");
            for (k0, m) in mats.iter().enumerate() {
                let k = k0 + 1;
                if prod(m, m) != id {
                    out.push(Violation {
                        axiom: Axiom::Involution,
                        arities: vec![n],
                        slots: vec![k],
                        detail: format!("s_{k}^2 acts as {}", prod(m, m)),
                    });
                }
                if k + 1 < n {
                    let next = mats[k0 + 1];
                    let lhs = prod(&prod(m, next), m);
                    let rhs = prod(&prod(next, m), next);
                    if lhs != rhs {
                        out.push(Violation {
                            axiom: Axiom::Braid,
                            arities: vec![n],
                            slots: vec![k, k + 1],
                            detail: differ_m(&lhs, &rhs),
                        });
                    }
                }
                for j in k + 2..n {
                    let other = mats[j - 1];
                    let lhs = prod(m, other);
                    let rhs = prod(other, m);
                    if lhs != rhs {
                        out.push(Violation {
                            axiom: Axiom::FarCommute,
                            arities: vec![n],
                            slots: vec![k, j],
                            detail: differ_m(&lhs, &rhs),
                        });
                    }
                }
            }
        }
    }

    fn check_unit(&self, out: &mut Vec<Violation>) {
        let one = &self.identity;
        for n in 1..=self.max_arity {
            for b in 0..self.dim(n) {
                let theta = self.basis_vector(n, b);
                for i in 1..=n {
                    let r = self.compose_unchecked(n, &theta, i, 1, one);
                    if r != theta {
                        out.push(Violation {
                            axiom: Axiom::Unit,
                            arities: vec![n, 1],
                            slots: vec![i],
                            detail: format!("e{b} ∘_{i} 1: {}", differ(&r, &theta)),
                        });
                    }
                }
                let l = self.compose_unchecked(1, one, 1, n, &theta);
                if l != theta {
                    out.push(Violation {
                        axiom: Axiom::Unit,
                        arities: vec![1, n],
                        slots: vec![1],
                        detail: format!("1 ∘_1 e{b}: {}", differ(&l, &theta)),
                    });
                }
            }
        }
    }

    /// Triples of arities `(l, m, n)` whose double composition fits.
    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let big_n = self.max_arity;
        let mut out = Vec::new();
        for l in 1..=big_n {
            for m in 1..=big_n {
                for n in 1..=big_n {
                    if l + m + n - 2 <= big_n && self.dim(l) > 0 && self.dim(m) > 0 && self.dim(n) > 0 {
                        out.push((l, m, n));
                    }
                }
            }
        }
        out
    }

    fn check_sequential(&self, out: &mut Vec<Violation>) {
        for (l, m, n) in self.triples() {
            for i in 1..=l {
                for j in 1..=m {
                    for a in 0..self.dim(l) {
                        let lam = self.basis_vector(l, a);
                        for b in 0..self.dim(m) {
                            let mu = self.basis_vector(m, b);
                            let lm = self.compose_unchecked(l, &lam, i, m, &mu);
                            for c in 0..self.dim(n) {
                                let nu = self.basis_vector(n, c);
                                let lhs = self.compose_unchecked(l + m - 1, &lm, i - 1 + j, n, &nu);
                                let mn = self.compose_unchecked(m, &mu, j, n, &nu);
                                let rhs = self.compose_unchecked(l, &lam, i, m + n - 1, &mn);
                                if lhs != rhs {
                                    out.push(Violation {
                                        axiom: Axiom::Sequential,
                                        arities: vec![l, m, n],
                                        slots: vec![i, j],
                                        detail: format!("basis ({a},{b},{c}): {}", differ(&lhs, &rhs)),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn check_parallel(&self, out: &mut Vec<Violation>) {
        for (l, m, n) in self.triples() {
            for i in 1..=l {
                for k in i + 1..=l {
                    for a in 0..self.dim(l) {
                        let lam = self.basis_vector(l, a);
                        for b in 0..self.dim(m) {
                            let mu = self.basis_vector(m, b);
                            let lm = self.compose_unchecked(l, &lam, i, m, &mu);
                            for c in 0..self.dim(n) {
                                let nu = self.basis_vector(n, c);
                                let lhs = self.compose_unchecked(l + m - 1, &lm, k - 1 + m, n, &nu);
                                let ln = self.compose_unchecked(l, &lam, k, n, &nu);
                                let rhs = self.compose_unchecked(l + n - 1, &ln, i, m, &mu);
                                if lhs != rhs {
                                    out.push(Violation {
                                        axiom: Axiom::Parallel,
                                        arities: vec![l, m, n],
                                        slots: vec![i, k],
                                        detail: format!("basis ({a},{b},{c}): {}", differ(&lhs, &rhs)),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn check_inner_equivariance(&self, out: &mut Vec<Violation>) {
        for m in 1..=self.max_arity {
            for n in 2..=self.max_arity + 1 - m {
                for i in 1..=m {
                    for k in 1..n {
                        // σ = s_k in slot i becomes s_{i−1+k}
                        let kk = i - 1 + k;
                        for a in 0..self.dim(m) {
                            let mu = self.basis_vector(m, a);
                            for b in 0..self.dim(n) {
                                let nu = self.basis_vector(n, b);
                                let lhs = self.compose_unchecked(m, &mu, i, n, &self.act_adjacent(n, &nu, k));
                                let rhs = self.act_adjacent(m + n - 1, &self.compose_unchecked(m, &mu, i, n, &nu), kk);
                                if lhs != rhs {
                                    out.push(Violation {
                                        axiom: Axiom::InnerEquivariance,
                                        arities: vec![m, n],
                                        slots: vec![i, k],
                                        detail: format!("basis ({a},{b}): {}", differ(&lhs, &rhs)),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn check_outer_equivariance(&self, out: &mut Vec<Violation>) {
        for m in 2..=self.max_arity {
            for n in 1..=self.max_arity + 1 - m {
                for k in 1..m {
                    let phi = Permutation::adjacent(m, k).expect("valid generator");
                    for i in 1..=m {
                        let pp = phi_doubleprime(&phi, i, n).expect("valid slot");
                        for a in 0..self.dim(m) {
                            let mu = self.basis_vector(m, a);
                            let mu_phi = self.act_adjacent(m, &mu, k);
                            for b in 0..self.dim(n) {
                                let nu = self.basis_vector(n, b);
                                let lhs = self.compose_unchecked(m, &mu_phi, i, n, &nu);
                                let inner = self.compose_unchecked(m, &mu, phi.apply(i), n, &nu);
                                let rhs = self.act(m + n - 1, &inner, &pp).expect("valid action");
                                if lhs != rhs {
                                    out.push(Violation {
                                        axiom: Axiom::OuterEquivariance,
                                        arities: vec![m, n],
                                        slots: vec![i, k],
                                        detail: format!("basis ({a},{b}): {}", differ(&lhs, &rhs)),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

fn differ_m(lhs: &Matrix, rhs: &Matrix) -> String {
    format!("{lhs} != {rhs}")
}
