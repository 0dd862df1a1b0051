use std::fmt;

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Vector};

/// Identities checked on basis elements, in reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `1·x = x = x·1`.
    Unit,
    /// `(xy)z = x(yz)`.
    Associativity,
    /// `a(bc) = a(cb)` for `deg a >= 1`.
    Perm,
    /// Left multiplication preserves the even and odd parts of `A_{>=1}`.
    LeftTypeIdeal,
    /// Right multiplication preserves the typed parts of `A_{>=2}`.
    RightTypeIdeal,
    /// `x(yz) = a(y,z) x(zy)` for `deg x >= 2`.
    SignedPerm,
    /// `(((xy)Ξ)z)Ξ = (((xΞ)z)Ξ)y` for `x ∈ A_1`, `y, z ∈ A_0`.
    XiDegreeZero,
    /// `((xy)Ξ)z = ((xΞ)z)y` for `x ∈ A_1`, `y ∈ A_0`, `deg z >= 1`.
    XiRightDegreeZero,
    /// `(xy)z = (((xΞ)z)Ξ)y` for `x ∈ A_1`, `z ∈ A_0`, `deg y >= 1`.
    XiMiddleDegreeZero,
    /// The signed exchange `(xy)z ~ ((xΞ)z)y` for `x ∈ A_1`, `deg y, deg z >= 1`.
    XiExchange,
    /// The even and odd parts of `A_{>=1}` are two-sided ideals.
    TypeIdeal,
    /// `yz = (−1)^{deg y deg z t(y) t(z)} zy`.
    SignedCommutativity,
    /// `yz = (−1)^{deg y deg z} zy`.
    GradedCommutativity,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Unit => "unit",
            Rule::Associativity => "associativity",
            Rule::Perm => "perm",
            Rule::LeftTypeIdeal => "left-type-ideal",
            Rule::RightTypeIdeal => "right-type-ideal",
            Rule::SignedPerm => "signed-perm",
            Rule::XiDegreeZero => "xi-degree-zero",
            Rule::XiRightDegreeZero => "xi-right-degree-zero",
            Rule::XiMiddleDegreeZero => "xi-middle-degree-zero",
            Rule::XiExchange => "xi-exchange",
            Rule::TypeIdeal => "type-ideal",
            Rule::SignedCommutativity => "signed-commutativity",
            Rule::GradedCommutativity => "graded-commutativity",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraViolation {
    pub rule: Rule,
    /// Degrees of the basis elements involved.
    pub degrees: Vec<usize>,
    /// Basis indices of the elements involved.
    pub basis: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} degrees={:?} basis={:?}: {}",
            self.rule, self.degrees, self.basis, self.detail
        )
    }
}

fn sign(negative: bool) -> i64 {
    if negative {
        -1
    } else {
        1
    }
}

impl GradedAlgebra {
    fn push_if_differ(
        &self,
        out: &mut Vec<AlgebraViolation>,
        rule: Rule,
        degrees: Vec<usize>,
        basis: Vec<usize>,
        lhs: &[Scalar],
        rhs: &[Scalar],
    ) {
        if lhs != rhs {
            out.push(AlgebraViolation {
                rule,
                degrees,
                basis,
                detail: format!("{} != {}", linalg::format_vector(lhs), linalg::format_vector(rhs)),
            });
        }
    }

    /// All basis elements as `(degree, index)`.
    fn basis_elements(&self) -> Vec<(usize, usize)> {
        (0..=self.max_degree)
            .flat_map(|i| (0..self.dim(i)).map(move |b| (i, b)))
            .collect()
    }

    /// Unit law and associativity within the truncation.
    pub fn check_associativity(&self) -> Vec<AlgebraViolation> {
        let mut out = Vec::new();
        for (i, a) in self.basis_elements() {
            let x = self.basis_vector(i, a);
            let l = self.mul(0, &self.unit, i, &x);
            let r = self.mul(i, &x, 0, &self.unit);
            self.push_if_differ(&mut out, Rule::Unit, vec![0, i], vec![a], &l, &x);
            self.push_if_differ(&mut out, Rule::Unit, vec![i, 0], vec![a], &r, &x);
        }
        let elems = self.basis_elements();
        for &(i, a) in &elems {
            let x = self.basis_vector(i, a);
            for &(j, b) in &elems {
                if i + j > self.max_degree {
                    continue;
                }
                let y = self.basis_vector(j, b);
                let xy = self.mul(i, &x, j, &y);
                for &(k, c) in &elems {
                    if i + j + k > self.max_degree {
                        continue;
                    }
                    let z = self.basis_vector(k, c);
                    let lhs = self.mul(i + j, &xy, k, &z);
                    let rhs = self.mul(i, &x, j + k, &self.mul(j, &y, k, &z));
                    self.push_if_differ(&mut out, Rule::Associativity, vec![i, j, k], vec![a, b, c], &lhs, &rhs);
                }
            }
        }
        out.sort();
        out
    }

    /// Associativity, unit, and `a(bc) = a(cb)` for `deg a >= 1`.
    pub fn check_gperm(&self) -> Vec<AlgebraViolation> {
        let mut out = self.check_associativity();
        let elems = self.basis_elements();
        for &(i, a) in elems.iter().filter(|(i, _)| *i >= 1) {
            let x = self.basis_vector(i, a);
            for &(j, b) in &elems {
                for &(k, c) in &elems {
                    if i + j + k > self.max_degree || (j, b) >= (k, c) {
                        continue;
                    }
                    let y = self.basis_vector(j, b);
                    let z = self.basis_vector(k, c);
                    let lhs = self.mul(i, &x, j + k, &self.mul(j, &y, k, &z));
                    let rhs = self.mul(i, &x, j + k, &self.mul(k, &z, j, &y));
                    self.push_if_differ(&mut out, Rule::Perm, vec![i, j, k], vec![a, b, c], &lhs, &rhs);
                }
            }
        }
        out.sort();
        out
    }

    /// Whether `v ∈ A_i` lies in the part of type `odd` (`i >= 1`).
    fn has_type(&self, i: usize, v: &[Scalar], odd: bool) -> bool {
        let flags = &self.typing.as_ref().expect("typed")[i];
        v.iter().zip(flags).all(|(s, &f)| s.is_zero() || f == odd)
    }

    fn typed_elements(&self, min_degree: usize) -> Vec<(usize, usize, bool)> {
        let typing = self.typing.as_ref().expect("typed");
        (min_degree.max(1)..=self.max_degree)
            .flat_map(|i| (0..self.dim(i)).map(move |b| (i, b, typing[i][b])))
            .collect()
    }

    fn check_type_stability(&self, out: &mut Vec<AlgebraViolation>, rule: Rule, left: bool, min_degree: usize) {
        for (j, b, odd) in self.typed_elements(min_degree) {
            let y = self.basis_vector(j, b);
            for (i, a) in self.basis_elements() {
                if i + j > self.max_degree {
                    continue;
                }
                let x = self.basis_vector(i, a);
                let (prod, degrees, basis) = if left {
                    (self.mul(i, &x, j, &y), vec![i, j], vec![a, b])
                } else {
                    (self.mul(j, &y, i, &x), vec![j, i], vec![b, a])
                };
                if !self.has_type(i + j, &prod, odd) {
                    out.push(AlgebraViolation {
                        rule,
                        degrees,
                        basis,
                        detail: format!(
                            "product {} leaves the {} part",
                            linalg::format_vector(&prod),
                            if odd { "odd" } else { "even" }
                        ),
                    });
                }
            }
        }
    }

    /// The pseudo-graded-Perm axioms on basis elements, plus associativity.
    pub fn check_pgperm(&self) -> Result<Vec<AlgebraViolation>> {
        if self.typing.is_none() {
            return Err(Error::MissingTyping);
        }
        let f = self.field;
        let mut out = self.check_associativity();
        self.check_type_stability(&mut out, Rule::LeftTypeIdeal, true, 1);
        self.check_type_stability(&mut out, Rule::RightTypeIdeal, false, 2);

        let elems = self.basis_elements();
        let t = |i: usize, b: usize| self.t(i, b).expect("typed");
        // x(yz) = a(y,z) x(zy), deg x >= 2
        for &(i, a) in elems.iter().filter(|(i, _)| *i >= 2) {
            let x = self.basis_vector(i, a);
            for &(j, b) in &elems {
                for &(k, c) in &elems {
                    if i + j + k > self.max_degree {
                        continue;
                    }
                    let y = self.basis_vector(j, b);
                    let z = self.basis_vector(k, c);
                    let both_odd = t(j, b) == 1 && t(k, c) == 1 && j % 2 == 1 && k % 2 == 1;
                    let lhs = self.mul(i, &x, j + k, &self.mul(j, &y, k, &z));
                    let rhs = linalg::scale(&self.mul(i, &x, j + k, &self.mul(k, &z, j, &y)), &f.int(sign(both_odd)));
                    self.push_if_differ(&mut out, Rule::SignedPerm, vec![i, j, k], vec![a, b, c], &lhs, &rhs);
                }
            }
        }

        if self.max_degree >= 1 {
            let xi = |v: &[Scalar]| self.xi(v).expect("typed");
            for x_idx in 0..self.dim(1) {
                let x = self.basis_vector(1, x_idx);
                let x_xi = xi(&x);
                for y_idx in 0..self.dim(0) {
                    let y = self.basis_vector(0, y_idx);
                    for z_idx in 0..self.dim(0) {
                        let z = self.basis_vector(0, z_idx);
                        let lhs = xi(&self.mul(1, &xi(&self.mul(1, &x, 0, &y)), 0, &z));
                        let rhs = self.mul(1, &xi(&self.mul(1, &x_xi, 0, &z)), 0, &y);
                        self.push_if_differ(&mut out, Rule::XiDegreeZero, vec![1, 0, 0], vec![x_idx, y_idx, z_idx], &lhs, &rhs);
                    }
                }
                for (k, c, _) in self.typed_elements(1) {
                    if 1 + k > self.max_degree {
                        continue;
                    }
                    let w = self.basis_vector(k, c);
                    for d_idx in 0..self.dim(0) {
                        let d = self.basis_vector(0, d_idx);
                        // y = d in degree 0, z = w
                        let lhs = self.mul(1, &xi(&self.mul(1, &x, 0, &d)), k, &w);
                        let rhs = self.mul(1 + k, &self.mul(1, &x_xi, k, &w), 0, &d);
                        self.push_if_differ(&mut out, Rule::XiRightDegreeZero, vec![1, 0, k], vec![x_idx, d_idx, c], &lhs, &rhs);
                        // z = d in degree 0, y = w
                        let lhs = self.mul(1 + k, &self.mul(1, &x, k, &w), 0, &d);
                        let rhs = self.mul(1, &xi(&self.mul(1, &x_xi, 0, &d)), k, &w);
                        self.push_if_differ(&mut out, Rule::XiMiddleDegreeZero, vec![1, k, 0], vec![x_idx, c, d_idx], &lhs, &rhs);
                    }
                }
                for (j, b, ty) in self.typed_elements(1) {
                    let y = self.basis_vector(j, b);
                    for (k, c, tz) in self.typed_elements(1) {
                        if 1 + j + k > self.max_degree {
                            continue;
                        }
                        let z = self.basis_vector(k, c);
                        let left_sign = ty && (k * (j - 1)) % 2 == 1;
                        let right_sign = tz && (k - 1) % 2 == 1;
                        let lhs = linalg::scale(&self.mul(1 + j, &self.mul(1, &x, j, &y), k, &z), &f.int(sign(left_sign)));
                        let rhs = linalg::scale(&self.mul(1 + k, &self.mul(1, &x_xi, k, &z), j, &y), &f.int(sign(right_sign)));
                        self.push_if_differ(&mut out, Rule::XiExchange, vec![1, j, k], vec![x_idx, b, c], &lhs, &rhs);
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The pseudo-graded-commutative axioms on basis elements, plus
    /// associativity.
    pub fn check_pgc(&self) -> Result<Vec<AlgebraViolation>> {
        if self.typing.is_none() {
            return Err(Error::MissingTyping);
        }
        let mut out = self.check_associativity();
        self.check_type_stability(&mut out, Rule::TypeIdeal, true, 1);
        self.check_type_stability(&mut out, Rule::TypeIdeal, false, 1);
        let t = |i: usize, b: usize| self.t(i, b).expect("typed");
        self.check_commutation(&mut out, Rule::SignedCommutativity, &|i, a, j, b| {
            (i * j) % 2 == 1 && t(i, a) == 1 && t(j, b) == 1
        });
        out.sort();
        Ok(out)
    }

    /// `yz = (−1)^{deg y deg z} zy` on basis elements.
    pub fn check_graded_commutative(&self) -> Vec<AlgebraViolation> {
        let mut out = Vec::new();
        self.check_commutation(&mut out, Rule::GradedCommutativity, &|i, _, j, _| (i * j) % 2 == 1);
        out
    }

    /// `yz = zy` on basis elements.
    pub fn is_commutative(&self) -> bool {
        let mut out = Vec::new();
        self.check_commutation(&mut out, Rule::GradedCommutativity, &|_, _, _, _| false);
        out.is_empty()
    }

    fn check_commutation(
        &self,
        out: &mut Vec<AlgebraViolation>,
        rule: Rule,
        negative: &dyn Fn(usize, usize, usize, usize) -> bool,
    ) {
        let elems = self.basis_elements();
        for &(i, a) in &elems {
            for &(j, b) in &elems {
                if i + j > self.max_degree || (i, a) > (j, b) {
                    continue;
                }
                let y = self.basis_vector(i, a);
                let z = self.basis_vector(j, b);
                let lhs = self.mul(i, &y, j, &z);
                let rhs: Vector = linalg::scale(&self.mul(j, &z, i, &y), &self.field.int(sign(negative(i, a, j, b))));
                self.push_if_differ(out, rule, vec![i, j], vec![a, b], &lhs, &rhs);
            }
        }
    }
}
