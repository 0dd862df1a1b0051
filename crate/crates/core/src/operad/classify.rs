use std::fmt;

use super::TruncatedOperad;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// How `Σ_n` acts on one component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArityClass {
    Zero,
    SigmaTrivial,
    SigmaSign,
    /// Trivial on the alternating group, with both trivial and sign parts.
    ATrivialMixed,
    NotATrivial,
}

impl ArityClass {
    pub fn name(self) -> &'static str {
        match self {
            ArityClass::Zero => "zero",
            ArityClass::SigmaTrivial => "sigma_trivial",
            ArityClass::SigmaSign => "sigma_sign",
            ArityClass::ATrivialMixed => "A_trivial_mixed",
            ArityClass::NotATrivial => "not_A_trivial",
        }
    }

    fn is_sigma_trivial(self) -> bool {
        matches!(self, ArityClass::Zero | ArityClass::SigmaTrivial)
    }

    fn is_a_trivial(self) -> bool {
        self != ArityClass::NotATrivial
    }
}

impl fmt::Display for ArityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-arity classes (entry `n−1` for arity `n`) and global flags. Arity 1
/// carries no action and is reported as `SigmaTrivial`; the global flags
/// only look at arities `>= 2`. In characteristic 2 the sign and trivial
/// representations coincide and are reported as `SigmaTrivial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub classes: Vec<ArityClass>,
    pub sigma_trivial: bool,
    pub sigma_sign: bool,
    pub a_trivial: bool,
    /// Least `w >= 2` such that every arity in `w..=N` is Σ-trivial.
    pub almost_sigma_trivial: Option<usize>,
    /// Least `w >= 2` such that every arity in `w..=N` is 𝔸-trivial.
    pub almost_a_trivial: Option<usize>,
}

impl TruncatedOperad {
    pub fn classify_arity(&self, n: usize) -> ArityClass {
        let d = self.dim(n);
        if d == 0 {
            return ArityClass::Zero;
        }
        if n == 1 {
            return ArityClass::SigmaTrivial;
        }
        let f = self.field;
        let id = Matrix::identity(f, d);
        let minus = Matrix::scalar_identity(f, d, &f.int(-1));
        let mats: Vec<&Matrix> = (1..n).map(|k| self.action(n, k)).collect();
        if mats.iter().all(|m| **m == id) {
            return ArityClass::SigmaTrivial;
        }
        if mats.iter().all(|m| **m == minus) {
            return ArityClass::SigmaSign;
        }
        // s_1 s_k for k >= 2 generate the alternating group
        let a_trivial = mats[1..]
            .iter()
            .all(|m| mats[0].mul(m).expect("square") == id);
        if a_trivial {
            ArityClass::ATrivialMixed
        } else {
            ArityClass::NotATrivial
        }
    }

    pub fn classify_symmetry(&self) -> SymmetryReport {
        let big_n = self.max_arity;
        let classes: Vec<ArityClass> = (1..=big_n).map(|n| self.classify_arity(n)).collect();
        let higher = &classes[1.min(classes.len())..];
        let sign_ok = |c: ArityClass| {
            matches!(c, ArityClass::Zero | ArityClass::SigmaSign)
                || (self.field.characteristic() == 2 && c == ArityClass::SigmaTrivial)
        };
        let least_window = |pred: &dyn Fn(ArityClass) -> bool| {
            (2..=big_n).find(|&w| classes[w - 1..].iter().all(|&c| pred(c)))
        };
        SymmetryReport {
            sigma_trivial: higher.iter().all(|c| c.is_sigma_trivial()),
            sigma_sign: higher.iter().all(|&c| sign_ok(c)),
            a_trivial: higher.iter().all(|c| c.is_a_trivial()),
            almost_sigma_trivial: least_window(&|c| c.is_sigma_trivial()),
            almost_a_trivial: least_window(&|c| c.is_a_trivial()),
            classes,
        }
    }

    /// `(P(n)_triv, P(n)_sign)`, the images of `(1 ± s_1)/2`.
    pub fn triv_sign_split(&self, n: usize) -> Result<(Subspace, Subspace)> {
        if self.field.characteristic() == 2 {
            return Err(Error::CharTwo);
        }
        if n < 2 || n > self.max_arity {
            return Err(Error::Invalid(format!(
                "the trivial/sign split needs 2 <= n <= {}, got {n}",
                self.max_arity
            )));
        }
        if !self.classify_arity(n).is_a_trivial() {
            return Err(Error::NotATrivial(n));
        }
        let f = self.field;
        let d = self.dim(n);
        let id = Matrix::identity(f, d);
        let s = self.action(n, 1);
        let mut plus = Matrix::zeros(f, d, d);
        let mut minus = Matrix::zeros(f, d, d);
        for r in 0..d {
            for c in 0..d {
                plus.set(r, c, id.get(r, c) + s.get(r, c));
                minus.set(r, c, id.get(r, c) - s.get(r, c));
            }
        }
        Ok((Subspace::row_space(&plus), Subspace::row_space(&minus)))
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::field::Field;

    use super::*;

    #[test]
    fn com_and_ope() {
        let f = Field::Rational;
        let com = catalog::build_com(f, 5).unwrap().classify_symmetry();
        assert!(com.sigma_trivial && com.a_trivial && !com.sigma_sign);
        let ope = catalog::build_ope(f, 7).unwrap().classify_symmetry();
        assert!(ope.sigma_sign && ope.a_trivial && !ope.sigma_trivial);
        assert_eq!(ope.classes[1], ArityClass::Zero);
        assert_eq!(ope.classes[2], ArityClass::SigmaSign);
    }

    #[test]
    fn split_dimensions() {
        let f = Field::Rational;
        let ope = catalog::build_ope(f, 5).unwrap();
        let (t, s) = ope.triv_sign_split(3).unwrap();
        assert_eq!((t.dim(), s.dim()), (0, 1));
        let com = catalog::build_com(f, 5).unwrap();
        let (t, s) = com.triv_sign_split(3).unwrap();
        assert_eq!((t.dim(), s.dim()), (1, 0));
        let com2 = catalog::build_com(Field::prime(2).unwrap(), 3).unwrap();
        assert_eq!(com2.triv_sign_split(2), Err(Error::CharTwo));
    }
}
