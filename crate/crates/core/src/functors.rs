//! Functors between operads and graded algebras, and round-trip diffs.
//!
//! All functors keep bases: `P(n)` and `A_{n−1}` share their basis, so a
//! round trip can be compared structure constant by structure constant.

use std::fmt;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Vector};
use crate::operad::TruncatedOperad;

fn require_valid(p: &TruncatedOperad) -> Result<()> {
    match p.check_axioms().first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidOperad(v.to_string())),
    }
}

/// The algebra with `A_i = P(i+1)` and `x·y = x ∘_1 y`.
pub fn forget_f(p: &TruncatedOperad) -> Result<GradedAlgebra> {
    require_valid(p)?;
    Ok(forget_unchecked(p))
}

fn forget_unchecked(p: &TruncatedOperad) -> GradedAlgebra {
    let n = p.max_arity();
    let dims: Vec<usize> = (1..=n).map(|k| p.dim(k)).collect();
    let mut a = GradedAlgebra::new(p.field(), &dims).expect("nonempty dims");
    a.set_unit(p.identity().clone()).expect("identity has arity 1");
    for i in 0..n {
        for j in 0..n - i {
            for x in 0..p.dim(i + 1) {
                for y in 0..p.dim(j + 1) {
                    let v = p.composition_of_basis(i + 1, j + 1, 1, x, y).clone();
                    a.set_product(i, j, x, y, v).expect("within truncation");
                }
            }
        }
    }
    a
}

/// Skeleton operad on `P(n) = A_{n−1}` with identity `1_A`, filled by
/// `compose(m, i, n, a, b)`.
fn operad_on(a: &GradedAlgebra, compose: impl Fn(usize, usize, usize, usize, usize) -> Vector) -> TruncatedOperad {
    let dims: Vec<usize> = (0..=a.max_degree()).map(|i| a.dim(i)).collect();
    let mut p = TruncatedOperad::new(a.field(), &dims).expect("nonempty dims");
    p.set_identity(a.unit().clone()).expect("unit lives in degree 0");
    let top = p.max_arity();
    for m in 1..=top {
        for n in 1..=top + 1 - m {
            for i in 1..=m {
                for x in 0..a.dim(m - 1) {
                    for y in 0..a.dim(n - 1) {
                        p.set_composition(m, n, i, x, y, compose(m, i, n, x, y))
                            .expect("within truncation");
                    }
                }
            }
        }
    }
    p
}

/// The Σ-trivial operad with `P(n) = A_{n−1}` and `x ∘_i y = xy`.
pub fn g_sigma_triv(a: &GradedAlgebra) -> Result<TruncatedOperad> {
    if let Some(v) = a.check_gperm().first() {
        return Err(Error::NotGPerm(v.to_string()));
    }
    Ok(operad_on(a, |m, _, n, x, y| a.product_of_basis(m - 1, n - 1, x, y).clone()))
}

/// The 𝔸-trivial operad of a PGPerm algebra: even basis vectors span the
/// trivial part, odd ones the sign part, and compositions are the products
/// twisted by the type signs.
pub fn g_a_triv(a: &GradedAlgebra) -> Result<TruncatedOperad> {
    if a.field().characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    if let Some(v) = a.check_pgperm()?.first() {
        return Err(Error::NotPGPerm(v.to_string()));
    }
    let f = a.field();
    let t = |deg: usize, b: usize| a.t(deg, b).expect("typed") as usize;
    let signed = |v: &Vector, negative: bool| if negative { linalg::scale(v, &f.int(-1)) } else { v.clone() };
    let xi = |v: &Vector| a.xi(v).expect("typed");
    let mut p = operad_on(a, |m, i, n, x, y| {
        let prod = a.product_of_basis(m - 1, n - 1, x, y);
        match m {
            1 => prod.clone(),
            2 if i == 1 => prod.clone(),
            2 => {
                let x_xi = xi(&a.basis_vector(1, x));
                let w = a.mul(1, &x_xi, n - 1, &a.basis_vector(n - 1, y));
                if n == 1 {
                    xi(&w)
                } else {
                    signed(&w, (n * t(n - 1, y)) % 2 == 1)
                }
            }
            _ => signed(prod, ((n - 1) * (i - 1) * t(m - 1, x)) % 2 == 1),
        }
    });
    for n in 2..=p.max_arity() {
        let diag: Vec<Scalar> = (0..a.dim(n - 1))
            .map(|b| f.sign(t(n - 1, b) == 1))
            .collect();
        for k in 1..n {
            p.set_action(n, k, Matrix::diagonal(f, &diag))?;
        }
    }
    Ok(p)
}

/// `G_𝔸triv` applied to `A` typed entirely odd; `A` must be graded
/// commutative.
pub fn g_sigma_sign(a: &GradedAlgebra) -> Result<TruncatedOperad> {
    if let Some(v) = a.check_graded_commutative().first() {
        return Err(Error::NotCommutative(v.to_string()));
    }
    g_a_triv(&a.with_typing(a.uniform_typing(true))?)
}

/// Per-arity basis changes (`None` where the basis already splits) that
/// put the trivial part first and the sign part second, together with the
/// odd flags of the new basis. Requires an 𝔸-trivial operad.
pub fn split_bases(p: &TruncatedOperad) -> Result<(Vec<Option<Matrix>>, Vec<Vec<bool>>)> {
    if p.field().characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    let f = p.field();
    let mut bases = vec![None, None];
    let mut odd = vec![Vec::new()];
    for n in 2..=p.max_arity() {
        let (triv, sign) = p.triv_sign_split(n)?;
        let s = p.action(n, 1);
        let d = p.dim(n);
        let aligned = (0..d).all(|r| {
            (0..d).all(|c| {
                let v = s.get(r, c);
                if r == c {
                    v.is_one() || v == &f.int(-1)
                } else {
                    v.is_zero()
                }
            })
        });
        if aligned {
            bases.push(None);
            odd.push((0..d).map(|b| !s.get(b, b).is_one()).collect());
        } else {
            let mut rows = triv.basis_vectors();
            rows.extend(sign.basis_vectors());
            bases.push(Some(Matrix::from_rows(f, d, rows)?));
            odd.push((0..d).map(|b| b >= triv.dim()).collect());
        }
    }
    Ok((bases, odd))
}

/// `F(P)` typed by the trivial/sign split of each arity. When an action is
/// not already diagonal the affected arities are rebased first (trivial
/// part, then sign part).
pub fn f_a_triv(p: &TruncatedOperad) -> Result<GradedAlgebra> {
    if p.field().characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    require_valid(p)?;
    let (bases, odd) = split_bases(p)?;
    let rebased = if bases.iter().any(Option::is_some) {
        p.change_basis(&bases)?
    } else {
        p.clone()
    };
    // odd[k] describes arity k + 1, which is algebra degree k
    forget_unchecked(&rebased).with_typing(odd)
}

/// One mismatched piece of structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub location: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.location, self.expected, self.found)
    }
}

/// Differences between two objects, empty when the structure constants
/// agree exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureDiff {
    pub differences: Vec<Difference>,
}

impl StructureDiff {
    pub fn is_empty(&self) -> bool {
        self.differences.is_empty()
    }

    fn note(&mut self, location: String, expected: &impl fmt::Debug, found: &impl fmt::Debug) {
        self.differences.push(Difference {
            location,
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        });
    }

    fn vectors(&mut self, location: impl FnOnce() -> String, expected: &[Scalar], found: &[Scalar]) {
        if expected != found {
            self.differences.push(Difference {
                location: location(),
                expected: linalg::format_vector(expected),
                found: linalg::format_vector(found),
            });
        }
    }
}

pub fn diff_operads(expected: &TruncatedOperad, found: &TruncatedOperad) -> StructureDiff {
    let mut d = StructureDiff::default();
    if expected.field() != found.field() {
        d.note("field".into(), &expected.field().to_string(), &found.field().to_string());
    }
    if expected.dims() != found.dims() {
        d.note("dims".into(), &expected.dims(), &found.dims());
        return d;
    }
    d.vectors(|| "identity".into(), expected.identity(), found.identity());
    for n in 2..=expected.max_arity() {
        for k in 1..n {
            if expected.action(n, k) != found.action(n, k) {
                d.note(
                    format!("action of s_{k} on arity {n}"),
                    &expected.action(n, k).to_string(),
                    &found.action(n, k).to_string(),
                );
            }
        }
    }
    for (m, n, i) in expected.composition_keys() {
        for a in 0..expected.dim(m) {
            for b in 0..expected.dim(n) {
                d.vectors(
                    || format!("e{a} ∘_{i} e{b} in arities ({m}, {n})"),
                    expected.composition_of_basis(m, n, i, a, b),
                    found.composition_of_basis(m, n, i, a, b),
                );
            }
        }
    }
    d
}

pub fn diff_algebras(expected: &GradedAlgebra, found: &GradedAlgebra) -> StructureDiff {
    let mut d = StructureDiff::default();
    if expected.field() != found.field() {
        d.note("field".into(), &expected.field().to_string(), &found.field().to_string());
    }
    if expected.dims() != found.dims() {
        d.note("dims".into(), &expected.dims(), &found.dims());
        return d;
    }
    d.vectors(|| "unit".into(), expected.unit(), found.unit());
    for (i, j) in expected.product_keys() {
        for a in 0..expected.dim(i) {
            for b in 0..expected.dim(j) {
                d.vectors(
                    || format!("e{a}·e{b} in degrees ({i}, {j})"),
                    expected.product_of_basis(i, j, a, b),
                    found.product_of_basis(i, j, a, b),
                );
            }
        }
    }
    if expected.typing() != found.typing() {
        d.note("typing".into(), &expected.typing(), &found.typing());
    }
    d
}

/// `A` against `F(G_Σtriv(A))`, ignoring any typing of `A`.
pub fn roundtrip_gperm(a: &GradedAlgebra) -> Result<StructureDiff> {
    let back = forget_unchecked(&g_sigma_triv(a)?);
    Ok(diff_algebras(&a.without_typing(), &back))
}

/// `P` against `G_Σtriv(F(P))`.
pub fn roundtrip_sigma_trivial(p: &TruncatedOperad) -> Result<StructureDiff> {
    let back = g_sigma_triv(&forget_f(p)?)?;
    Ok(diff_operads(p, &back))
}

/// `A` against `F_𝔸triv(G_𝔸triv(A))`, typing included.
pub fn roundtrip_pgperm(a: &GradedAlgebra) -> Result<StructureDiff> {
    let back = f_a_triv(&g_a_triv(a)?)?;
    Ok(diff_algebras(a, &back))
}

/// `P` against `G_𝔸triv(F_𝔸triv(P))`. If some action is not diagonal in
/// the given basis, `P` is first rebased to the split basis `F_𝔸triv`
/// uses, and the comparison is made there.
pub fn roundtrip_a_trivial(p: &TruncatedOperad) -> Result<StructureDiff> {
    let back = g_a_triv(&f_a_triv(p)?)?;
    let (bases, _) = split_bases(p)?;
    let reference = if bases.iter().any(Option::is_some) {
        p.change_basis(&bases)?
    } else {
        p.clone()
    };
    Ok(diff_operads(&reference, &back))
}

/// A failed instance of the signed commutation identities of a left
/// torsionfree 𝔸-trivial operad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationFailure {
    pub identity: &'static str,
    /// Arity and basis index of `μ`.
    pub mu: (usize, usize),
    /// Arity and basis index of `ν`.
    pub nu: (usize, usize),
    pub slot: usize,
}

impl fmt::Display for CommutationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails for mu={:?} nu={:?} slot {}",
            self.identity, self.mu, self.nu, self.slot
        )
    }
}

/// Checks, on the homogeneous basis of the split, that
/// `μ ∘_1 ν = (−1)^{(Ar μ−1)(Ar ν−1)t(μ)t(ν)} ν ∘_1 μ`,
/// `μ ∘_i ν = (−1)^{(Ar ν−1)(i−1)t(μ)t(ν)} μ ∘_1 ν`, and that compositions
/// of a trivial element with a sign element vanish in either order.
pub fn signed_commutation_failures(p: &TruncatedOperad) -> Result<Vec<CommutationFailure>> {
    let (bases, odd) = split_bases(p)?;
    let q = if bases.iter().any(Option::is_some) {
        p.change_basis(&bases)?
    } else {
        p.clone()
    };
    let f = q.field();
    let t = |n: usize, b: usize| if n == 1 { 0 } else { usize::from(odd[n - 1][b]) };
    let top = q.max_arity();
    let mut out = Vec::new();
    for m in 1..=top {
        for n in 1..=top + 1 - m {
            for a in 0..q.dim(m) {
                for b in 0..q.dim(n) {
                    let fail = |identity, slot| CommutationFailure {
                        identity,
                        mu: (m, a),
                        nu: (n, b),
                        slot,
                    };
                    let (mu, nu) = (q.basis_vector(m, a), q.basis_vector(n, b));
                    let first = q.compose(m, &mu, 1, n, &nu)?;
                    let ts = t(m, a) * t(n, b);
                    let swapped = q.compose(n, &nu, 1, m, &mu)?;
                    let sign = f.sign(((m - 1) * (n - 1) * ts) % 2 == 1);
                    if first != linalg::scale(&swapped, &sign) {
                        out.push(fail("first-slot commutation", 1));
                    }
                    for i in 1..=m {
                        let v = q.compose(m, &mu, i, n, &nu)?;
                        let sign = f.sign(((n - 1) * (i - 1) * ts) % 2 == 1);
                        if v != linalg::scale(&first, &sign) {
                            out.push(fail("slot independence", i));
                        }
                        if m >= 2 && n >= 2 && t(m, a) != t(n, b) && !linalg::is_zero(&v) {
                            out.push(fail("mixed types vanish", i));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
