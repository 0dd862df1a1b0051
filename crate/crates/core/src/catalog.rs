//! Concrete operads and algebras with fixed, documented basis orderings.

use std::collections::BTreeMap;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::operad::TruncatedOperad;

/// One-dimensional in every arity with trivial action: `μ_m ∘_i μ_n = μ_{m+n−1}`.
pub fn build_com(field: Field, max_arity: usize) -> Result<TruncatedOperad> {
    build_monomial_operad(field, max_arity, |_| true, false)
}

/// `μ_n` in each odd arity, acted on by the sign, with `μ_m ∘_i μ_n = μ_{m+n−1}`.
pub fn build_ope(field: Field, max_arity: usize) -> Result<TruncatedOperad> {
    build_monomial_operad(field, max_arity, |n| n % 2 == 1, true)
}

fn build_monomial_operad(
    field: Field,
    max_arity: usize,
    present: impl Fn(usize) -> bool,
    sign_action: bool,
) -> Result<TruncatedOperad> {
    if max_arity == 0 {
        return Err(Error::InvalidOperad("max arity must be at least 1".into()));
    }
    let dims: Vec<usize> = (1..=max_arity).map(|n| usize::from(present(n))).collect();
    let mut p = TruncatedOperad::new(field, &dims)?;
    p.set_identity(vec![field.one()])?;
    if sign_action {
        for n in (3..=max_arity).filter(|&n| present(n)) {
            for k in 1..n {
                p.set_action(n, k, Matrix::scalar_identity(field, 1, &field.int(-1)))?;
            }
        }
    }
    for m in (1..=max_arity).filter(|&m| present(m)) {
        for n in (1..=max_arity + 1 - m).filter(|&n| present(n)) {
            for i in 1..=m {
                p.set_composition(m, n, i, 0, 0, vec![field.one()])?;
            }
        }
    }
    Ok(p)
}

/// Builds an algebra from a monomial basis per degree; `basis[0][0]` must be
/// the unit. `mul` returns the product monomial and whether it is negated,
/// or `None` for zero.
fn from_monomials<M: Ord + Clone>(
    field: Field,
    basis: Vec<Vec<M>>,
    degree: impl Fn(&M) -> usize,
    mul: impl Fn(&M, &M) -> Option<(M, bool)>,
) -> Result<GradedAlgebra> {
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let index: Vec<BTreeMap<M, usize>> = basis
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect())
        .collect();
    let mut a = GradedAlgebra::new(field, &dims)?;
    a.set_unit(a.basis_vector(0, 0))?;
    let max_degree = dims.len() - 1;
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            for (x, mx) in basis[i].iter().enumerate() {
                for (y, my) in basis[j].iter().enumerate() {
                    if let Some((m, negative)) = mul(mx, my) {
                        debug_assert_eq!(degree(&m), i + j);
                        let c = index[i + j][&m];
                        a.set_product_entry((i, j), x, y, c, field.int(if negative { -1 } else { 1 }))?;
                    }
                }
            }
        }
    }
    Ok(a)
}

/// `k[x]` with `deg x = generator_degree`, untyped.
pub fn polynomial(field: Field, generator_degree: usize, max_degree: usize) -> Result<GradedAlgebra> {
    if generator_degree == 0 {
        return Err(Error::InvalidAlgebra("generator degree must be positive".into()));
    }
    let basis = (0..=max_degree)
        .map(|d| if d % generator_degree == 0 { vec![d] } else { Vec::new() })
        .collect();
    from_monomials(field, basis, |&d| d, |&a, &b| Some((a + b, false)))
}

/// The free associative algebra on `generators` letters of degree 1;
/// degree `d` has the words of length `d` in lexicographic order.
pub fn free_associative(field: Field, generators: usize, max_degree: usize) -> Result<GradedAlgebra> {
    let mut basis: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for d in 1..=max_degree {
        let next = basis[d - 1]
            .iter()
            .flat_map(|w| {
                (0..generators).map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
        basis.push(next);
    }
    from_monomials(field, basis, Vec::len, |a, b| {
        let mut w = a.clone();
        w.extend_from_slice(b);
        Some((w, false))
    })
}

/// A monomial `x_S y^e` of the Massey algebra: `S` an increasing list of
/// odd degree-1 generators, `e` the exponents of the degree-2 generators.
type MasseyMonomial = (Vec<usize>, Vec<usize>);

fn massey_monomials(a: usize, b: usize, degree: usize) -> Vec<MasseyMonomial> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << a) {
        let s: Vec<usize> = (0..a).filter(|&i| mask & (1 << i) != 0).collect();
        if s.len() > degree || !(degree - s.len()).is_multiple_of(2) {
            continue;
        }
        let mut exps = Vec::new();
        compositions((degree - s.len()) / 2, b, &mut Vec::new(), &mut exps);
        out.extend(exps.into_iter().map(|e| (s.clone(), e)));
    }
    out.sort();
    out
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == parts {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for k in 0..=total {
        prefix.push(k);
        compositions(total - k, parts, prefix, out);
        prefix.pop();
    }
}

/// The graded commutative algebra on `a` generators `x_i` of degree 1 and
/// `b` generators `y_j` of degree 2, with `x_i² = 0`, all typed odd.
/// Degree `d` is ordered by the increasing list of `x`'s, then by the `y`
/// exponent vector.
pub fn build_massey(field: Field, a: usize, b: usize, max_degree: usize) -> Result<GradedAlgebra> {
    if a + b == 0 {
        return Err(Error::InvalidAlgebra("at least one generator is required".into()));
    }
    if a > 16 {
        return Err(Error::InvalidAlgebra("at most 16 odd generators are supported".into()));
    }
    let basis = (0..=max_degree).map(|d| massey_monomials(a, b, d)).collect();
    let alg = from_monomials(
        field,
        basis,
        |(s, e): &MasseyMonomial| s.len() + 2 * e.iter().sum::<usize>(),
        |(s, e), (t, f)| {
            if s.iter().any(|i| t.contains(i)) {
                return None;
            }
            // moving each x of t past the larger x's of s
            let swaps: usize = t.iter().map(|j| s.iter().filter(|&i| i > j).count()).sum();
            let mut u = s.clone();
            u.extend_from_slice(t);
            u.sort_unstable();
            let exps = e.iter().zip(f).map(|(p, q)| p + q).collect();
            Some(((u, exps), swaps % 2 == 1))
        },
    )?;
    let typing = alg.uniform_typing(true);
    alg.with_typing(typing)
}

/// The algebra with unit in degree 0 and basis `x_{i,1}, ..., x_{i,i+1}` of
/// degree `i >= 1`, where `x_{i,s} x_{j,t} = x_{i+j,t}` if `s = 1` and `0`
/// otherwise. Basis index `s − 1` holds `x_{i,s}`.
pub fn build_shift_algebra(field: Field, max_degree: usize) -> Result<GradedAlgebra> {
    if max_degree == 0 {
        return Err(Error::InvalidAlgebra("max degree must be at least 1".into()));
    }
    // (degree, s); the unit is (0, 0)
    let basis = (0..=max_degree)
        .map(|i| if i == 0 { vec![(0, 0)] } else { (1..=i + 1).map(|s| (i, s)).collect() })
        .collect();
    from_monomials(
        field,
        basis,
        |&(i, _)| i,
        |&(i, s), &(j, t)| match (i, j) {
            (0, _) => Some(((j, t), false)),
            (_, 0) => Some(((i, s), false)),
            _ if s == 1 => Some(((i + j, t), false)),
            _ => None,
        },
    )
}

/// `k⟨x, y⟩/(xy, y²)` with `deg x = deg y = 1`; degree `k >= 1` has basis
/// `(x^k, y x^{k−1})`.
pub fn build_xy_algebra(field: Field, max_degree: usize) -> Result<GradedAlgebra> {
    if max_degree == 0 {
        return Err(Error::InvalidAlgebra("max degree must be at least 1".into()));
    }
    // (degree, starts with y)
    let basis = (0..=max_degree)
        .map(|k| if k == 0 { vec![(0, false)] } else { vec![(k, false), (k, true)] })
        .collect();
    from_monomials(
        field,
        basis,
        |&(k, _)| k,
        |&(i, yi), &(j, yj)| match (i, j) {
            (0, _) => Some(((j, yj), false)),
            (_, 0) => Some(((i, yi), false)),
            // anything ending in x followed by y, or y·y, vanishes
            _ if yj => None,
            _ => Some(((i + j, yi), false)),
        },
    )
}
