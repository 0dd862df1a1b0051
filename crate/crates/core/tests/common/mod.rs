//! Independent constructions and random instance generators shared by the
//! integration tests. Nothing here calls the library's catalog, so the
//! objects built here serve as oracles.

#![allow(dead_code)]

use std::collections::BTreeMap;

use atriv_core::algebra::GradedAlgebra;
use atriv_core::linalg::{self, Matrix};
use atriv_core::operad::TruncatedOperad;
use atriv_core::{Field, GradedSubset, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All arrangements of `1..=n`, lexicographic.
pub fn words(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 1..=n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// How `s_k` acts on a word `x_{w_1} ... x_{w_n}` of the associative operad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordAction {
    /// Exchange the letters `k` and `k+1` wherever they occur.
    RelabelLetters,
    /// Exchange the entries in positions `k` and `k+1`.
    SwapPositions,
}

/// The associative operad: `P(n)` has the words in `1..=n` as basis and
/// `w ∘_i v` substitutes `v`, shifted by `i − 1`, for the letter `i`.
pub fn associative_operad(field: Field, max_arity: usize, action: WordAction) -> TruncatedOperad {
    let bases: Vec<Vec<Vec<usize>>> = (0..=max_arity).map(words).collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
        .collect();
    let dims: Vec<usize> = (1..=max_arity).map(|n| bases[n].len()).collect();
    let mut p = TruncatedOperad::new(field, &dims).unwrap();
    p.set_identity(vec![field.one()]).unwrap();
    for n in 2..=max_arity {
        let d = dims[n - 1];
        for k in 1..n {
            let mut m = Matrix::zeros(field, d, d);
            for (b, w) in bases[n].iter().enumerate() {
                let moved: Vec<usize> = match action {
                    WordAction::RelabelLetters => w
                        .iter()
                        .map(|&x| if x == k { k + 1 } else if x == k + 1 { k } else { x })
                        .collect(),
                    WordAction::SwapPositions => {
                        let mut v = w.clone();
                        v.swap(k - 1, k);
                        v
                    }
                };
                m.set(b, index[n][&moved], field.one());
            }
            p.set_action(n, k, m).unwrap();
        }
    }
    for m in 1..=max_arity {
        for n in 1..=max_arity + 1 - m {
            for i in 1..=m {
                for (a, w) in bases[m].iter().enumerate() {
                    for (b, v) in bases[n].iter().enumerate() {
                        let mut out = Vec::new();
                        for &x in w {
                            if x < i {
                                out.push(x);
                            } else if x == i {
                                out.extend(v.iter().map(|&y| y + i - 1));
                            } else {
                                out.push(x + n - 1);
                            }
                        }
                        let c = index[m + n - 1][&out];
                        p.set_composition_entry((m, n, i), a, b, c, field.one()).unwrap();
                    }
                }
            }
        }
    }
    p
}

/// A monomial algebra on generators of the given degrees, basis = exponent
/// vectors of total degree `<= D`, ordered by degree then exponents.
/// With `graded` set, odd-degree generators anticommute and square to zero,
/// and the product carries the Koszul sign; otherwise it is polynomial.
pub fn free_commutative(field: Field, degrees: &[usize], max_degree: usize, graded: bool) -> GradedAlgebra {
    fn exps(degrees: &[usize], g: usize, left: usize, graded: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if g == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if graded && degrees[g] % 2 == 1 { 1 } else { usize::MAX };
        let mut e = 0;
        while e <= cap && e * degrees[g] <= left {
            cur.push(e);
            exps(degrees, g + 1, left - e * degrees[g], graded, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let basis: Vec<Vec<Vec<usize>>> = (0..=max_degree)
        .map(|d| {
            let mut out = Vec::new();
            exps(degrees, 0, d, graded, &mut Vec::new(), &mut out);
            out.sort();
            out
        })
        .collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> = basis
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
        .collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let mut a = GradedAlgebra::new(field, &dims).unwrap();
    a.set_unit(vec![field.one()]).unwrap();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            for (x, e) in basis[i].iter().enumerate() {
                for (y, f) in basis[j].iter().enumerate() {
                    let sum: Vec<usize> = e.iter().zip(f).map(|(p, q)| p + q).collect();
                    let Some(&c) = index[i + j].get(&sum) else { continue };
                    // moving each odd letter of f left past the odd letters of e after it
                    let mut swaps = 0;
                    if graded {
                        for (g, &fe) in f.iter().enumerate() {
                            for (h, &ee) in e.iter().enumerate().skip(g + 1) {
                                swaps += fe * ee * degrees[g] * degrees[h];
                            }
                        }
                    }
                    a.set_product_entry((i, j), x, y, c, field.sign(swaps % 2 == 1)).unwrap();
                }
            }
        }
    }
    a
}

/// Quotient of `a` by an ideal spanned by standard basis vectors; the
/// remaining basis vectors keep their order and their types.
pub fn quotient_by_basis_ideal(a: &GradedAlgebra, ideal: &GradedSubset) -> GradedAlgebra {
    let f = a.field();
    let killed: Vec<Vec<bool>> = (0..=a.max_degree())
        .map(|d| {
            let sub = ideal.component(d);
            (0..a.dim(d)).map(|b| sub.contains(&a.basis_vector(d, b))).collect()
        })
        .collect();
    for d in 0..=a.max_degree() {
        let kept = killed[d].iter().filter(|k| **k).count();
        assert_eq!(kept, ideal.component(d).dim(), "ideal is not spanned by basis vectors");
    }
    let keep: Vec<Vec<usize>> = killed
        .iter()
        .map(|k| (0..k.len()).filter(|&b| !k[b]).collect())
        .collect();
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let mut q = GradedAlgebra::new(f, &dims).unwrap();
    let project = |d: usize, v: &[Scalar]| -> Vec<Scalar> { keep[d].iter().map(|&b| v[b].clone()).collect() };
    q.set_unit(project(0, a.unit())).unwrap();
    for i in 0..=a.max_degree() {
        for j in 0..=a.max_degree() - i {
            for (x, &bx) in keep[i].iter().enumerate() {
                for (y, &by) in keep[j].iter().enumerate() {
                    q.set_product(i, j, x, y, project(i + j, a.product_of_basis(i, j, bx, by)))
                        .unwrap();
                }
            }
        }
    }
    if let Some(t) = a.typing() {
        let odd = (0..=a.max_degree())
            .map(|d| if d == 0 { Vec::new() } else { keep[d].iter().map(|&b| t[d][b]).collect() })
            .collect();
        q.set_typing(odd).unwrap();
    }
    q
}

/// Kills random positive-degree basis monomials of a monomial algebra
/// (products are signed basis vectors) until every degree has dimension
/// at most `max_dim`, plus a few extra at random.
pub fn random_monomial_quotient(a: &GradedAlgebra, rng: &mut ChaCha8Rng, max_dim: usize) -> GradedAlgebra {
    let mut current = a.clone();
    for d in 1..=a.max_degree() {
        loop {
            let dim = current.dim(d);
            let extra = dim > 0 && rng.gen_bool(0.2);
            if dim <= max_dim && !extra {
                break;
            }
            let mut gen = current.zero_ideal();
            gen.add_vector(d, current.basis_vector(d, rng.gen_range(0..dim))).unwrap();
            let ideal = current.generated_ideal(&gen).unwrap();
            current = quotient_by_basis_ideal(&current, &ideal);
            if extra && current.dim(d) <= max_dim {
                break;
            }
        }
    }
    current
}

/// Even-type part `even` and odd-type part `odd` glued along `k`: products
/// between the two positive parts vanish.
pub fn fiber_product(even: &GradedAlgebra, odd: &GradedAlgebra) -> GradedAlgebra {
    let f = even.field();
    let top = even.max_degree().min(odd.max_degree());
    let dims: Vec<usize> = (0..=top)
        .map(|d| if d == 0 { 1 } else { even.dim(d) + odd.dim(d) })
        .collect();
    let mut a = GradedAlgebra::new(f, &dims).unwrap();
    a.set_unit(vec![f.one()]).unwrap();
    let embed = |d: usize, v: &[Scalar], second: bool| -> Vec<Scalar> {
        if d == 0 {
            return v.to_vec();
        }
        let mut out = linalg::zero_vector(f, dims[d]);
        let offset = if second { even.dim(d) } else { 0 };
        for (k, s) in v.iter().enumerate() {
            out[offset + k] = s.clone();
        }
        out
    };
    for (part, second) in [(even, false), (odd, true)] {
        for i in 0..=top {
            for j in 0..=top - i {
                let (ri, rj) = (part.dim(i), part.dim(j));
                for x in 0..ri {
                    for y in 0..rj {
                        let xa = if i == 0 { 0 } else { x + if second { even.dim(i) } else { 0 } };
                        let ya = if j == 0 { 0 } else { y + if second { even.dim(j) } else { 0 } };
                        // the unit products are shared; write them once from the even part
                        if i + j == 0 && second {
                            continue;
                        }
                        a.set_product(i, j, xa, ya, embed(i + j, part.product_of_basis(i, j, x, y), second))
                            .unwrap();
                    }
                }
            }
        }
    }
    let odd_flags = (0..=top)
        .map(|d| if d == 0 { Vec::new() } else { (0..dims[d]).map(|b| b >= even.dim(d)).collect() })
        .collect();
    a.set_typing(odd_flags).unwrap();
    a
}

/// A random invertible matrix with small entries; when `blocks` is given,
/// entries connect only indices with equal flags.
pub fn random_invertible(field: Field, rng: &mut ChaCha8Rng, d: usize, blocks: Option<&[bool]>) -> Matrix {
    loop {
        let mut m = Matrix::zeros(field, d, d);
        for r in 0..d {
            for c in 0..d {
                if blocks.is_none_or(|b| b[r] == b[c]) {
                    m.set(r, c, field.int(rng.gen_range(-2..=2)));
                }
            }
        }
        if m.rank() == d {
            return m;
        }
    }
}

/// Rebases every positive degree by a random matrix that respects the
/// typing, which is then restored.
pub fn random_algebra_rebase(a: &GradedAlgebra, rng: &mut ChaCha8Rng) -> GradedAlgebra {
    let f = a.field();
    let bases: Vec<Option<Matrix>> = (0..=a.max_degree())
        .map(|d| {
            (d > 0 && a.dim(d) > 0).then(|| {
                let flags = a.typing().map(|t| t[d].as_slice());
                random_invertible(f, rng, a.dim(d), flags)
            })
        })
        .collect();
    let out = a.change_basis(&bases).unwrap();
    match a.typing() {
        Some(t) => out.with_typing(t.clone()).unwrap(),
        None => out,
    }
}

/// Rebases every arity `>= 2` of an operad by a random matrix.
pub fn random_operad_rebase(p: &TruncatedOperad, rng: &mut ChaCha8Rng) -> TruncatedOperad {
    let f = p.field();
    let bases: Vec<Option<Matrix>> = (0..=p.max_arity())
        .map(|n| (n >= 2 && p.dim(n) > 0).then(|| random_invertible(f, rng, p.dim(n), None)))
        .collect();
    p.change_basis(&bases).unwrap()
}

fn random_degrees(rng: &mut ChaCha8Rng, count: usize, max: usize) -> Vec<usize> {
    (0..count).map(|_| rng.gen_range(1..=max)).collect()
}

/// A random GPerm algebra: a monomial quotient of a free GPerm algebra,
/// rebased.
pub fn random_gperm(field: Field, rng: &mut ChaCha8Rng, max_degree: usize, max_dim: usize) -> GradedAlgebra {
    let gens = rng.gen_range(1..=3);
    let degrees = random_degrees(rng, gens, 2);
    let free = atriv_core::algebra::free_gperm(field, &degrees, max_degree).unwrap();
    let q = random_monomial_quotient(&free, rng, max_dim);
    random_algebra_rebase(&q, rng)
}

/// A random graded commutative algebra (Koszul signs), untyped.
pub fn random_graded_commutative(field: Field, rng: &mut ChaCha8Rng, max_degree: usize, max_dim: usize) -> GradedAlgebra {
    let gens = rng.gen_range(1..=3);
    let degrees = random_degrees(rng, gens, 3);
    let free = free_commutative(field, &degrees, max_degree, true);
    let q = random_monomial_quotient(&free, rng, max_dim);
    random_algebra_rebase(&q, rng)
}

/// A random commutative algebra with all generators in even degrees, so
/// commutative and graded commutative coincide.
pub fn random_even_commutative(field: Field, rng: &mut ChaCha8Rng, max_degree: usize, max_dim: usize) -> GradedAlgebra {
    let gens = rng.gen_range(1..=2);
    let degrees: Vec<usize> = (0..gens).map(|_| 2 * rng.gen_range(1..=2)).collect();
    let free = free_commutative(field, &degrees, max_degree, false);
    let q = random_monomial_quotient(&free, rng, max_dim);
    random_algebra_rebase(&q, rng)
}

/// A random PGC algebra: a commutative even-type part glued to a graded
/// commutative odd-type part, rebased within each type.
pub fn random_pgc(field: Field, rng: &mut ChaCha8Rng, max_degree: usize, max_dim: usize) -> GradedAlgebra {
    let split = rng.gen_range(0..=max_dim);
    let even = {
        let count = rng.gen_range(1..=2);
        let degrees = random_degrees(rng, count, 2);
        let free = free_commutative(field, &degrees, max_degree, false);
        random_monomial_quotient(&free, rng, split)
    };
    let odd = {
        let count = rng.gen_range(1..=2);
        let degrees = random_degrees(rng, count, 3);
        let free = free_commutative(field, &degrees, max_degree, true);
        random_monomial_quotient(&free, rng, max_dim - split)
    };
    random_algebra_rebase(&fiber_product(&even, &odd), rng)
}

/// A random PGPerm algebra with mixed typing: a GPerm even-type part glued
/// to a graded commutative odd-type part, rebased within each type.
pub fn random_pgperm(field: Field, rng: &mut ChaCha8Rng, max_degree: usize, max_dim: usize) -> GradedAlgebra {
    let split = rng.gen_range(1..max_dim.max(2));
    let even = {
        let count = rng.gen_range(1..=2);
        let degrees = random_degrees(rng, count, 2);
        let free = atriv_core::algebra::free_gperm(field, &degrees, max_degree).unwrap();
        random_monomial_quotient(&free, rng, split)
    };
    let odd = {
        let count = rng.gen_range(1..=2);
        let degrees = random_degrees(rng, count, 3);
        let free = free_commutative(field, &degrees, max_degree, true);
        random_monomial_quotient(&free, rng, max_dim.saturating_sub(split).max(1))
    };
    random_algebra_rebase(&fiber_product(&even, &odd), rng)
}

/// The locations of Ope's data that a single-entry mutation can touch.
#[derive(Clone, Copy, Debug)]
pub enum OpeEntry {
    Identity,
    Action { n: usize, k: usize },
    Composition { m: usize, n: usize, i: usize },
}

pub fn ope_entries(max_arity: usize) -> Vec<OpeEntry> {
    let mut out = vec![OpeEntry::Identity];
    for n in (3..=max_arity).step_by(2) {
        for k in 1..n {
            out.push(OpeEntry::Action { n, k });
        }
    }
    for m in (1..=max_arity).step_by(2) {
        for n in (1..=max_arity + 1 - m).step_by(2) {
            for i in 1..=m {
                out.push(OpeEntry::Composition { m, n, i });
            }
        }
    }
    out
}

/// Adds a nonzero integer to one entry of `p`, whose components are all at
/// most one-dimensional.
pub fn mutate_entry(p: &TruncatedOperad, entry: OpeEntry, delta: i64) -> TruncatedOperad {
    let f = p.field();
    let mut q = p.clone();
    let bump = |s: &Scalar| s + &f.int(delta);
    match entry {
        OpeEntry::Identity => q.set_identity(vec![bump(&p.identity()[0])]).unwrap(),
        OpeEntry::Action { n, k } => {
            let v = bump(p.action(n, k).get(0, 0));
            q.set_action(n, k, Matrix::diagonal(f, &[v])).unwrap();
        }
        OpeEntry::Composition { m, n, i } => {
            let v = bump(&p.composition_of_basis(m, n, i, 0, 0)[0]);
            q.set_composition_entry((m, n, i), 0, 0, 0, v).unwrap();
        }
    }
    q
}

/// Picks `count` distinct entries and a nonzero delta for each.
pub fn random_mutations(rng: &mut ChaCha8Rng, max_arity: usize, count: usize) -> Vec<(OpeEntry, i64)> {
    let mut entries = ope_entries(max_arity);
    entries.shuffle(rng);
    entries
        .into_iter()
        .take(count)
        .map(|e| {
            let delta = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
            (e, delta)
        })
        .collect()
}
