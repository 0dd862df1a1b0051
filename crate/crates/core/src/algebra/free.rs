use std::collections::BTreeMap;

use super::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;

/// A basis monomial `x_i · m` where `m` is a sorted multiset of generators.
type Monomial = (usize, Vec<usize>);

fn multisets(degrees: &[usize], start: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    for g in start..degrees.len() {
        if degrees[g] <= remaining {
            prefix.push(g);
            multisets(degrees, g, remaining - degrees[g], prefix, out);
            prefix.pop();
        }
    }
}

/// The free unital graded Perm algebra on generators of the given positive
/// degrees, truncated at degree `max_degree`.
///
/// Positive degrees are spanned by `x_i · m`, with `m` a commutative
/// monomial; the product is `(x_i · m)(x_j · m') = x_i · m x_j m'`.
pub fn free_gperm(field: Field, degrees: &[usize], max_degree: usize) -> Result<GradedAlgebra> {
    if degrees.contains(&0) {
        return Err(Error::InvalidAlgebra("generators must have positive degree".into()));
    }
    let mut basis: Vec<Vec<Monomial>> = vec![Vec::new(); max_degree + 1];
    for d in 1..=max_degree {
        for (i, &gi) in degrees.iter().enumerate() {
            if gi > d {
                continue;
            }
            let mut words = Vec::new();
            multisets(degrees, 0, d - gi, &mut Vec::new(), &mut words);
            basis[d].extend(words.into_iter().map(|w| (i, w)));
        }
        basis[d].sort();
    }
    let index: Vec<BTreeMap<Monomial, usize>> = basis
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect())
        .collect();
    let mut dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    dims[0] = 1;
    let mut a = GradedAlgebra::new(field, &dims)?;
    a.set_unit(vec![field.one()])?;
    for d in 0..=max_degree {
        for b in 0..dims[d] {
            let e = linalg::unit_vector(field, dims[d], b);
            a.set_product(0, d, 0, b, e.clone())?;
            a.set_product(d, 0, b, 0, e)?;
        }
    }
    for i in 1..=max_degree {
        for j in 1..=max_degree - i {
            for (a_idx, (g, m)) in basis[i].iter().enumerate() {
                for (b_idx, (h, m2)) in basis[j].iter().enumerate() {
                    let mut word = m.clone();
                    word.push(*h);
                    word.extend_from_slice(m2);
                    word.sort_unstable();
                    let c = index[i + j][&(*g, word)];
                    a.set_product_entry((i, j), a_idx, b_idx, c, field.one())?;
                }
            }
        }
    }
    Ok(a)
}
