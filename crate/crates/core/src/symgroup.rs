//! Permutations of `{1..n}` and the derived permutations used by operad
//! equivariance.
//!
//! Composition is `(p ∘ q)(x) = p(q(x))`. A right action `v ∗ p` satisfies
//! `v ∗ (p ∘ q) = (v ∗ p) ∗ q`; [`Permutation::adjacent_word`] returns a word
//! in adjacent transpositions to be applied left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One-line image table. Stored zero-based; the public interface is
/// one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From one-based images, e.g. `[2, 3, 1]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Permutation("empty image table".into()));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Permutation(format!(
                    "{images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need at least one letter");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition exchanging letters `a` and `b` (one-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::Permutation(format!("({a} {b}) is not a transposition in S{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// `s_k = (k, k+1)`, `1 <= k < n`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        Self::transposition(n, k, k + 1)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` (one-based letters).
    pub fn cycle(n: usize, letters: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (pos, &a) in letters.iter().enumerate() {
            if a == 0 || a > n {
                return Err(Error::Permutation(format!("letter {a} outside 1..{n}")));
            }
            images[a - 1] = letters[(pos + 1) % letters.len()];
        }
        Self::new(&images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the one-based letter `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_alternating(&self) -> bool {
        self.sign() == 1
    }

    /// Indices `k_1, ..., k_r` with `self = s_{k_1} ∘ ... ∘ s_{k_r}`, so that
    /// `v ∗ self` is obtained by acting with `s_{k_1}` first.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut q = self.images.clone();
        let mut collected = Vec::new();
        // q ∘ s_k swaps positions k, k+1 of the image table
        loop {
            let Some(k) = (0..q.len().saturating_sub(1)).find(|&k| q[k] > q[k + 1]) else {
                break;
            };
            q.swap(k, k + 1);
            collected.push(k + 1);
        }
        collected.reverse();
        collected
    }

    /// All permutations of `n` letters in lexicographic order of image tables.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("successor exists");
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Substitutes permutations into blocks. The letters `1..N` are cut into
/// consecutive blocks of the given sizes; block `j` is permuted internally
/// by `inners[j]` and then moved as a whole to block position
/// `outer(j)` of the output.
pub fn block_substitution(
    outer: &Permutation,
    block_sizes: &[usize],
    inners: &[Permutation],
) -> Result<Permutation> {
    let k = outer.len();
    if block_sizes.len() != k || inners.len() != k {
        return Err(Error::Permutation(format!(
            "outer permutation has {k} letters but {} block sizes and {} inner permutations were given",
            block_sizes.len(),
            inners.len()
        )));
    }
    for (j, (size, inner)) in block_sizes.iter().zip(inners).enumerate() {
        if *size == 0 || inner.len() != *size {
            return Err(Error::Permutation(format!(
                "block {} has size {size} but its inner permutation has {} letters",
                j + 1,
                inner.len()
            )));
        }
    }
    // output position p holds input block outer⁻¹(p)
    let inv = outer.inverse();
    let mut offset_at_position = vec![0; k];
    let mut acc = 0;
    for p in 0..k {
        offset_at_position[p] = acc;
        acc += block_sizes[inv.images[p]];
    }
    let mut images = Vec::with_capacity(acc);
    for j in 0..k {
        let base = offset_at_position[outer.images[j]];
        images.extend(inners[j].images.iter().map(|&a| base + a));
    }
    Ok(Permutation { images })
}

fn slot_sizes(m: usize, i: usize, n: usize) -> Result<Vec<usize>> {
    if i == 0 || i > m {
        return Err(Error::SlotOutOfRange { slot: i, arity: m });
    }
    if n == 0 {
        return Err(Error::Permutation("inner arity must be positive".into()));
    }
    let mut sizes = vec![1; m];
    sizes[i - 1] = n;
    Ok(sizes)
}

/// `σ′`: the permutation of `m+n−1` letters induced by `σ ∈ Σ_n` acting in
/// slot `i` of an `m`-ary operation.
pub fn sigma_prime(m: usize, i: usize, sigma: &Permutation) -> Result<Permutation> {
    let n = sigma.len();
    let sizes = slot_sizes(m, i, n)?;
    let inners: Vec<Permutation> = sizes
        .iter()
        .enumerate()
        .map(|(j, &s)| if j + 1 == i { sigma.clone() } else { Permutation::identity(s) })
        .collect();
    block_substitution(&Permutation::identity(m), &sizes, &inners)
}

/// `φ″`: the permutation of `m+n−1` letters induced by `φ ∈ Σ_m` when an
/// `n`-ary operation sits in slot `i`.
pub fn phi_doubleprime(phi: &Permutation, i: usize, n: usize) -> Result<Permutation> {
    let sizes = slot_sizes(phi.len(), i, n)?;
    let inners: Vec<Permutation> = sizes.iter().map(|&s| Permutation::identity(s)).collect();
    block_substitution(phi, &sizes, &inners)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCase {
    pub label: &'static str,
    pub statement: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SignCase {
    fn new(label: &'static str, statement: &'static str) -> Self {
        SignCase {
            label,
            statement,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignLemmaReport {
    pub m_max: usize,
    pub n_max: usize,
    pub cases: Vec<SignCase>,
}

impl SignLemmaReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(SignCase::passed)
    }

    pub fn total_checked(&self) -> usize {
        self.cases.iter().map(|c| c.checked).sum()
    }
}

fn parity(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Checks the sign identities for `σ′` and `φ″` by exhaustion over
/// `Σ_m`, `m <= m_max`, and inner arities `n <= n_max`.
pub fn verify_sign_lemma(m_max: usize, n_max: usize) -> Result<SignLemmaReport> {
    if m_max < 2 {
        return Err(Error::Invalid(format!("m_max must be at least 2, got {m_max}")));
    }
    if n_max < 1 {
        return Err(Error::Invalid(format!("n_max must be at least 1, got {n_max}")));
    }
    let mut outer = SignCase::new("outer-block", "sgn(σ′) = sgn(σ)");
    let mut inner = SignCase::new("inner-block", "sgn(φ″) = (−1)^((n−1)(φ(i)−i)) sgn(φ)");
    let mut odd_inner = SignCase::new("odd-inner-arity", "n odd ⇒ sgn(φ″) = sgn(φ)");
    let mut fixed = SignCase::new("fixed-slot", "φ(i) = i ⇒ sgn(φ″) = sgn(φ)");
    let mut transposition = SignCase::new(
        "transposition",
        "n even, φ = (a,i) ⇒ sgn(φ″) = (−1)^(i−a−1); φ = (i,b) ⇒ (−1)^(b−i−1)",
    );
    let mut three_cycle = SignCase::new(
        "three-cycle",
        "n even, φ = (a,a+1,a+2): i = a ⇒ −1, i = a+1 ⇒ −1, i = a+2 ⇒ +1",
    );

    let sigmas: Vec<Vec<Permutation>> = (0..=n_max)
        .map(|n| if n == 0 { Vec::new() } else { Permutation::all(n) })
        .collect();

    for m in 1..=m_max {
        for i in 1..=m {
            for n in 1..=n_max {
                for sigma in &sigmas[n] {
                    let sp = sigma_prime(m, i, sigma)?;
                    outer.record(sp.sign() == sigma.sign(), || {
                        format!("m={m} i={i} σ={sigma} σ′={sp}")
                    });
                }
            }
        }
        for phi in Permutation::all(m) {
            for i in 1..=m {
                let moved = phi.apply(i) as i64 - i as i64;
                for n in 1..=n_max {
                    let pp = phi_doubleprime(&phi, i, n)?;
                    let s = pp.sign();
                    let witness = || format!("φ={phi} i={i} n={n} φ″={pp} sgn={s}");
                    inner.record(s == parity((n as i64 - 1) * moved) * phi.sign(), witness);
                    if n % 2 == 1 {
                        odd_inner.record(s == phi.sign(), witness);
                    }
                    if moved == 0 {
                        fixed.record(s == phi.sign(), witness);
                    }
                    if n % 2 == 0 {
                        if let Some((a, b)) = transposition_letters(&phi) {
                            if b == i {
                                transposition.record(s == parity(i as i64 - a as i64 - 1), witness);
                            } else if a == i {
                                transposition.record(s == parity(b as i64 - i as i64 - 1), witness);
                            }
                        }
                        if let Some(a) = consecutive_three_cycle(&phi) {
                            let expected = if i == a || i == a + 1 {
                                Some(-1)
                            } else if i == a + 2 {
                                Some(1)
                            } else {
                                None
                            };
                            if let Some(e) = expected {
                                three_cycle.record(s == e, witness);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(SignLemmaReport {
        m_max,
        n_max,
        cases: vec![outer, inner, odd_inner, fixed, transposition, three_cycle],
    })
}

/// `(a, b)` with `a < b` when `p` is a transposition.
fn transposition_letters(p: &Permutation) -> Option<(usize, usize)> {
    let moved: Vec<usize> = (1..=p.len()).filter(|&x| p.apply(x) != x).collect();
    match moved[..] {
        [a, b] => Some((a, b)),
        _ => None,
    }
}

/// `a` when `p` is the cycle `a -> a+1 -> a+2 -> a`.
fn consecutive_three_cycle(p: &Permutation) -> Option<usize> {
    let moved: Vec<usize> = (1..=p.len()).filter(|&x| p.apply(x) != x).collect();
    match moved[..] {
        [a, b, c] if b == a + 1 && c == a + 2 => {
            (p.apply(a) == b && p.apply(b) == c && p.apply(c) == a).then_some(a)
        }
        _ => None,
    }
}
