//! Families of subspaces indexed by arity or degree.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Subspace, Vector};

/// One subspace per grade `first, first+1, ..., last`. Operads index by
/// arity starting at 1, algebras by degree starting at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubset {
    first: usize,
    components: Vec<Subspace>,
}

impl GradedSubset {
    pub fn new(first: usize, components: Vec<Subspace>) -> Self {
        GradedSubset { first, components }
    }

    /// Zero subspaces of the given ambient dimensions.
    pub fn zero(field: Field, first: usize, dims: &[usize]) -> Self {
        Self::new(first, dims.iter().map(|&d| Subspace::zero(field, d)).collect())
    }

    pub fn full(field: Field, first: usize, dims: &[usize]) -> Self {
        Self::new(first, dims.iter().map(|&d| Subspace::full(field, d)).collect())
    }

    /// Adds `v` to the component of grade `g`.
    pub fn add_vector(&mut self, g: usize, v: Vector) -> Result<()> {
        if g < self.first || g > self.last() {
            return Err(Error::Dimension(format!("grade {g} outside {}..={}", self.first, self.last())));
        }
        let c = &mut self.components[g - self.first];
        if v.len() != c.ambient() {
            return Err(Error::Dimension(format!(
                "vector of length {} in grade {g} of dimension {}",
                v.len(),
                c.ambient()
            )));
        }
        *c = c.with_vectors(vec![v]);
        Ok(())
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn last(&self) -> usize {
        self.first + self.components.len() - 1
    }

    pub fn component(&self, g: usize) -> &Subspace {
        &self.components[g - self.first]
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    pub fn ambient_dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::ambient).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Subspace::is_zero)
    }

    /// Componentwise inclusion `other ⊆ self`.
    pub fn contains(&self, other: &GradedSubset) -> bool {
        self.first == other.first
            && self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.contains_subspace(b))
    }
}

/// A graded subset computed from conditions that only make sense inside
/// a window. Where no condition can be tested (`decided` is false) the
/// component is the whole ambient space, so the result over-approximates
/// the untruncated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedSubset {
    pub window: usize,
    pub subset: GradedSubset,
    pub decided: Vec<bool>,
}

impl WindowedSubset {
    pub fn is_decided(&self, g: usize) -> bool {
        self.decided[g - self.subset.first()]
    }

    /// `(grade, dim)` at decided grades.
    pub fn decided_dims(&self) -> Vec<(usize, usize)> {
        (self.subset.first()..=self.subset.last())
            .filter(|&g| self.is_decided(g))
            .map(|g| (g, self.subset.component(g).dim()))
            .collect()
    }
}
