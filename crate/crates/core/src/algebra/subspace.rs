use super::LieAlgebra;
use crate::field::Q;
use crate::linalg::{self, Mat};
use std::sync::Arc;

/// A linear subspace stored as the nonzero rows of its reduced echelon form,
/// so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    algebra: Arc<str>,
    ambient: usize,
    rows: Mat<Q>,
}

impl Subspace {
    pub fn from_rows(algebra: Arc<str>, ambient: usize, rows: Vec<Vec<Q>>) -> Self {
        let (rows, _) = linalg::rref(&rows);
        Subspace { algebra, ambient, rows }
    }

    pub fn span(alg: &LieAlgebra, vectors: &[Vec<Q>]) -> Self {
        Self::from_rows(alg.id(), alg.dim(), vectors.to_vec())
    }

    pub fn zero(alg: &LieAlgebra) -> Self {
        Self::from_rows(alg.id(), alg.dim(), vec![])
    }

    pub fn whole(alg: &LieAlgebra) -> Self {
        Self::span(alg, &linalg::identity(alg.dim()))
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        linalg::rank(&rows) == self.dim()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().cloned());
        Subspace::from_rows(self.algebra.clone(), self.ambient, rows)
    }

    pub fn intersection_dim(&self, o: &Subspace) -> usize {
        self.dim() + o.dim() - self.sum(o).dim()
    }

    /// Whether `self ⊕ o` is the whole ambient space.
    pub fn is_complement(&self, o: &Subspace) -> bool {
        self.dim() + o.dim() == self.ambient && self.sum(o).dim() == self.ambient
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.rows.iter().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    #[test]
    fn canonical_form() {
        let id: Arc<str> = Arc::from("x");
        let a = Subspace::from_rows(id.clone(), 3, vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(0)]]);
        let b = Subspace::from_rows(id.clone(), 3, vec![vec![q(2), q(0), q(0)], vec![q(3), q(5), q(0)]]);
        assert_eq!(a, b);
        let c = Subspace::from_rows(id, 3, vec![vec![q(0), q(0), q(1)]]);
        assert!(a.is_complement(&c));
        assert_eq!(a.intersection_dim(&c), 0);
        assert!(!a.contains(&[q(0), q(1), q(1)]));
    }
}
