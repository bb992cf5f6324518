//! Intersections of complements with the simple summands of `sl2 ⊕ g2`.

use crate::algebra::{LieAlgebra, Subspace};
use crate::catalog::{self, conditions::random_rational};
use crate::error::{Error, Result};
use crate::field::Q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// `(dim m ∩ (sl2 ⊕ 0), dim m ∩ (0 ⊕ g2))` in a six-dimensional direct sum.
pub fn summand_intersections(alg: &LieAlgebra, m: &Subspace) -> Result<(usize, usize)> {
    if alg.dim() != 6 {
        return Err(Error::DimMismatch { expected: 6, got: alg.dim() });
    }
    let unit = |i: usize| {
        let mut v = vec![Q::from_integer(0.into()); 6];
        v[i] = Q::from_integer(1.into());
        v
    };
    let first = Subspace::span(alg, &(0..3).map(unit).collect::<Vec<_>>());
    let second = Subspace::span(alg, &(3..6).map(unit).collect::<Vec<_>>());
    Ok((m.intersection_dim(&first), m.intersection_dim(&second)))
}

/// Random subspace of the given dimension with rational coordinates.
pub fn random_subspace<R: rand::Rng>(alg: &LieAlgebra, dim: usize, rng: &mut R) -> Subspace {
    loop {
        let rows: Vec<Vec<Q>> = (0..dim).map(|_| (0..alg.dim()).map(|_| random_rational(rng)).collect()).collect();
        let s = Subspace::span(alg, &rows);
        if s.dim() == dim {
            return s;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionRow {
    pub algebra: String,
    pub dim: usize,
    pub first: usize,
    pub second: usize,
    /// Both intersections have dimension at least `dim - 3`.
    pub ok: bool,
}

/// `n` random subspaces of each dimension in `dims`, in both direct sums.
pub fn intersection_suite(seed: u64, n: usize, dims: &[usize]) -> Result<Vec<IntersectionRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![];
    for name in ["sl2xsl2", "sl2xso3"] {
        let alg = catalog::load_algebra(name)?;
        for &dim in dims {
            for _ in 0..n {
                let m = random_subspace(&alg, dim, &mut rng);
                let (first, second) = summand_intersections(&alg, &m)?;
                let bound = dim.saturating_sub(3);
                rows.push(IntersectionRow { algebra: name.into(), dim, first, second, ok: first >= bound && second >= bound });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_cataloged_complement_meets_both_summands() {
        let alg = catalog::load_algebra("sl2xsl2").unwrap();
        let v: Vec<Vec<Q>> =
            ["x1", "x2", "y1", "y2"].iter().map(|e| alg.parse_vector(e, &[]).unwrap()).collect();
        let m = Subspace::span(&alg, &v);
        assert_eq!(summand_intersections(&alg, &m).unwrap(), (2, 2));
    }

    #[test]
    fn random_bounds_hold() {
        let rows = intersection_suite(9, 10, &[4, 5]).unwrap();
        assert!(rows.iter().all(|r| r.ok));
    }
}
