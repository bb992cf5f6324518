//! Randomized structural identities over exact arithmetic.

use proptest::prelude::*;
use reductive::catalog::{load_algebra, ALGEBRAS};
use reductive::field::{qf, Q};

const MAX_DIM: usize = 16;

fn coords() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), MAX_DIM).prop_map(|v| v.into_iter().map(|(n, d)| qf(n, d)).collect())
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jacobi_antisymmetry_and_invariance(idx in 0..ALGEBRAS.len(), x in coords(), y in coords(), z in coords()) {
        let alg = load_algebra(ALGEBRAS[idx]).unwrap();
        let n = alg.dim();
        prop_assume!(n <= MAX_DIM);
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let b = |u: &[Q], v: &[Q]| alg.bracket_coords(u, v);
        let zero = qf(0, 1);

        let jac = add(&add(&b(x, &b(y, z)), &b(y, &b(z, x))), &b(z, &b(x, y)));
        prop_assert!(jac.iter().all(|c| *c == zero));
        prop_assert!(add(&b(x, y), &b(y, x)).iter().all(|c| *c == zero));
        // k([x, y], z) = k(x, [y, z])
        prop_assert_eq!(alg.killing_coords(&b(x, y), z), alg.killing_coords(x, &b(y, z)));
    }
}
