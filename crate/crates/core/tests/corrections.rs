//! The printed forms of corrected catalog entries fail, and the stored
//! corrections hold.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reductive::algebra::Subspace;
use reductive::catalog::{self, Assignment};
use reductive::expm::projective::{exponentials, proj_dist, stated_second, Second};
use reductive::expm::witnesses::{verify_conjugacy, ConjugacyWitness, CONJUGACY_WITNESSES};
use reductive::field::q;
use reductive::solver::{verify_pair, PairVerdict};
use num_complex::Complex64;

fn witness(id: &str) -> ConjugacyWitness {
    *CONJUGACY_WITNESSES.iter().find(|w| w.id == id).unwrap()
}

fn all_fail(w: &ConjugacyWitness) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    verify_conjugacy(w, 5, &mut rng).iter().all(|r| !r.ok)
}

fn all_hold(w: &ConjugacyWitness) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    verify_conjugacy(w, 5, &mut rng).iter().all(|r| r.ok)
}

#[test]
fn h31_case1_sign_of_entry_32() {
    let fixed = witness("sl3R.h31.1");
    assert!(all_hold(&fixed));
    let printed = ConjugacyWitness {
        g: &[&["1", "-1/a", "-1"], &["1", "(a + 1)/a", "-1"], &["0", "a/(2 + a)", "a/(2 + a)"]],
        ..fixed
    };
    assert!(all_fail(&printed));
}

#[test]
fn h31_case2_target_needs_k_squared() {
    let fixed = witness("sl3R.h31.2");
    assert!(all_hold(&fixed));
    let printed = ConjugacyWitness {
        target: "e1 + b*(e5 - 2*e8) + 3*l*(e2 - k*e6) + k*(e3 + c*(e5 - 2*e8)) + (3*k^2*c + k + 3*b)/(3*l)*(k*e4 - e7)",
        conditions: "k != 0; k != 1; l := k^2*c + k + b; l != 0",
        ..fixed
    };
    assert!(all_fail(&printed));
    // the two forms agree at k = 1
    let at_one = ConjugacyWitness { conditions: "k = 1; l := k^2*c + k + b; l != 0", ..printed };
    assert!(all_hold(&at_one));
}

#[test]
fn h31_case3_entry_13() {
    let fixed = witness("sl3R.h31.3");
    assert!(all_hold(&fixed));
    let printed = ConjugacyWitness {
        g: &[&["0", "2/(3*n)", "(-3*k^2*b + 2*b - 3*c)/(3*n)"], &["1", "1", "-k"], &["1", "0", "k"]],
        conditions: "b != k; n := k^2*b - 2*k + c; n != 0",
        ..fixed
    };
    assert!(all_fail(&printed));
}

fn case10_verdict(last: &str) -> PairVerdict {
    let alg = catalog::load_algebra("su21").unwrap();
    let vals: Assignment = vec![
        ("a".into(), q(1)),
        ("b".into(), q(2)),
        ("c".into(), q(1)),
        ("d".into(), q(1)),
        ("f".into(), q(1)),
    ];
    let h = catalog::subalgebra("su21", "h27").unwrap().instantiate(&alg, &vals[..4].to_vec()).unwrap();
    let gens = [
        "e6 + e7",
        "e4 - e3",
        "e5 + e2",
        "e3 + f*(e1 - 1/2*e6 + c*e8)",
        "e2 - 2*c/3*e4 - 4*a/3*e1 - 2*a/3*e7 + 2*d/3*e8",
        "e7 - b/c*e8 + a/c*e4 + d/c*e2",
        last,
    ];
    let m: Vec<_> = gens.iter().map(|g| alg.parse_vector(g, &vals).unwrap()).collect();
    verify_pair(&alg, &h, &Subspace::span(&alg, &m)).unwrap()
}

#[test]
fn su21_case10_last_generator() {
    let printed = "e8 - (8*a*c - 4*f*c^2 + 24*f*d^2 - 9*f + 12*d)/(2*(8*d*c - 3*a + 4*a*c^2))*(e1 - 1/2*e6 + c*e8)";
    let fixed = "e8 - (8*a*c - 4*f*c^2 - 9*f + 12*d)/(2*(8*d*c - 3*a + 4*a*c^2))*(e1 - 1/2*e6 + c*e8)";
    assert!(matches!(case10_verdict(printed), PairVerdict::NotReductive(_)));
    assert!(matches!(case10_verdict(fixed), PairVerdict::Reductive { generates: true }));
}

#[test]
fn su21_killing_cross_term() {
    let alg = catalog::load_algebra("su21").unwrap();
    let x = alg.parse_element("e1 + e6", &[]).unwrap();
    assert_eq!(alg.killing(&x, &x).unwrap(), q(-3));
}

#[test]
fn lower_left_sign_of_the_hyperbolic_representatives() {
    for (second, eps) in [(Second::Sl2, Complex64::new(1.0, 0.0)), (Second::So3, Complex64::i())] {
        let (v, _) = exponentials(second, 2, 7.0, 2.0);
        assert!(proj_dist(&v.1, &stated_second(2, 3.5, eps, false)) < 1e-9);
        assert!(proj_dist(&v.1, &stated_second(2, 3.5, eps, true)) > 0.1);
    }
}
