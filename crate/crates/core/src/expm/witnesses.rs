//! Explicit conjugacy witnesses and class-level conjugacy claims.

use super::projective;
use super::{conjugate_exact, rep_matrix_f64};
use crate::algebra::{ClassKind, LieAlgebra, Subspace};
use crate::catalog::{self, conditions, Assignment};
use crate::error::{Error, Result};
use crate::expr::{eval_str, BasisEnv};
use crate::field::{fmt_q, Cplx, Field, QSqrt2, Q};
use crate::linalg::Mat;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ring {
    Rational,
    /// Entries in ℚ(√2), written with the constant `sqrt2`.
    Sqrt2,
}

/// `g⁻¹·source·g = target` in a matrix realization.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConjugacyWitness {
    pub id: &'static str,
    pub algebra: &'static str,
    /// Subalgebra containing `source`, checked at the sampled parameters.
    pub subalgebra: Option<(&'static str, &'static str)>,
    pub params: &'static [&'static str],
    pub conditions: &'static str,
    pub g: &'static [&'static [&'static str]],
    pub source: &'static str,
    pub target: &'static str,
    pub ring: Ring,
    /// Corrections applied to the printed data, if any.
    pub note: &'static str,
}

/// A conjugacy claim backed only by the class of the elements.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClassWitness {
    pub id: &'static str,
    pub algebra: &'static str,
    pub params: &'static [&'static str],
    pub conditions: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    /// Require equal Killing values rather than agreement up to a positive
    /// multiple.
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow {
    pub id: String,
    pub kind: &'static str,
    pub sample: String,
    pub ok: bool,
    pub detail: String,
}

pub const CONJUGACY_WITNESSES: &[ConjugacyWitness] = &[
    ConjugacyWitness {
        id: "sl3R.h26",
        algebra: "sl3R",
        subalgebra: Some(("sl3R", "h26")),
        params: &[],
        conditions: "",
        g: &[&["0", "0", "1"], &["1", "-1/2", "0"], &["1", "1/2", "0"]],
        source: "-e5 + e8",
        target: "1/2*e1 + 2*e3",
        ring: Ring::Rational,
        note: "",
    },
    ConjugacyWitness {
        id: "sl3R.h32",
        algebra: "sl3R",
        subalgebra: Some(("sl3R", "h32")),
        params: &[],
        conditions: "",
        g: &[&["0", "0", "1"], &["0", "-1/2", "0"], &["2", "2", "0"]],
        source: "e2 + e8",
        target: "e1 + 2*e7 - e8 + 2*e4",
        ring: Ring::Rational,
        note: "",
    },
    ConjugacyWitness {
        id: "sl3R.h35",
        algebra: "sl3R",
        subalgebra: Some(("sl3R", "h35")),
        params: &["b"],
        conditions: "b > 0",
        g: &[&["0", "0", "1"], &["1", "-b", "0"], &["0", "1", "0"]],
        source: "e6 - e7 + b*(e5 + e8)",
        target: "(b^2 + 1)*e1 - e3 + 2*b*(e5 - e8)",
        ring: Ring::Rational,
        note: "",
    },
    ConjugacyWitness {
        id: "sl3R.h31.1",
        algebra: "sl3R",
        subalgebra: Some(("sl3R", "h31")),
        params: &["a"],
        conditions: "a notin {0, 1, -1/2, -2}",
        g: &[&["1", "-1/a", "-1"], &["1", "(a + 1)/a", "-1"], &["0", "-a/(2 + a)", "a/(2 + a)"]],
        source: "e8 + 1/a*e5",
        target: "(-a^2 + a + 1)/a^2*e1 + e2 + e3 + e4 - e6 - e7",
        ring: Ring::Rational,
        note: "entry (3,2) of g is printed as a/(2+a); only -a/(2+a) conjugates",
    },
    ConjugacyWitness {
        id: "sl3R.h31.2",
        algebra: "sl3R",
        subalgebra: None,
        params: &["b", "c", "k"],
        conditions: "k != 0; l := k^2*c + k + b; l != 0",
        g: &[
            &["0", "-(3*k^2*c + k + 3*b)/(3*k*l)", "1"],
            &["k", "1", "0"],
            &["-k/(3*l)", "1/(3*l)", "1"],
        ],
        source: "l*(e5 - 2*e8)",
        target: "e1 + b*(e5 - 2*e8) + 3*l*(e2 - k*e6) + k^2*(e3 + c*(e5 - 2*e8)) + (3*k^2*c + k + 3*b)/(3*l)*(k*e4 - e7)",
        ring: Ring::Rational,
        note: "printed target has k*(e3 + c*(e5 - 2*e8)); it is not conjugate to the source unless k = 1, k^2 is needed",
    },
    ConjugacyWitness {
        id: "sl3R.h31.3",
        algebra: "sl3R",
        subalgebra: None,
        params: &["b", "c", "k"],
        conditions: "n := k^2*b - 2*k + c; n != 0",
        g: &[&["0", "2/(3*n)", "(-3*k^2*b + 2*k - 3*c)/(3*n)"], &["1", "1", "-k"], &["1", "0", "k"]],
        source: "n*(e5 - 1/2*e8)",
        target: "-k*e1 + k^2*(e2 + b*(e5 - 1/2*e8)) + (3*k^2*b - 2*k + 3*c)/2*(e3 - k*e6) + e4 + c*(e5 - 1/2*e8) + e7",
        ring: Ring::Rational,
        note: "entry (1,3) of g is printed with 2*b in the numerator; 2*k is needed",
    },
    ConjugacyWitness {
        id: "sl3R.h31.4",
        algebra: "sl3R",
        subalgebra: None,
        params: &["b", "c", "k"],
        conditions: "m := k^2*b + k + c; m != 0",
        g: &[&["1", "1", "-k"], &["-1/(3*m)", "0", "(-3*c - k - 3*k^2*b)/(3*m)"], &["0", "1", "k"]],
        source: "m*(e5 + e8)",
        target: "(3*c + 3*k^2*b + k)*(k*e2 - e1) + e4 - k*e3 + e7 + c*(e5 + e8) + k^2*(e6 + b*(e5 + e8))",
        ring: Ring::Rational,
        note: "",
    },
    ConjugacyWitness {
        id: "su21.h7",
        algebra: "su21",
        subalgebra: Some(("su21", "h7")),
        params: &[],
        conditions: "",
        g: &[&["0", "1", "0"], &["1", "0", "sqrt2"], &["sqrt2", "0", "1"]],
        source: "e7",
        target: "e4",
        ring: Ring::Sqrt2,
        note: "",
    },
];

pub const CLASS_WITNESSES: &[ClassWitness] = &[
    ClassWitness { id: "sl2C.h4", algebra: "sl2C", params: &[], conditions: "", source: "e1", target: "e2", exact: true },
    ClassWitness { id: "su21.h6", algebra: "su21", params: &[], conditions: "", source: "e2", target: "e1", exact: true },
    ClassWitness { id: "su21.h12", algebra: "su21", params: &[], conditions: "", source: "e1", target: "e2", exact: true },
    ClassWitness { id: "su21.case6", algebra: "su21", params: &[], conditions: "", source: "e8", target: "e7", exact: true },
    ClassWitness {
        id: "su21.case7",
        algebra: "su21",
        params: &["c"],
        conditions: "c != 0",
        source: "e6 + e7 + c*e8",
        target: "-(e7 - 1/c*e8)",
        exact: false,
    },
    ClassWitness { id: "sl2xsl2.h3", algebra: "sl2xsl2", params: &[], conditions: "", source: "y1", target: "y2", exact: true },
    ClassWitness { id: "sl2xsl2.h9", algebra: "sl2xsl2", params: &[], conditions: "", source: "x1", target: "x2", exact: true },
    ClassWitness { id: "sl2xsl2.h13", algebra: "sl2xsl2", params: &[], conditions: "", source: "x1 + y1", target: "x2 + y2", exact: true },
    ClassWitness {
        id: "sl2xsl2.h14",
        algebra: "sl2xsl2",
        params: &[],
        conditions: "",
        source: "x1 + y2 + y3",
        target: "x2 + y2 + y3",
        exact: true,
    },
    ClassWitness { id: "sl2xso3.h16", algebra: "sl2xso3", params: &[], conditions: "", source: "x1 + y3", target: "x2 + y1", exact: true },
    ClassWitness {
        id: "sl2xso3.h17",
        algebra: "sl2xso3",
        params: &[],
        conditions: "",
        source: "x2 + x3 + y3",
        target: "x2 + x3 + y1",
        exact: true,
    },
    ClassWitness { id: "sl2xso3.h18", algebra: "sl2xso3", params: &[], conditions: "", source: "x3 + y3", target: "x3 + y1", exact: true },
];

fn parse_matrix<F: Field>(rows: &[&[&str]], vals: &Assignment) -> Result<Mat<F>> {
    let scalars: Vec<(String, F)> = vals.iter().map(|(n, v)| (n.clone(), F::from_q(v.clone()))).collect();
    let env = BasisEnv { labels: &[], scalars: &scalars };
    rows.iter()
        .map(|r| r.iter().map(|e| Ok(eval_str::<F>(e, &env)?.scalar()?)).collect::<Result<Vec<F>>>())
        .collect()
}

fn fmt_sample(vals: &Assignment) -> String {
    vals.iter().map(|(n, v)| format!("{n}={}", fmt_q(v))).collect::<Vec<_>>().join(", ")
}

fn samples(params: &[&str], conds: &str, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Assignment>> {
    if params.is_empty() {
        return Ok(vec![vec![]]);
    }
    let c = catalog::parse_conditions(conds)?;
    (0..n).map(|_| conditions::sample_nonzero(params, &c, &vec![], rng)).collect()
}

/// Class of each simple summand; a single entry for simple algebras.
fn component_classes(alg: &LieAlgebra, x: &[Q]) -> Result<Vec<(ClassKind, Q)>> {
    let n = alg.dim();
    let parts: Vec<std::ops::Range<usize>> =
        if alg.name().starts_with("sl2x") { vec![0..3, 3..6] } else { vec![0..n] };
    parts
        .into_iter()
        .map(|r| {
            let mut v = vec![Q::from_integer(0.into()); n];
            for i in r {
                v[i] = x[i].clone();
            }
            let c = alg.classify(&alg.element(v)?)?;
            Ok((c.kind, c.killing))
        })
        .collect()
}

fn conj_one<R: Field>(alg: &LieAlgebra, w: &ConjugacyWitness, vals: &Assignment) -> Result<(bool, String)> {
    let g: Mat<Cplx<R>> = parse_matrix(w.g, vals)?;
    let x = alg.parse_vector(w.source, vals)?;
    let y = alg.parse_vector(w.target, vals)?;
    let got = conjugate_exact::<R>(alg, &g, &x)?;
    let want: Vec<R> = y.iter().map(|v| R::from_q(v.clone())).collect();
    if got != want {
        let shown: Vec<String> = got.iter().map(|v| v.to_string()).collect();
        return Ok((false, format!("Ad_g x = ({})", shown.join(", "))));
    }
    let cx = component_classes(alg, &x)?;
    let cy = component_classes(alg, &y)?;
    if cx != cy {
        return Ok((false, format!("classes differ: {cx:?} vs {cy:?}")));
    }
    if let Some((a, h)) = w.subalgebra {
        let def = catalog::subalgebra(a, h)?;
        let hp: Assignment = vals.iter().filter(|(n, _)| def.params.contains(&n.as_str())).cloned().collect();
        let hs = Subspace::span(alg, &def.vectors(alg, &hp)?);
        if !hs.contains(&x) {
            return Ok((false, format!("source is not in {h}")));
        }
    }
    Ok((true, format!("Ad_g({}) = {}; class {:?}", w.source, w.target, cx[0].0)))
}

/// Checks one witness at `n` admissible parameter samples.
pub fn verify_conjugacy(w: &ConjugacyWitness, n: usize, rng: &mut ChaCha8Rng) -> Vec<WitnessRow> {
    let mut rows = vec![];
    let alg = match catalog::load_algebra(w.algebra) {
        Ok(a) => a,
        Err(e) => {
            return vec![WitnessRow { id: w.id.into(), kind: "conjugacy", sample: String::new(), ok: false, detail: e.to_string() }]
        }
    };
    let vals = match samples(w.params, w.conditions, n, rng) {
        Ok(v) => v,
        Err(e) => {
            return vec![WitnessRow { id: w.id.into(), kind: "conjugacy", sample: String::new(), ok: false, detail: e.to_string() }]
        }
    };
    for v in vals {
        let r = match w.ring {
            Ring::Rational => conj_one::<Q>(&alg, w, &v),
            Ring::Sqrt2 => conj_one::<QSqrt2>(&alg, w, &v),
        };
        let (ok, detail) = r.unwrap_or_else(|e| (false, e.to_string()));
        rows.push(WitnessRow { id: w.id.into(), kind: "conjugacy", sample: fmt_sample(&v), ok, detail });
    }
    rows
}

fn class_one(alg: &LieAlgebra, w: &ClassWitness, vals: &Assignment) -> Result<(bool, String)> {
    let x = alg.parse_vector(w.source, vals)?;
    let y = alg.parse_vector(w.target, vals)?;
    let cx = component_classes(alg, &x)?;
    let cy = component_classes(alg, &y)?;
    let same_kind = cx.iter().zip(&cy).all(|(a, b)| a.0 == b.0);
    let ok = if w.exact {
        cx == cy
    } else {
        // equal up to one common positive factor
        same_kind
            && cx.iter().zip(&cy).all(|(a, b)| a.1.is_zero() == b.1.is_zero())
            && proportional(&cx, &cy)
    };
    let show = |c: &[(ClassKind, Q)]| c.iter().map(|(k, v)| format!("{k} k={}", fmt_q(v))).collect::<Vec<_>>().join(" | ");
    Ok((ok, format!("{}: {}  vs  {}: {}", w.source, show(&cx), w.target, show(&cy))))
}

fn proportional(a: &[(ClassKind, Q)], b: &[(ClassKind, Q)]) -> bool {
    let mut ratio: Option<Q> = None;
    for ((_, x), (_, y)) in a.iter().zip(b) {
        if y.is_zero() {
            continue;
        }
        let r = x / y;
        if !r.is_positive() {
            return false;
        }
        match &ratio {
            Some(q) if *q != r => return false,
            _ => ratio = Some(r),
        }
    }
    true
}

pub fn verify_class(w: &ClassWitness, n: usize, rng: &mut ChaCha8Rng) -> Vec<WitnessRow> {
    let row = |sample: String, r: Result<(bool, String)>| {
        let (ok, detail) = r.unwrap_or_else(|e| (false, e.to_string()));
        WitnessRow { id: w.id.into(), kind: "class", sample, ok, detail }
    };
    let alg = match catalog::load_algebra(w.algebra) {
        Ok(a) => a,
        Err(e) => return vec![row(String::new(), Err(e))],
    };
    match samples(w.params, w.conditions, n, rng) {
        Ok(vs) => vs.iter().map(|v| row(fmt_sample(v), class_one(&alg, w, v))).collect(),
        Err(e) => vec![row(String::new(), Err(e))],
    }
}

/// Every conjugacy witness, class claim and projective identity.
pub fn verify_all_witnesses(seed: u64, n: usize, k: u32) -> Vec<WitnessRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![];
    for w in CONJUGACY_WITNESSES {
        rows.extend(verify_conjugacy(w, n, &mut rng));
    }
    for w in CLASS_WITNESSES {
        rows.extend(verify_class(w, n, &mut rng));
    }
    rows.extend(projective::check_all(k, n, &mut rng));
    rows
}

/// Numerical sanity check on a witness: `det g ≠ 0` and the float
/// conjugate agrees with the exact one.
pub fn float_residual(w: &ConjugacyWitness, vals: &Assignment) -> Result<f64> {
    let alg = catalog::load_algebra(w.algebra)?;
    let g: Mat<Cplx<QSqrt2>> = parse_matrix(w.g, vals)?;
    let gm = super::to_cmat(&g);
    let x: Vec<f64> = alg.parse_vector(w.source, vals)?.iter().map(crate::field::q_to_f64).collect();
    let y: Vec<f64> = alg.parse_vector(w.target, vals)?.iter().map(crate::field::q_to_f64).collect();
    let ginv = gm.clone().try_inverse().ok_or_else(|| Error::Precondition("singular".into()))?;
    let lhs = ginv * rep_matrix_f64(&alg, &x)? * &gm;
    Ok((lhs - rep_matrix_f64(&alg, &y)?).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h32_witness_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rows = verify_conjugacy(&CONJUGACY_WITNESSES[1], 1, &mut rng);
        assert!(rows.iter().all(|r| r.ok), "{rows:?}");
    }

    #[test]
    fn case2_witness_at_unit_parameters() {
        let alg = catalog::load_algebra("sl3R").unwrap();
        let w = &CONJUGACY_WITNESSES[4];
        let vals: Assignment = vec![
            ("b".into(), crate::field::q(1)),
            ("c".into(), crate::field::q(1)),
            ("k".into(), crate::field::q(1)),
            ("l".into(), crate::field::q(3)),
        ];
        assert!(conj_one::<Q>(&alg, w, &vals).unwrap().0);
    }
}
