//! The cataloged algebras, built from their matrix realizations.

use crate::algebra::{default_labels, LieAlgebra, MatrixRep};
use crate::error::{Error, Result};
use crate::field::{q, qf, Cplx, Q, CQ};
use crate::linalg::{self, Mat};

pub const ALGEBRAS: &[&str] = &["sl2R", "so3", "sl2C", "sl3R", "su21", "sl2xsl2", "sl2xso3"];

fn c(re: i64, im: i64) -> CQ {
    Cplx::new(q(re), q(im))
}

fn mat(n: usize, entries: &[(usize, usize, CQ)]) -> Mat<CQ> {
    let mut m = linalg::zeros(n, n);
    for (i, j, v) in entries {
        m[*i][*j] = v.clone();
    }
    m
}

/// `e1 = diag(1,-1)`, `e2 = [[0,1],[1,0]]`, `e3 = [[0,1],[-1,0]]`.
pub fn sl2_matrices() -> Vec<Mat<CQ>> {
    vec![
        mat(2, &[(0, 0, c(1, 0)), (1, 1, c(-1, 0))]),
        mat(2, &[(0, 1, c(1, 0)), (1, 0, c(1, 0))]),
        mat(2, &[(0, 1, c(1, 0)), (1, 0, c(-1, 0))]),
    ]
}

fn times_i(m: &Mat<CQ>) -> Mat<CQ> {
    linalg::mat_scale(m, &CQ::i())
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

pub fn sl2r() -> LieAlgebra {
    LieAlgebra::from_rep("sl2R", default_labels(3), MatrixRep { size: 2, gens: sl2_matrices() }, qf(1, 8))
        .expect("sl2R realization")
}

/// Basis `i e1, i e2, e3` of su(2) ≅ so3.
pub fn so3() -> LieAlgebra {
    let s = sl2_matrices();
    let gens = vec![times_i(&s[0]), times_i(&s[1]), s[2].clone()];
    LieAlgebra::from_rep("so3", labels(&["ie1", "ie2", "e3"]), MatrixRep { size: 2, gens }, qf(1, 8))
        .expect("so3 realization")
}

/// sl2(C) as a 6-dimensional real algebra with basis `e1, e2, e3, ie1, ie2, ie3`.
pub fn sl2c() -> LieAlgebra {
    let s = sl2_matrices();
    let mut gens = s.clone();
    gens.extend(s.iter().map(times_i));
    LieAlgebra::from_rep(
        "sl2C",
        labels(&["e1", "e2", "e3", "ie1", "ie2", "ie3"]),
        MatrixRep { size: 2, gens },
        qf(1, 16),
    )
    .expect("sl2C realization")
}

/// `λ ↦ [[-λ5-λ8, λ1, λ2], [λ3, λ5, λ6], [λ4, λ7, λ8]]`.
pub fn sl3r() -> LieAlgebra {
    let r = |x: i64| c(x, 0);
    let gens = vec![
        mat(3, &[(0, 1, r(1))]),
        mat(3, &[(0, 2, r(1))]),
        mat(3, &[(1, 0, r(1))]),
        mat(3, &[(2, 0, r(1))]),
        mat(3, &[(0, 0, r(-1)), (1, 1, r(1))]),
        mat(3, &[(1, 2, r(1))]),
        mat(3, &[(2, 1, r(1))]),
        mat(3, &[(0, 0, r(-1)), (2, 2, r(1))]),
    ];
    LieAlgebra::from_rep("sl3R", default_labels(8), MatrixRep { size: 3, gens }, qf(1, 12))
        .expect("sl3R realization")
}

/// ```text
/// [[-λ1 i,     -λ2-λ3 i,  λ4+λ5 i],
///  [λ2-λ3 i,   (λ1+λ6) i, λ7+λ8 i],
///  [λ4-λ5 i,   λ7-λ8 i,   -λ6 i  ]]
/// ```
pub fn su21() -> LieAlgebra {
    let gens = vec![
        mat(3, &[(0, 0, c(0, -1)), (1, 1, c(0, 1))]),
        mat(3, &[(0, 1, c(-1, 0)), (1, 0, c(1, 0))]),
        mat(3, &[(0, 1, c(0, -1)), (1, 0, c(0, -1))]),
        mat(3, &[(0, 2, c(1, 0)), (2, 0, c(1, 0))]),
        mat(3, &[(0, 2, c(0, 1)), (2, 0, c(0, -1))]),
        mat(3, &[(1, 1, c(0, 1)), (2, 2, c(0, -1))]),
        mat(3, &[(1, 2, c(1, 0)), (2, 1, c(1, 0))]),
        mat(3, &[(1, 2, c(0, 1)), (2, 1, c(0, -1))]),
    ];
    LieAlgebra::from_rep("su21", default_labels(8), MatrixRep { size: 3, gens }, qf(1, 12))
        .expect("su21 realization")
}

fn sum_labels() -> Vec<String> {
    labels(&["x1", "x2", "x3", "y1", "y2", "y3"])
}

/// sl2 ⊕ sl2 with `x_i = (e_i, 0)` and `y_i = (0, e_i)`.
pub fn sl2xsl2() -> LieAlgebra {
    let mut a = sl2r().direct_sum(&sl2r(), "sl2xsl2", sum_labels(), qf(1, 8)).expect("direct sum");
    a.notes.push(("epsilon".into(), "1".into()));
    a
}

/// sl2 ⊕ so3 with `y1 = (0, i e1)`, `y2 = (0, i e2)`, `y3 = (0, e3)`.
pub fn sl2xso3() -> LieAlgebra {
    let mut a = sl2r().direct_sum(&so3(), "sl2xso3", sum_labels(), qf(1, 8)).expect("direct sum");
    a.notes.push(("epsilon".into(), "i".into()));
    a
}

pub fn load_algebra(name: &str) -> Result<LieAlgebra> {
    Ok(match name {
        "sl2R" => sl2r(),
        "so3" => so3(),
        "sl2C" => sl2c(),
        "sl3R" => sl3r(),
        "su21" => su21(),
        "sl2xsl2" => sl2xsl2(),
        "sl2xso3" => sl2xso3(),
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    })
}

/// Bracket tables as printed, one `(x, y, [x, y])` triple per pair.
pub fn printed_table(name: &str) -> Option<&'static [(&'static str, &'static str, &'static str)]> {
    match name {
        "sl2R" => Some(SL2_TABLE),
        "sl3R" => Some(SL3_TABLE),
        "su21" => Some(SU21_TABLE),
        _ => None,
    }
}

const SL2_TABLE: &[(&str, &str, &str)] = &[("e1", "e2", "2*e3"), ("e1", "e3", "2*e2"), ("e3", "e2", "2*e1")];

const SL3_TABLE: &[(&str, &str, &str)] = &[
    ("e1", "e2", "0*e1"),
    ("e1", "e7", "0*e1"),
    ("e2", "e6", "0*e1"),
    ("e3", "e4", "0*e1"),
    ("e3", "e6", "0*e1"),
    ("e4", "e7", "0*e1"),
    ("e5", "e8", "0*e1"),
    ("e1", "e6", "e2"),
    ("e2", "e5", "e2"),
    ("e2", "e8", "2*e2"),
    ("e1", "e8", "e1"),
    ("e2", "e7", "e1"),
    ("e1", "e5", "2*e1"),
    ("e4", "e6", "-e3"),
    ("e3", "e8", "-e3"),
    ("e3", "e5", "-2*e3"),
    ("e3", "e7", "-e4"),
    ("e4", "e5", "-e4"),
    ("e4", "e8", "-2*e4"),
    ("e6", "e8", "e6"),
    ("e5", "e6", "e6"),
    ("e3", "e2", "e6"),
    ("e1", "e4", "-e7"),
    ("e5", "e7", "-e7"),
    ("e7", "e8", "-e7"),
    ("e1", "e3", "-e5"),
    ("e2", "e4", "-e8"),
    ("e6", "e7", "e5 - e8"),
];

const SU21_TABLE: &[(&str, &str, &str)] = &[
    ("e1", "e6", "0*e1"),
    ("e3", "e2", "2*e1"),
    ("e4", "e5", "2*(e1 - e6)"),
    ("e8", "e7", "2*e6"),
    ("e6", "e3", "e2"),
    ("e7", "e4", "e2"),
    ("e8", "e5", "e2"),
    ("e1", "e3", "2*e2"),
    ("e2", "e6", "e3"),
    ("e4", "e8", "e3"),
    ("e7", "e5", "e3"),
    ("e2", "e1", "2*e3"),
    ("e7", "e2", "e4"),
    ("e3", "e8", "e4"),
    ("e5", "e6", "e4"),
    ("e1", "e5", "e4"),
    ("e8", "e2", "e5"),
    ("e7", "e3", "e5"),
    ("e6", "e4", "e5"),
    ("e4", "e1", "e5"),
    ("e2", "e4", "e7"),
    ("e3", "e5", "e7"),
    ("e8", "e1", "e7"),
    ("e8", "e6", "2*e7"),
    ("e2", "e5", "e8"),
    ("e4", "e3", "e8"),
    ("e1", "e7", "e8"),
    ("e6", "e7", "2*e8"),
];

/// A disagreement between a printed bracket and the realization.
#[derive(Clone, Debug)]
pub struct TableDiff {
    pub pair: (String, String),
    pub printed: String,
    pub derived: String,
}

/// Compares the printed table with the derived constants. Also reports
/// unordered pairs the table does not cover.
pub fn compare_printed(a: &LieAlgebra) -> Result<(Vec<TableDiff>, Vec<(String, String)>)> {
    let table = printed_table(a.name()).ok_or_else(|| Error::UnknownAlgebra(a.name().to_string()))?;
    let n = a.dim();
    let mut covered = vec![vec![false; n]; n];
    let mut diffs = vec![];
    for (x, y, v) in table {
        let i = a.label_index(x).ok_or_else(|| Error::Catalog(format!("label {x}")))?;
        let j = a.label_index(y).ok_or_else(|| Error::Catalog(format!("label {y}")))?;
        covered[i][j] = true;
        covered[j][i] = true;
        let printed: Vec<Q> = a.parse_vector(v, &[])?;
        let derived = a.structure(i, j);
        if printed != derived {
            diffs.push(TableDiff {
                pair: (x.to_string(), y.to_string()),
                printed: a.format_vector(&printed),
                derived: a.format_vector(derived),
            });
        }
    }
    let mut missing = vec![];
    for i in 0..n {
        for j in i + 1..n {
            if !covered[i][j] {
                missing.push((a.labels[i].clone(), a.labels[j].clone()));
            }
        }
    }
    Ok((diffs, missing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::trace;
    use num_traits::Zero;

    #[test]
    fn all_algebras_satisfy_jacobi() {
        for name in ALGEBRAS {
            let a = load_algebra(name).unwrap();
            a.validate().unwrap();
        }
    }

    #[test]
    fn printed_tables_agree_with_matrices() {
        for name in ["sl2R", "sl3R", "su21"] {
            let a = load_algebra(name).unwrap();
            let (diffs, missing) = compare_printed(&a).unwrap();
            assert!(diffs.is_empty(), "{name}: {diffs:?}");
            assert!(missing.is_empty(), "{name}: {missing:?}");
        }
    }

    // Independent oracle: ν·tr(ad x ad y) against the matrix trace form.
    #[test]
    fn killing_normalizations() {
        let su = su21();
        let r = su.rep.as_ref().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let m = linalg::mat_mul(&r.gens[i], &r.gens[j]);
                let t = trace(&m);
                assert!(t.im.is_zero());
                assert_eq!(su.killing_gram()[i][j], t.re * qf(1, 2));
            }
        }
        let s3 = sl3r();
        let r = s3.rep.as_ref().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let t = trace(&linalg::mat_mul(&r.gens[i], &r.gens[j]));
                assert_eq!(s3.killing_gram()[i][j], t.re * qf(1, 2));
            }
        }
        // sl2C: Killing form of the realification is twice the real part of the complex one.
        let c = sl2c();
        assert_eq!(c.trace_form(&c.basis(0).coords, &c.basis(0).coords), q(16));
        assert_eq!(c.killing(&c.basis(0), &c.basis(0)).unwrap(), q(1));
        let o = so3();
        for i in 0..3 {
            assert_eq!(o.killing(&o.basis(i), &o.basis(i)).unwrap(), q(-1));
        }
    }

    #[test]
    fn su21_quadratic_form() {
        // ½ tr(X²) on the diagonal part gives -λ1² - λ6² - λ1 λ6, so the
        // cross term has coefficient 1, not 2
        let a = su21();
        let x: Vec<Q> = (1..=8).map(q).collect();
        let expect = q(-1 - 4 - 9 - 36 + 16 + 25 + 49 + 64 - 6);
        assert_eq!(a.killing_coords(&x, &x), expect);
        let e16 = a.parse_element("e1 + e6", &[]).unwrap();
        assert_eq!(a.killing(&e16, &e16).unwrap(), q(-3));
    }
}
