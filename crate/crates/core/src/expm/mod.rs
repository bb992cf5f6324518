//! Matrix exponentials, adjoint conjugation through matrix realizations and
//! sl2 canonical forms.

pub mod projective;
pub mod witnesses;

use crate::algebra::{ClassKind, LieAlgebra, MatrixRep};
use crate::error::{Error, Result};
use crate::field::{q_to_f64, Cplx, Field, Q};
use crate::linalg::{self, Mat};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

pub type CMat = DMatrix<Complex64>;

const SMALL: f64 = 1e-8;

/// `C(x)`: `cosh √x` for `x ≥ 0`, `cos √-x` otherwise.
pub fn c_fn(x: f64) -> f64 {
    if x.abs() < SMALL {
        1.0 + x / 2.0 + x * x / 24.0
    } else if x > 0.0 {
        x.sqrt().cosh()
    } else {
        (-x).sqrt().cos()
    }
}

/// `S(x)`: `sinh √x / √x` for `x ≥ 0`, `sin √-x / √-x` otherwise.
pub fn s_fn(x: f64) -> f64 {
    if x.abs() < SMALL {
        1.0 + x / 6.0 + x * x / 120.0
    } else if x > 0.0 {
        let r = x.sqrt();
        r.sinh() / r
    } else {
        let r = (-x).sqrt();
        r.sin() / r
    }
}

pub fn to_cmat<F: Field>(m: &Mat<F>) -> CMat {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| m[i][j].to_c64())
}

fn rep(alg: &LieAlgebra) -> Result<&MatrixRep> {
    alg.rep.as_ref().ok_or_else(|| Error::Precondition(format!("{} has no matrix realization", alg.name())))
}

/// The realization of a float coordinate vector.
pub fn rep_matrix_f64(alg: &LieAlgebra, x: &[f64]) -> Result<CMat> {
    let r = rep(alg)?;
    let mut m = CMat::zeros(r.size, r.size);
    for (c, g) in x.iter().zip(&r.gens) {
        m += to_cmat(g) * Complex64::new(*c, 0.0);
    }
    Ok(m)
}

pub fn killing_f64(alg: &LieAlgebra, x: &[f64], y: &[f64]) -> f64 {
    let g = alg.killing_gram();
    let mut s = 0.0;
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            s += xi * q_to_f64(&g[i][j]) * yj;
        }
    }
    s
}

/// `exp X = C(k(X)) I + S(k(X)) X` for the 2×2 realized 3-dimensional
/// algebras, where `X² = k(X) I`.
pub fn exp_closed(alg: &LieAlgebra, x: &[f64]) -> Result<CMat> {
    let r = rep(alg)?;
    if r.size != 2 || alg.dim() != 3 {
        return Err(Error::Precondition(format!("no closed-form exponential on {}", alg.name())));
    }
    let k = killing_f64(alg, x, x);
    let m = rep_matrix_f64(alg, x)?;
    Ok(CMat::identity(2, 2) * Complex64::new(c_fn(k), 0.0) + m * Complex64::new(s_fn(k), 0.0))
}

fn one_norm(m: &CMat) -> f64 {
    (0..m.ncols()).map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Scaling and squaring with a truncated Taylor series. Fails if the
/// remainder bound cannot be pushed below `tol`.
pub fn exp_series(x: &CMat, tol: f64) -> Result<CMat> {
    if !(tol > 0.0) {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let n = x.nrows();
    let norm = one_norm(x);
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let a = x / Complex64::new(2f64.powi(s), 0.0);
    let an = one_norm(&a);
    let mut sum = CMat::identity(n, n);
    let mut term = CMat::identity(n, n);
    // tail after term k is at most |A|^(k+1)/(k+1)! · 1/(1-|A|)
    let budget = tol / 2f64.powi(s + 1);
    let mut k = 0usize;
    let mut bound = 1.0;
    loop {
        k += 1;
        if k > 200 {
            return Err(Error::Precondition(format!("series did not reach tolerance {tol:e}")));
        }
        term = &term * &a / Complex64::new(k as f64, 0.0);
        sum += &term;
        bound *= an / (k + 1) as f64;
        if bound * 2.0 < budget.max(f64::EPSILON * 1e-3) || an == 0.0 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    Ok(sum)
}

fn lift<R: Field>(m: &Mat<Cplx<Q>>) -> Mat<Cplx<R>> {
    m.iter()
        .map(|row| row.iter().map(|z| Cplx::new(R::from_q(z.re.clone()), R::from_q(z.im.clone()))).collect())
        .collect()
}

/// Real coordinates over `R` of a matrix in the real span of the realization.
pub fn pull_back_in<R: Field>(r: &MatrixRep, m: &Mat<Cplx<R>>) -> Option<Vec<R>> {
    let flat = |a: &Mat<Cplx<R>>| -> Vec<R> {
        let mut v = vec![];
        for row in a {
            for z in row {
                v.push(z.re.clone());
                v.push(z.im.clone());
            }
        }
        v
    };
    let cols: Vec<Vec<R>> = r.gens.iter().map(|g| flat(&lift::<R>(g))).collect();
    let target = flat(m);
    let a: Mat<R> = (0..target.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    linalg::solve(&a, &target)
}

/// Exact `Ad_g x = g⁻¹ X g`, pulled back to coordinates over `R`. This is
/// the convention under which the cataloged witness matrices act.
pub fn conjugate_exact<R: Field>(alg: &LieAlgebra, g: &Mat<Cplx<R>>, x: &[Q]) -> Result<Vec<R>> {
    let r = rep(alg)?;
    let ginv = linalg::inverse(g).ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
    let xm = lift::<R>(&r.matrix(x));
    let y = linalg::mat_mul(&linalg::mat_mul(&ginv, &xm), g);
    pull_back_in(r, &y).ok_or(Error::NotInImage)
}

/// `Ad_g x` for a rational matrix `g`.
pub fn conjugate(alg: &LieAlgebra, g: &Mat<Q>, x: &[Q]) -> Result<Vec<Q>> {
    let gc: Mat<Cplx<Q>> = g.iter().map(|row| row.iter().map(|v| Cplx::real(v.clone())).collect()).collect();
    conjugate_exact(alg, &gc, x)
}

/// Float `Ad_g x = g⁻¹ X g` with the least-squares residual of the pull-back.
pub fn conjugate_f64(alg: &LieAlgebra, g: &CMat, x: &[f64]) -> Result<(Vec<f64>, f64)> {
    let r = rep(alg)?;
    let ginv = g.clone().try_inverse().ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
    let y = ginv * rep_matrix_f64(alg, x)? * g;
    let n2 = r.size * r.size;
    let mut a = DMatrix::<f64>::zeros(2 * n2, r.gens.len());
    for (c, gen) in r.gens.iter().enumerate() {
        let m = to_cmat(gen);
        for i in 0..n2 {
            let z = m[(i / r.size, i % r.size)];
            a[(2 * i, c)] = z.re;
            a[(2 * i + 1, c)] = z.im;
        }
    }
    let b = DVector::from_fn(2 * n2, |i, _| {
        let z = y[(i / 2 / r.size, (i / 2) % r.size)];
        if i % 2 == 0 {
            z.re
        } else {
            z.im
        }
    });
    let sol = a.clone().svd(true, true).solve(&b, 1e-14).map_err(|e| Error::Precondition(e.to_string()))?;
    let res = (&a * &sol - &b).norm();
    Ok((sol.iter().copied().collect(), res))
}

#[derive(Clone, Debug)]
pub struct Sl2Canonical {
    pub kind: ClassKind,
    /// Real 2×2 matrix with `|det g| = 1`.
    pub g: DMatrix<f64>,
    pub mu: f64,
    /// `e3`, `e1` or `e2 + e3` in coordinates.
    pub canonical: [f64; 3],
    /// `max |Ad_g x - mu·canonical|`.
    pub residual: f64,
}

/// Conjugates a nonzero element of sl2R to a positive multiple of `e3`,
/// `e1` or `e2 + e3`. `g` is taken in GL2(R) so that the sign can always be
/// made positive.
pub fn sl2_canonical(alg: &LieAlgebra, x: &[f64]) -> Result<Sl2Canonical> {
    if alg.name() != "sl2R" {
        return Err(Error::Precondition("sl2_canonical needs sl2R".into()));
    }
    let scale = x.iter().map(|v| v.abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::Precondition("zero element has no canonical form".into()));
    }
    let k = killing_f64(alg, x, x);
    let m = rep_matrix_f64(alg, x)?.map(|z| z.re);
    let col = |v: [f64; 2]| DVector::from_row_slice(&v);
    let tol = 1e-12 * scale * scale;
    let (kind, p1, p2, mu, canonical) = if k > tol {
        let r = k.sqrt();
        let eig = |l: f64| -> DVector<f64> {
            // (M - l I) v = 0, read off a nonzero row
            let (a, b) = (m[(0, 0)] - l, m[(0, 1)]);
            if a.abs() + b.abs() > 1e-12 * scale {
                col([-b, a])
            } else {
                col([m[(1, 1)] - l, -m[(1, 0)]])
            }
        };
        let (mut p1, mut p2) = (eig(r), eig(-r));
        if p1.iter().find(|v| v.abs() > 1e-12 * scale).is_some_and(|v| *v < 0.0) {
            p1 = -p1;
        }
        if p1[0] * p2[1] - p1[1] * p2[0] < 0.0 {
            p2 = -p2;
        }
        (ClassKind::HyperbolicOrLoxodromic, p1, p2, r, [1.0, 0.0, 0.0])
    } else if k < -tol {
        let w = (-k).sqrt();
        let u = col([1.0, 0.0]);
        let p2 = -(&m * &u) / w;
        (ClassKind::Elliptic, u, p2, w, [0.0, 0.0, 1.0])
    } else {
        let mut p2 = col([1.0, 0.0]);
        if (&m * &p2).norm() < 1e-9 * scale {
            p2 = col([0.0, 1.0]);
        }
        let p1 = &m * &p2 / 2.0;
        (ClassKind::Parabolic, p1, p2, 1.0, [0.0, 1.0, 1.0])
    };
    let mut g = DMatrix::from_columns(&[p1, p2]);
    let d = g.determinant();
    if d.abs() < 1e-300 {
        return Err(Error::Precondition("degenerate eigenbasis".into()));
    }
    g /= d.abs().sqrt();
    let (y, _) = conjugate_f64(alg, &g.map(|v| Complex64::new(v, 0.0)), x)?;
    let residual = (0..3).map(|i| (y[i] - mu * canonical[i]).abs()).fold(0.0, f64::max);
    Ok(Sl2Canonical { kind, g, mu, canonical, residual })
}

/// Agreement of the closed form with the series and the group laws on random
/// elements.
#[derive(Clone, Debug, Serialize)]
pub struct ExpCheck {
    pub algebra: String,
    pub samples: usize,
    pub max_norm: f64,
    /// `max |exp_closed - exp_series|`, entrywise.
    pub closed_vs_series: f64,
    /// `max |exp((s+t)X) - exp(sX) exp(tX)|` relative to `max(1, |exp|)`.
    pub one_parameter: f64,
    pub det: f64,
}

fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `n` elements with Euclidean coordinate norm at most `max_norm`.
pub fn exp_check(alg: &LieAlgebra, n: usize, max_norm: f64, seed: u64) -> Result<ExpCheck> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = ExpCheck {
        algebra: alg.name().into(),
        samples: n,
        max_norm,
        closed_vs_series: 0.0,
        one_parameter: 0.0,
        det: 0.0,
    };
    for _ in 0..n {
        let dir: Vec<f64> = (0..alg.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let len = dir.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-12);
        let r = rng.gen_range(0.0..=max_norm);
        let x: Vec<f64> = dir.iter().map(|v| v * r / len).collect();
        let closed = exp_closed(alg, &x)?;
        let series = exp_series(&rep_matrix_f64(alg, &x)?, 1e-14)?;
        out.closed_vs_series = out.closed_vs_series.max(max_abs(&(&closed - &series)));
        out.det = out.det.max((closed.determinant() - Complex64::new(1.0, 0.0)).norm());
        let (s, t) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let at = |c: f64| exp_closed(alg, &x.iter().map(|v| v * c).collect::<Vec<_>>());
        let sum = at(s + t)?;
        let prod = at(s)? * at(t)?;
        out.one_parameter = out.one_parameter.max(max_abs(&(&sum - &prod)) / max_abs(&sum).max(1.0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_algebra;
    use crate::field::q;

    #[test]
    fn c_and_s_satisfy_pythagoras() {
        for x in [-30.0, -2.0, -1e-9, 0.0, 1e-9, 0.5, 4.0, 20.0] {
            let (c, s) = (c_fn(x), s_fn(x));
            assert!((c * c - x * s * s - 1.0).abs() < 1e-12 * c * c.max(1.0), "{x}");
        }
        assert_eq!(c_fn(0.0), 1.0);
        assert_eq!(s_fn(0.0), 1.0);
    }

    #[test]
    fn pi_e3_is_minus_identity() {
        let a = load_algebra("sl2R").unwrap();
        let e = exp_closed(&a, &[0.0, 0.0, std::f64::consts::PI]).unwrap();
        assert!((e + CMat::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn closed_form_diagonal_for_e1() {
        let a = load_algebra("sl2R").unwrap();
        for t in [0.5, 1.0, 2.0] {
            let e = exp_closed(&a, &[t, 0.0, 0.0]).unwrap();
            let s = exp_series(&rep_matrix_f64(&a, &[t, 0.0, 0.0]).unwrap(), 1e-14).unwrap();
            assert!((e[(0, 0)].re - t.exp()).abs() < 1e-12 * t.exp());
            assert!((e[(1, 1)].re - (-t).exp()).abs() < 1e-12);
            assert!((e - s).norm() < 1e-12);
        }
    }

    #[test]
    fn series_on_sl3_diagonal() {
        let a = load_algebra("sl3R").unwrap();
        let x = a.parse_vector("e5 - e8", &[]).unwrap();
        let xf: Vec<f64> = x.iter().map(q_to_f64).collect();
        let e = exp_series(&rep_matrix_f64(&a, &xf).unwrap(), 1e-14).unwrap();
        let want = [1.0, 1f64.exp(), (-1f64).exp()];
        for i in 0..3 {
            for j in 0..3 {
                let w = if i == j { want[i] } else { 0.0 };
                assert!((e[(i, j)] - Complex64::new(w, 0.0)).norm() < 1e-12);
            }
        }
        assert!(exp_series(&CMat::zeros(3, 3), 0.0).is_err());
    }

    #[test]
    fn conjugation_by_identity_and_brackets() {
        let a = load_algebra("sl3R").unwrap();
        let id = linalg::identity::<Q>(3);
        let x = a.parse_vector("e1 - 2*e5 + e7", &[]).unwrap();
        assert_eq!(conjugate(&a, &id, &x).unwrap(), x);
        let g = vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(3)], vec![q(1), q(0), q(1)]];
        let y = a.parse_vector("e2 + e6 - e8", &[]).unwrap();
        let lhs = conjugate(&a, &g, &a.bracket_coords(&x, &y)).unwrap();
        let rhs = a.bracket_coords(&conjugate(&a, &g, &x).unwrap(), &conjugate(&a, &g, &y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_agrees_with_series() {
        for name in ["sl2R", "so3"] {
            let c = exp_check(&load_algebra(name).unwrap(), 100, 5.0, 11).unwrap();
            assert!(c.closed_vs_series < 1e-10 && c.one_parameter < 1e-10 && c.det < 1e-10, "{c:?}");
        }
    }

    #[test]
    fn canonical_forms() {
        let a = load_algebra("sl2R").unwrap();
        let c = sl2_canonical(&a, &[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(c.kind, ClassKind::Elliptic);
        assert!((c.g.clone() - DMatrix::identity(2, 2)).norm() < 1e-12);
        let c = sl2_canonical(&a, &[0.0, 1.0, 0.0]).unwrap();
        assert_eq!(c.kind, ClassKind::HyperbolicOrLoxodromic);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        // rotation by π/4
        assert!((c.g[(0, 0)] - h).abs() < 1e-12 && (c.g[(0, 1)] + h).abs() < 1e-12);
        assert!((c.g[(1, 0)] - h).abs() < 1e-12 && (c.g[(1, 1)] - h).abs() < 1e-12);
        assert!(c.residual < 1e-10);
        let c = sl2_canonical(&a, &[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(c.kind, ClassKind::Parabolic);
        assert!(c.residual < 1e-10);
        assert!(sl2_canonical(&a, &[0.0; 3]).is_err());
    }
}
