//! The hyperbolic plane loop on symmetric positive-definite matrices of
//! determinant one.

use super::CMat;
use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector, SymmetricEigen};

pub fn rotation(t: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[t.cos(), t.sin(), -t.sin(), t.cos()])
}

/// Angle `θ` in `(-π/2, π/2]` with `o = ±exp(θ e3)`.
pub fn angle(o: &DMatrix<f64>) -> f64 {
    let mut t = o[(0, 1)].atan2(o[(0, 0)]);
    let half = std::f64::consts::FRAC_PI_2;
    if t > half {
        t -= std::f64::consts::PI;
    } else if t <= -half {
        t += std::f64::consts::PI;
    }
    t
}

fn sym_fn(s: &DMatrix<f64>, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
    let e = SymmetricEigen::new(s.clone());
    let mut idx: Vec<usize> = (0..2).collect();
    idx.sort_by(|&i, &j| e.eigenvalues[i].total_cmp(&e.eigenvalues[j]));
    let mut out = DMatrix::zeros(2, 2);
    for i in idx {
        let v = e.eigenvectors.column(i);
        out += f(e.eigenvalues[i]) * &v * v.transpose();
    }
    out
}

/// `exp(a e1 + b e2)`.
pub fn exp_m(a: f64, b: f64) -> DMatrix<f64> {
    sym_fn(&DMatrix::from_row_slice(2, 2, &[a, b, b, -a]), f64::exp)
}

/// Chart coordinates `(a, b)` of a section point.
pub fn log_m(p: &DMatrix<f64>) -> (f64, f64) {
    let l = sym_fn(p, f64::ln);
    (l[(0, 0)], l[(0, 1)])
}

/// `g = P·O` with `P = (g gᵀ)^½` and `O` orthogonal, for real `g` of
/// determinant one.
pub fn polar(g: &CMat) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    if g.iter().any(|z| z.im.abs() > 1e-12) {
        return Err(Error::Precondition("hyperbolic plane factor must be real".into()));
    }
    let r = g.map(|z| z.re);
    let det = r.determinant();
    if (det - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!("determinant {det} is not one")));
    }
    let s = &r * r.transpose();
    let p = sym_fn(&s, f64::sqrt);
    let pinv = sym_fn(&s, |l| 1.0 / l.sqrt());
    Ok((p, pinv * r))
}

fn residual(p: &DMatrix<f64>, b: &DMatrix<f64>, target: (f64, f64)) -> Result<DVector<f64>> {
    let (q, _) = polar(&(p * b).map(|v| num_complex::Complex64::new(v, 0.0)))?;
    let (x, y) = log_m(&q);
    Ok(DVector::from_row_slice(&[x - target.0, y - target.1]))
}

/// Right division `a / b` by damped Newton iteration on the chart
/// `(s, t) ↦ exp(s e1 + t e2)` with a finite-difference Jacobian.
pub fn rdiv(a: &CMat, b: &CMat, max_iter: usize) -> Result<CMat> {
    let (pa, _) = polar(a)?;
    let (pb, _) = polar(b)?;
    let target = log_m(&pa);
    let binv = pb.clone().try_inverse().ok_or_else(|| Error::Precondition("singular".into()))?;
    let (mut p0, _) = polar(&(&pa * &binv).map(|v| num_complex::Complex64::new(v, 0.0)))?;
    let mut v = {
        let (s, t) = log_m(&p0);
        DVector::from_row_slice(&[s, t])
    };
    let mut f = residual(&p0, &pb, target)?;
    let h = 1e-7;
    for _ in 0..max_iter {
        if f.norm() < 1e-13 {
            return Ok(p0.map(|x| num_complex::Complex64::new(x, 0.0)));
        }
        let mut jac = DMatrix::zeros(2, 2);
        for k in 0..2 {
            let mut vp = v.clone();
            let mut vm = v.clone();
            vp[k] += h;
            vm[k] -= h;
            let d = (residual(&exp_m(vp[0], vp[1]), &pb, target)? - residual(&exp_m(vm[0], vm[1]), &pb, target)?) / (2.0 * h);
            jac.set_column(k, &d);
        }
        let step = jac.lu().solve(&f).ok_or_else(|| Error::NoConvergence("right division (singular Jacobian)".into()))?;
        let mut lambda = 1.0;
        loop {
            let cand = &v - lambda * &step;
            let p = exp_m(cand[0], cand[1]);
            let fc = residual(&p, &pb, target)?;
            if fc.norm() < f.norm() || lambda < 1e-6 {
                v = cand;
                p0 = p;
                f = fc;
                break;
            }
            lambda /= 2.0;
        }
    }
    if f.norm() < 1e-10 {
        return Ok(p0.map(|x| num_complex::Complex64::new(x, 0.0)));
    }
    Err(Error::NoConvergence(format!("right division (residual {:.1e})", f.norm())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polar_of_identity_and_of_a_section_point() {
        let id = CMat::identity(2, 2);
        let (p, o) = polar(&id).unwrap();
        assert!((p - DMatrix::identity(2, 2)).norm() < 1e-14);
        assert!((o - DMatrix::identity(2, 2)).norm() < 1e-14);
        let x = exp_m(1.0, 0.0);
        let (p, o) = polar(&x.map(|v| num_complex::Complex64::new(v, 0.0))).unwrap();
        assert!((p - &x).norm() < 1e-12);
        assert!((o - DMatrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn chart_round_trip() {
        let (a, b) = log_m(&exp_m(0.3, -0.7));
        assert!((a - 0.3).abs() < 1e-12 && (b + 0.7).abs() < 1e-12);
    }

    #[test]
    fn angle_is_taken_modulo_pi() {
        assert!((angle(&rotation(0.4)) - 0.4).abs() < 1e-14);
        assert!((angle(&-rotation(0.4)) - 0.4).abs() < 1e-14);
    }
}
