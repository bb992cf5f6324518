//! Numeric loop identities and exact tangent-level tests.

use super::{h2, LoopInstance, Point};
use crate::algebra::{LieAlgebra, Subspace};
use crate::catalog;
use crate::error::Result;
use crate::field::Q;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Exact properties of `(g, h, m)`.
#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub algebra: String,
    pub complement: bool,
    pub reductive: bool,
    pub generating: bool,
    /// `[m, m] ⊆ h`.
    pub bruck: bool,
    /// `[[m, m], m] ⊆ m`.
    pub bol: bool,
}

/// Max deviations over the sampled points.
#[derive(Clone, Debug, Serialize)]
pub struct LoopReport {
    pub name: String,
    pub samples: usize,
    pub decomposition: f64,
    pub identity: f64,
    pub division: f64,
    pub left_a: f64,
    pub bol: f64,
    pub automorphic_inverse: f64,
    pub h_invariance: f64,
    pub tangent: TangentReport,
    pub errors: Vec<String>,
}

impl LoopReport {
    /// Identity, division and left-A within `tol`, and no failed sample.
    pub fn left_a_loop(&self, tol: f64) -> bool {
        self.errors.is_empty() && self.identity <= tol && self.division <= tol && self.left_a <= tol
    }
}

fn subspace(alg: &LieAlgebra, exprs: &[String]) -> Result<Subspace> {
    let v = exprs.iter().map(|e| alg.parse_vector(e, &[])).collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(alg, &v))
}

/// Exact bracket conditions on tangent data.
pub fn tangent_report(algebra: &str, m: &[String], h: &[String]) -> Result<TangentReport> {
    let alg = catalog::load_algebra(algebra)?;
    let ms = subspace(&alg, m)?;
    let hs = subspace(&alg, h)?;
    let mm: Vec<Vec<Q>> = ms
        .basis()
        .iter()
        .flat_map(|x| ms.basis().iter().map(|y| alg.bracket_coords(x, y)).collect::<Vec<_>>())
        .collect();
    let mm_space = Subspace::span(&alg, &mm);
    let bol = mm_space
        .basis()
        .iter()
        .all(|x| ms.basis().iter().all(|y| ms.contains(&alg.bracket_coords(x, y))));
    Ok(TangentReport {
        algebra: algebra.into(),
        complement: ms.is_complement(&hs),
        reductive: alg.is_invariant(&hs, &ms),
        generating: alg.lie_closure(&ms).dim() == alg.dim(),
        bruck: mm.iter().all(|v| hs.contains(v)),
        bol,
    })
}

struct Sample {
    x: Point,
    y: Point,
    u: Point,
    v: Point,
    g: Point,
    h: Point,
}

/// Runs every identity on `n` seeded samples with chart radius `r`.
pub fn check_loop(l: &LoopInstance, n: usize, seed: u64, r: f64) -> Result<LoopReport> {
    let t = l.tangent();
    let tangent = tangent_report(t.algebra, &t.m, &t.h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Sample> = (0..n)
        .map(|_| {
            let g = l.sample_group(&mut rng, r);
            let h = l.decompose(&l.sample_group(&mut rng, r)).expect("group sample").1;
            Sample {
                x: l.sample(&mut rng, r),
                y: l.sample(&mut rng, r),
                u: l.sample(&mut rng, r),
                v: l.sample(&mut rng, r),
                g,
                h,
            }
        })
        .collect();
    let rows: Vec<std::result::Result<[f64; 7], String>> =
        samples.par_iter().map(|s| one_sample(l, s).map_err(|e| e.to_string())).collect();
    let mut acc = [0.0f64; 7];
    let mut errors = vec![];
    for (i, r) in rows.into_iter().enumerate() {
        match r {
            Ok(d) => {
                for k in 0..7 {
                    acc[k] = acc[k].max(d[k]);
                }
            }
            Err(e) => errors.push(format!("sample {i}: {e}")),
        }
    }
    Ok(LoopReport {
        name: l.name.clone(),
        samples: n,
        decomposition: acc[0],
        identity: acc[1],
        division: acc[2],
        left_a: acc[3],
        bol: acc[4],
        automorphic_inverse: acc[5],
        h_invariance: acc[6],
        tangent,
        errors,
    })
}

fn one_sample(l: &LoopInstance, s: &Sample) -> Result<[f64; 7]> {
    let d = |a: &Point, b: &Point| l.dist(a, b);
    let m = |a: &Point, b: &Point| l.mul(a, b);
    let e = l.identity();
    let (x, y, u, v) = (&s.x, &s.y, &s.u, &s.v);

    let (gm, gh) = l.decompose(&s.g)?;
    let decomposition = d(&l.group_mul(&gm, &gh), &s.g).max(d(&l.sigma(&gm)?, &gm));

    let identity = d(&m(&e, x)?, x).max(d(&m(x, &e)?, x));

    let q = l.ldiv(x, y)?;
    let p = l.rdiv(x, y)?;
    let division = d(&m(x, &q)?, y).max(d(&m(&p, y)?, x));

    // λ_{x,y}(z) = (x∗y) \ (x∗(y∗z))
    let xy = m(x, y)?;
    let lam = |z: &Point| -> Result<Point> { l.ldiv(&xy, &m(x, &m(y, z)?)?) };
    let left_a = d(&lam(&m(u, v)?)?, &m(&lam(u)?, &lam(v)?)?);

    let bol = d(&m(x, &m(y, &m(x, u)?)?)?, &m(&m(x, &m(y, x)?)?, u)?);

    let ai = d(&l.inverse(&xy)?, &m(&l.inverse(x)?, &l.inverse(y)?)?);

    let hinv = l.group_inv(&s.h)?;
    let c = l.group_mul(&l.group_mul(&s.h, x), &hinv);
    let h_invariance = d(&l.sigma(&c)?, &c);

    Ok([decomposition, identity, division, left_a, bol, ai, h_invariance])
}

/// For random cosets `aH`, `bH` of `PSL2(R) / SO2`, counts the section points
/// `z` with `z·aH = bH`. Returns the largest count deviation from one and the
/// largest residual of the solutions found.
pub fn sharp_transitivity(n: usize, seed: u64) -> (usize, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = LoopInstance::h2();
    let j = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
    let mut bad = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let re = |p: &Point| p[0].map(|z| z.re);
        let a = re(&l.sample_group(&mut rng, 1.5));
        let b = re(&l.sample_group(&mut rng, 1.5));
        let ainv = a.clone().try_inverse().expect("det one");
        // z = b·R(θ)·a⁻¹ = cos θ·A + sin θ·B must be symmetric positive-definite
        let am = &b * &ainv;
        let bm = &b * &j * &ainv;
        let alpha = am[(0, 1)] - am[(1, 0)];
        let beta = bm[(0, 1)] - bm[(1, 0)];
        let t0 = (-alpha).atan2(beta);
        let mut found = 0;
        for t in [t0, t0 + std::f64::consts::PI] {
            let z = t.cos() * &am + t.sin() * &bm;
            if z.trace() > 0.0 {
                found += 1;
                let zc = z.map(|v| Complex64::new(v, 0.0));
                let Ok((p, _)) = h2::polar(&(&zc * a.map(|v| Complex64::new(v, 0.0)))) else {
                    bad += 1;
                    continue;
                };
                let (pb, _) = h2::polar(&b.map(|v| Complex64::new(v, 0.0))).expect("det one");
                worst = worst.max((p - pb).abs().max()).max((&z - z.transpose()).abs().max());
            }
        }
        if found != 1 {
            bad += 1;
        }
    }
    (bad, worst)
}

/// Central differences of `t ↦ σ(exp(tX))` at `t = 0` for `X = e1, e2, e3`
/// against the projection of `X` to `m = ⟨e1, e2⟩` along `h = ⟨e3⟩`.
pub fn tangent_fd() -> f64 {
    let l = LoopInstance::h2();
    let t: f64 = 1e-5;
    let gen = [
        DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]),
        DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]),
    ];
    let exp = |x: &DMatrix<f64>, s: f64| -> Point {
        let c = crate::expm::exp_series(&(x * s).map(|v| Complex64::new(v, 0.0)), 1e-15).expect("series");
        vec![c]
    };
    let mut worst: f64 = 0.0;
    for (i, x) in gen.iter().enumerate() {
        let p = l.sigma(&exp(x, t)).expect("section")[0].map(|z| z.re);
        let q = l.sigma(&exp(x, -t)).expect("section")[0].map(|z| z.re);
        let d = (p - q) / (2.0 * t);
        let want = if i < 2 { x.clone() } else { DMatrix::zeros(2, 2) };
        worst = worst.max((d - want).abs().max());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_tangent_is_bruck() {
        let t = LoopInstance::h2().tangent();
        let r = tangent_report(t.algebra, &t.m, &t.h).unwrap();
        assert!(r.complement && r.reductive && r.generating && r.bruck && r.bol);
    }

    #[test]
    fn h2_identities() {
        let r = check_loop(&LoopInstance::h2(), 20, 1, 1.0).unwrap();
        assert!(r.errors.is_empty(), "{:?}", r.errors);
        assert!(r.left_a_loop(1e-8), "{r:?}");
        assert!(r.bol < 1e-8 && r.automorphic_inverse < 1e-8, "{r:?}");
    }

    #[test]
    fn section_tangent_matches_m() {
        assert!(tangent_fd() < 1e-6);
    }

    #[test]
    fn one_section_point_per_coset_pair() {
        let (bad, worst) = sharp_transitivity(50, 2);
        assert_eq!(bad, 0);
        assert!(worst < 1e-8);
    }
}
