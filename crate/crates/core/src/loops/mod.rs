//! Loops realized by sharply transitive sections in `PSL2(R)`, `PSL2(R)²`
//! and `PSL2(R) × G2`.
//!
//! Points are lists of 2×2 matrices, one per factor. The section image of the
//! hyperbolic plane loop is the set of symmetric positive-definite matrices of
//! determinant one, and cosets of `SO2` are split off by polar decomposition.

pub mod checks;
pub mod h2;

use crate::error::{Error, Result};
use crate::expm::projective::proj_dist;
use crate::expm::{exp_closed, CMat};
use crate::catalog;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

pub use checks::{check_loop, sharp_transitivity, tangent_report, LoopReport, TangentReport};

/// One group element per factor.
pub type Point = Vec<CMat>;

/// Homomorphism `φ` from `SO2` into the second factor, given on the rotation
/// angle `θ` of `exp(θ e3)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Twist {
    Trivial,
    /// `exp(θ e3) ↦ exp(nθ e3)`.
    Power(i32),
    /// `exp(θ e3) ↦ exp(sθ e1)`.
    Hyperbolic(f64),
    /// `exp(θ e3) ↦ exp(θ (e2 + e3))`.
    Parabolic,
}

/// Second factor of a Scheerer extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    Psl2,
    So3,
}

impl Factor {
    fn algebra(self) -> &'static str {
        match self {
            Factor::Psl2 => "sl2R",
            Factor::So3 => "so3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Construction {
    /// `PSL2(R) / SO2`.
    H2,
    /// `(PSL2(R) / SO2)²`.
    H2xH2,
    /// `(PSL2(R) × G2) / {(x, φ(x))}` with section image `M × G2`.
    Scheerer { second: Factor, twist: Twist },
}

/// Tangent data `(g, m, h)` of a construction, as basis expressions.
#[derive(Clone, Debug, Serialize)]
pub struct Tangent {
    pub algebra: &'static str,
    pub m: Vec<String>,
    pub h: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct LoopInstance {
    pub name: String,
    pub construction: Construction,
    /// Max iterations for right division.
    pub max_iter: usize,
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn real(m: &DMatrix<f64>) -> CMat {
    m.map(c)
}

fn inv(m: &CMat) -> Result<CMat> {
    m.clone().try_inverse().ok_or_else(|| Error::Precondition("singular group element".into()))
}

impl Twist {
    /// `φ(exp(θ e3))` as a matrix in the second factor's realization.
    pub fn image(self, theta: f64) -> CMat {
        match self {
            Twist::Trivial => CMat::identity(2, 2),
            Twist::Power(n) => {
                let t = n as f64 * theta;
                CMat::from_row_slice(2, 2, &[c(t.cos()), c(t.sin()), c(-t.sin()), c(t.cos())])
            }
            Twist::Hyperbolic(s) => {
                let t = s * theta;
                CMat::from_row_slice(2, 2, &[c(t.exp()), c(0.0), c(0.0), c((-t).exp())])
            }
            Twist::Parabolic => CMat::from_row_slice(2, 2, &[c(1.0), c(2.0 * theta), c(0.0), c(1.0)]),
        }
    }

    /// Image of `e3` under `dφ` in the second factor's coordinates.
    fn tangent(self) -> &'static str {
        match self {
            Twist::Trivial => "",
            Twist::Power(_) => "y3",
            Twist::Hyperbolic(_) => "y1",
            Twist::Parabolic => "y2 + y3",
        }
    }
}

impl LoopInstance {
    pub fn new(name: impl Into<String>, construction: Construction) -> Self {
        LoopInstance { name: name.into(), construction, max_iter: 50 }
    }

    pub fn h2() -> Self {
        Self::new("H2", Construction::H2)
    }

    pub fn h2xh2() -> Self {
        Self::new("H2xH2", Construction::H2xH2)
    }

    pub fn scheerer(second: Factor, twist: Twist) -> Self {
        let g2 = match second {
            Factor::Psl2 => "PSL2",
            Factor::So3 => "SO3",
        };
        let t = match twist {
            Twist::Trivial => "trivial".to_string(),
            Twist::Power(n) => format!("power{n}"),
            Twist::Hyperbolic(s) => format!("hyperbolic({s})"),
            Twist::Parabolic => "parabolic".to_string(),
        };
        Self::new(format!("Scheerer[{g2},{t}]"), Construction::Scheerer { second, twist })
    }

    /// The constructions kept by the classification of `sl2 ⊕ g2`.
    pub fn catalog() -> Vec<LoopInstance> {
        let mut v = vec![Self::h2(), Self::h2xh2()];
        for second in [Factor::Psl2, Factor::So3] {
            for twist in [Twist::Trivial, Twist::Power(1), Twist::Power(2)] {
                v.push(Self::scheerer(second, twist));
            }
        }
        v.push(Self::scheerer(Factor::Psl2, Twist::Hyperbolic(1.0)));
        v.push(Self::scheerer(Factor::Psl2, Twist::Parabolic));
        v
    }

    pub fn factors(&self) -> usize {
        match self.construction {
            Construction::H2 => 1,
            _ => 2,
        }
    }

    pub fn identity(&self) -> Point {
        vec![CMat::identity(2, 2); self.factors()]
    }

    pub fn tangent(&self) -> Tangent {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        match self.construction {
            Construction::H2 => Tangent { algebra: "sl2R", m: s(&["e1", "e2"]), h: s(&["e3"]) },
            Construction::H2xH2 => Tangent { algebra: "sl2xsl2", m: s(&["x1", "x2", "y1", "y2"]), h: s(&["x3", "y3"]) },
            Construction::Scheerer { second, twist } => {
                let algebra = match second {
                    Factor::Psl2 => "sl2xsl2",
                    Factor::So3 => "sl2xso3",
                };
                let h = match twist {
                    Twist::Trivial => "x3".to_string(),
                    Twist::Power(n) => format!("x3 + {n}*{}", twist.tangent()),
                    Twist::Hyperbolic(s) => format!("x3 + {s}*{}", twist.tangent()),
                    Twist::Parabolic => format!("x3 + {}", twist.tangent()),
                };
                Tangent { algebra, m: s(&["x1", "x2", "y1", "y2", "y3"]), h: vec![h] }
            }
        }
    }

    /// Splits `g = m·h` with `m` in the section image and `h` in the stabilizer.
    pub fn decompose(&self, g: &Point) -> Result<(Point, Point)> {
        if g.len() != self.factors() {
            return Err(Error::DimMismatch { expected: self.factors(), got: g.len() });
        }
        match self.construction {
            Construction::H2 | Construction::H2xH2 => {
                let mut ms = vec![];
                let mut hs = vec![];
                for x in g {
                    let (p, o) = h2::polar(x)?;
                    ms.push(real(&p));
                    hs.push(real(&o));
                }
                Ok((ms, hs))
            }
            Construction::Scheerer { twist, .. } => {
                let (p, o) = h2::polar(&g[0])?;
                let phi = twist.image(h2::angle(&o));
                let second = &g[1] * inv(&phi)?;
                Ok((vec![real(&p), second], vec![real(&o), phi]))
            }
        }
    }

    /// The section: representative in the image of `g`'s coset.
    pub fn sigma(&self, g: &Point) -> Result<Point> {
        Ok(self.decompose(g)?.0)
    }

    pub fn group_mul(&self, x: &Point, y: &Point) -> Point {
        x.iter().zip(y).map(|(a, b)| a * b).collect()
    }

    pub fn group_inv(&self, x: &Point) -> Result<Point> {
        x.iter().map(inv).collect()
    }

    /// `x ∗ y = σ(x·y)`.
    pub fn mul(&self, x: &Point, y: &Point) -> Result<Point> {
        self.sigma(&self.group_mul(x, y))
    }

    /// `a \ b`: the `u` with `a ∗ u = b`, which is `σ(a⁻¹·b)`.
    pub fn ldiv(&self, a: &Point, b: &Point) -> Result<Point> {
        self.sigma(&self.group_mul(&self.group_inv(a)?, b))
    }

    /// `a / b`: the `u` with `u ∗ b = a`.
    pub fn rdiv(&self, a: &Point, b: &Point) -> Result<Point> {
        match self.construction {
            Construction::H2 | Construction::H2xH2 => {
                a.iter().zip(b).map(|(x, y)| h2::rdiv(x, y, self.max_iter)).collect()
            }
            Construction::Scheerer { twist, .. } => {
                let p = h2::rdiv(&a[0], &b[0], self.max_iter)?;
                let (_, o) = h2::polar(&(&p * &b[0]))?;
                let second = &a[1] * twist.image(h2::angle(&o)) * inv(&b[1])?;
                Ok(vec![p, second])
            }
        }
    }

    /// Loop inverse `x \ e`.
    pub fn inverse(&self, x: &Point) -> Result<Point> {
        self.ldiv(x, &self.identity())
    }

    /// Distance in the group, each factor taken modulo `±I`.
    pub fn dist(&self, x: &Point, y: &Point) -> f64 {
        x.iter().zip(y).map(|(a, b)| proj_dist(a, b)).fold(0.0, f64::max)
    }

    /// Random point of the section image with chart coordinates in `[-r, r]`.
    pub fn sample<R: Rng>(&self, rng: &mut R, r: f64) -> Point {
        let mut h = || h2::exp_m(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        match self.construction {
            Construction::H2 => vec![real(&h())],
            Construction::H2xH2 => {
                let a = h();
                vec![real(&a), real(&h())]
            }
            Construction::Scheerer { second, .. } => {
                let a = real(&h());
                let alg = catalog::load_algebra(second.algebra()).expect("cataloged");
                let y: Vec<f64> = (0..3).map(|_| rng.gen_range(-r..=r)).collect();
                vec![a, exp_closed(&alg, &y).expect("closed form")]
            }
        }
    }

    /// Random group element: a section point times a stabilizer element.
    pub fn sample_group<R: Rng>(&self, rng: &mut R, r: f64) -> Point {
        let m = self.sample(rng, r);
        let mut hs = vec![];
        match self.construction {
            Construction::H2 | Construction::H2xH2 => {
                for _ in 0..self.factors() {
                    hs.push(real(&h2::rotation(rng.gen_range(-1.5..1.5))));
                }
            }
            Construction::Scheerer { twist, .. } => {
                let t = rng.gen_range(-1.5..1.5);
                hs.push(real(&h2::rotation(t)));
                hs.push(twist.image(t));
            }
        }
        self.group_mul(&m, &hs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sigma_fixes_section_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for l in LoopInstance::catalog() {
            let x = l.sample(&mut rng, 1.0);
            assert!(l.dist(&l.sigma(&x).unwrap(), &x) < 1e-12, "{}", l.name);
        }
    }

    #[test]
    fn divisions_invert_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for l in LoopInstance::catalog() {
            let (a, b) = (l.sample(&mut rng, 1.0), l.sample(&mut rng, 1.0));
            let u = l.ldiv(&a, &b).unwrap();
            assert!(l.dist(&l.mul(&a, &u).unwrap(), &b) < 1e-10, "{}", l.name);
            let v = l.rdiv(&a, &b).unwrap();
            assert!(l.dist(&l.mul(&v, &b).unwrap(), &a) < 1e-10, "{}", l.name);
        }
    }

    #[test]
    fn doubling_a_diagonal_point() {
        let l = LoopInstance::h2();
        let e = std::f64::consts::E;
        let x = vec![real(&DMatrix::from_row_slice(2, 2, &[e, 0.0, 0.0, 1.0 / e]))];
        let want = real(&DMatrix::from_row_slice(2, 2, &[e * e, 0.0, 0.0, 1.0 / (e * e)]));
        assert!(proj_dist(&l.mul(&x, &x).unwrap()[0], &want) < 1e-12);
    }
}
