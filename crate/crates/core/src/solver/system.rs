use super::quadric::{Linear, Quadric};
use crate::algebra::{LieAlgebra, Subspace};
use crate::catalog::{Assignment, FamilyDef, SubalgebraDef};
use crate::error::{Error, Result};
use crate::field::Q;
use crate::linalg::{self, Mat};
use num_traits::Zero;
use serde::Serialize;

/// A complement chart instantiated at concrete subalgebra parameters:
/// `X_j = f_j + Σ_k θ_jk d_k`, θ stored generator-major.
#[derive(Clone, Debug)]
pub struct Chart {
    pub symbol: String,
    pub fixed: Vec<Vec<Q>>,
    pub directions: Vec<Vec<Q>>,
    pub names: Vec<String>,
    /// Inverse of the matrix whose columns are `fixed ∪ directions`.
    to_chart: Mat<Q>,
}

#[derive(Clone, Debug)]
pub struct Equation {
    pub poly: Quadric,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct PolySystem {
    pub params: Vec<String>,
    pub equations: Vec<Equation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub h: String,
    pub m: String,
    pub bracket: String,
    pub h_component: String,
}

#[derive(Clone, Debug)]
pub enum PairVerdict {
    Reductive { generates: bool },
    NotReductive(Witness),
}

impl Chart {
    pub fn new(alg: &LieAlgebra, symbol: &str, fixed: Vec<Vec<Q>>, directions: Vec<Vec<Q>>, names: Vec<String>) -> Result<Chart> {
        let n = alg.dim();
        if fixed.len() + directions.len() != n || names.len() != fixed.len() * directions.len() {
            return Err(Error::Precondition("chart sizes do not fit the algebra".into()));
        }
        let cols: Vec<&Vec<Q>> = fixed.iter().chain(directions.iter()).collect();
        let m: Mat<Q> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let to_chart = linalg::inverse(&m)
            .ok_or_else(|| Error::Precondition("fixed vectors do not complement h".into()))?;
        Ok(Chart { symbol: symbol.to_string(), fixed, directions, names, to_chart })
    }

    pub fn from_def(alg: &LieAlgebra, h: &SubalgebraDef, fam: &FamilyDef, hp: &Assignment) -> Result<Chart> {
        let dirs = if fam.directions.is_empty() { h.basis } else { fam.directions };
        let directions: Vec<Vec<Q>> = dirs.iter().map(|d| alg.parse_vector(d, hp)).collect::<Result<_>>()?;
        let fixed: Vec<Vec<Q>> = fam.fixed.iter().map(|d| alg.parse_vector(d, hp)).collect::<Result<_>>()?;
        let names = fam.param_names(directions.len());
        Chart::new(alg, fam.symbol, fixed, directions, names)
    }

    pub fn nv(&self) -> usize {
        self.names.len()
    }

    pub fn r(&self) -> usize {
        self.directions.len()
    }

    pub fn s(&self) -> usize {
        self.fixed.len()
    }

    /// Coordinates in the basis `fixed ∪ directions`.
    pub fn decompose(&self, v: &[Q]) -> Vec<Q> {
        linalg::mat_vec(&self.to_chart, v)
    }

    pub fn generator(&self, j: usize, theta: &[Q]) -> Vec<Q> {
        let r = self.r();
        let mut v = self.fixed[j].clone();
        for k in 0..r {
            let t = &theta[j * r + k];
            if !t.is_zero() {
                for (x, d) in v.iter_mut().zip(&self.directions[k]) {
                    *x += t * d;
                }
            }
        }
        v
    }

    pub fn generators(&self, theta: &[Q]) -> Vec<Vec<Q>> {
        (0..self.s()).map(|j| self.generator(j, theta)).collect()
    }

    pub fn complement(&self, alg: &LieAlgebra, theta: &[Q]) -> Subspace {
        Subspace::span(alg, &self.generators(theta))
    }

    pub fn h(&self, alg: &LieAlgebra) -> Subspace {
        Subspace::span(alg, &self.directions)
    }

    /// Chart coordinates of a complement, `None` if `m` meets h.
    pub fn coordinates(&self, m: &[Vec<Q>]) -> Option<Vec<Q>> {
        let (s, r) = (self.s(), self.r());
        if m.len() != s {
            return None;
        }
        let c: Vec<Vec<Q>> = m.iter().map(|v| self.decompose(v)).collect();
        // rows of m = Bf·F + Bh·H; the graph form is Bf⁻¹ Bh
        let bf: Mat<Q> = c.iter().map(|row| row[..s].to_vec()).collect();
        let bh: Mat<Q> = c.iter().map(|row| row[s..].to_vec()).collect();
        let theta = linalg::mat_mul(&linalg::inverse(&bf)?, &bh);
        let mut out = Vec::with_capacity(s * r);
        for row in theta {
            out.extend(row);
        }
        Some(out)
    }

    pub fn generator_label(&self, j: usize) -> String {
        format!("{}{}", self.symbol, j + 1)
    }
}

/// Builds the system expressing `[h, m(θ)] ⊆ m(θ)`.
pub fn constraints(alg: &LieAlgebra, chart: &Chart) -> PolySystem {
    let (s, r, nv) = (chart.s(), chart.r(), chart.nv());
    let mut equations = vec![];
    for (i, hi) in chart.directions.iter().enumerate() {
        let c0: Vec<Vec<Q>> = chart.fixed.iter().map(|f| chart.decompose(&alg.bracket_coords(hi, f))).collect();
        let ck: Vec<Vec<Q>> = chart.directions.iter().map(|d| chart.decompose(&alg.bracket_coords(hi, d))).collect();
        for j in 0..s {
            // coordinate `l` of [h_i, X_j] as an affine form in θ
            let coord = |l: usize| -> Linear {
                let mut v = vec![Q::zero(); nv + 1];
                v[nv] = c0[j][l].clone();
                for k in 0..r {
                    v[j * r + k] = ck[k][l].clone();
                }
                v
            };
            let alphas: Vec<Linear> = (0..s).map(coord).collect();
            for m in 0..r {
                let mut eq = Quadric::from_linear(&coord(s + m));
                for (l, a) in alphas.iter().enumerate() {
                    if a.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let mut t = vec![Q::zero(); nv + 1];
                    t[l * r + m] = Q::from_integer(1.into());
                    eq = eq.sub(&Quadric::product(a, &t));
                }
                if !eq.is_zero() {
                    equations.push(Equation {
                        poly: eq,
                        provenance: format!("[h{}, {}] h-component {}", i + 1, chart.generator_label(j), m + 1),
                    });
                }
            }
        }
    }
    PolySystem { params: chart.names.clone(), equations }
}

impl PolySystem {
    pub fn eval(&self, theta: &[Q]) -> Vec<Q> {
        self.equations.iter().map(|e| e.poly.eval(theta)).collect()
    }

    pub fn quadrics(&self) -> Vec<Quadric> {
        self.equations.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn max_degree(&self) -> usize {
        if self.equations.iter().all(|e| e.poly.is_linear()) {
            1
        } else {
            2
        }
    }
}

/// Checks `[h, m] ⊆ m` for a concrete pair.
pub fn verify_pair(alg: &LieAlgebra, h: &Subspace, m: &Subspace) -> Result<PairVerdict> {
    if !h.is_complement(m) {
        return Err(Error::Precondition("h and m are not complementary".into()));
    }
    if !alg.is_subalgebra(h) {
        return Err(Error::Precondition("h is not a subalgebra".into()));
    }
    let mut cols: Vec<Vec<Q>> = m.basis().to_vec();
    cols.extend(h.basis().iter().cloned());
    let n = alg.dim();
    let mat: Mat<Q> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let inv = linalg::inverse(&mat).expect("complementary");
    for hv in h.basis() {
        for mv in m.basis() {
            let b = alg.bracket_coords(hv, mv);
            let c = linalg::mat_vec(&inv, &b);
            let hc = &c[m.dim()..];
            if hc.iter().any(|x| !x.is_zero()) {
                let mut hvec = vec![Q::zero(); n];
                for (coef, v) in hc.iter().zip(h.basis()) {
                    for (o, x) in hvec.iter_mut().zip(v) {
                        *o += coef * x;
                    }
                }
                return Ok(PairVerdict::NotReductive(Witness {
                    h: alg.format_vector(hv),
                    m: alg.format_vector(mv),
                    bracket: alg.format_vector(&b),
                    h_component: alg.format_vector(&hvec),
                }));
            }
        }
    }
    Ok(PairVerdict::Reductive { generates: alg.lie_closure(m).dim() == n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, load_algebra};
    use crate::field::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn chart(alg: &str, id: &str) -> (LieAlgebra, Chart) {
        let a = load_algebra(alg).unwrap();
        let h = catalog::subalgebra(alg, id).unwrap();
        let f = catalog::complement_family(alg, id, &vec![]).unwrap();
        let c = Chart::from_def(&a, h, f, &vec![]).unwrap();
        (a, c)
    }

    #[test]
    fn equations_vanish_exactly_on_reductive_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (alg, id) in [("sl2C", "h4"), ("sl3R", "h5"), ("su21", "h22"), ("sl2xsl2", "h8")] {
            let (a, c) = chart(alg, id);
            let sys = constraints(&a, &c);
            let h = c.h(&a);
            for t in 0..20 {
                // mix random points with points on the zero locus
                let theta: Vec<Q> = (0..c.nv())
                    .map(|i| if t % 2 == 0 && i % 3 != 0 { q(0) } else { crate::catalog::conditions::random_rational(&mut rng) })
                    .collect();
                let zero = sys.eval(&theta).iter().all(|x| x.is_zero());
                let m = c.complement(&a, &theta);
                let red = matches!(verify_pair(&a, &h, &m).unwrap(), PairVerdict::Reductive { .. });
                assert_eq!(zero, red, "{alg}.{id} at {theta:?}");
            }
            let theta0 = vec![q(0); c.nv()];
            assert_eq!(c.coordinates(&c.generators(&theta0)).unwrap(), theta0);
        }
    }

    #[test]
    fn witness_for_sl2c_h5() {
        let (a, c) = chart("sl2C", "h5");
        let m = c.complement(&a, &vec![q(0); c.nv()]);
        match verify_pair(&a, &c.h(&a), &m).unwrap() {
            PairVerdict::NotReductive(w) => assert_eq!(w.h_component, "-2*e2 - 2*e3"),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn verify_pair_preconditions() {
        let a = load_algebra("sl3R").unwrap();
        let h = Subspace::span(&a, &[a.parse_vector("e1", &[]).unwrap()]);
        let m = Subspace::span(&a, &[a.parse_vector("e1", &[]).unwrap()]);
        assert!(verify_pair(&a, &h, &m).is_err());
    }
}
