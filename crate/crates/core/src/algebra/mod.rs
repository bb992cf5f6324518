//! Finite-dimensional real Lie algebras given by rational structure constants.

mod subspace;
mod text;

pub use subspace::Subspace;
pub use text::{from_text, to_text};

use crate::error::{Error, Result};
use crate::expr::{self, BasisEnv};
use crate::field::{fmt_q, Q, CQ};
use crate::linalg::{self, Mat};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// Complex matrix realization `e_i ↦ M_i`.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub size: usize,
    pub gens: Vec<Mat<CQ>>,
}

impl MatrixRep {
    pub fn matrix(&self, coords: &[Q]) -> Mat<CQ> {
        let mut m = linalg::zeros(self.size, self.size);
        for (c, g) in coords.iter().zip(&self.gens) {
            if !c.is_zero() {
                m = linalg::mat_add(&m, &linalg::mat_scale(g, &CQ::real(c.clone())));
            }
        }
        m
    }

    /// Real coordinates of a matrix lying in the real span of the generators.
    pub fn pull_back(&self, m: &Mat<CQ>) -> Result<Vec<Q>> {
        let n = self.gens.len();
        let flat = |a: &Mat<CQ>| -> Vec<Q> {
            let mut v = Vec::with_capacity(2 * self.size * self.size);
            for row in a {
                for z in row {
                    v.push(z.re.clone());
                    v.push(z.im.clone());
                }
            }
            v
        };
        let cols: Vec<Vec<Q>> = self.gens.iter().map(flat).collect();
        let target = flat(m);
        let a: Mat<Q> = (0..target.len())
            .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
            .collect();
        linalg::solve(&a, &target).ok_or(Error::NotInImage)
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    id: Arc<str>,
    pub labels: Vec<String>,
    // consts[i][j] = coordinates of [e_i, e_j]
    consts: Vec<Vec<Vec<Q>>>,
    pub killing_normalization: Q,
    gram: Mat<Q>,
    pub rep: Option<MatrixRep>,
    /// Free-form annotations, e.g. realification flags of summands.
    pub notes: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub algebra: Arc<str>,
    pub coords: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    Elliptic,
    Parabolic,
    HyperbolicOrLoxodromic,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Elliptic => "elliptic",
            ClassKind::Parabolic => "parabolic",
            ClassKind::HyperbolicOrLoxodromic => "hyperbolic/loxodromic",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ElementClass {
    pub kind: ClassKind,
    pub killing: Q,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` for `i < j`; the rest
    /// follows by antisymmetry.
    pub fn from_upper(
        name: &str,
        labels: Vec<String>,
        upper: impl Fn(usize, usize) -> Vec<Q>,
        killing_normalization: Q,
    ) -> Self {
        let n = labels.len();
        let mut consts = vec![vec![vec![Q::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = upper(i, j);
                consts[j][i] = v.iter().map(|x| -x.clone()).collect();
                consts[i][j] = v;
            }
        }
        Self::from_consts(name, labels, consts, killing_normalization)
    }

    /// Builds an algebra from a full table of constants without forcing
    /// antisymmetry; use [`LieAlgebra::check_antisymmetry`] to validate.
    pub fn from_consts(
        name: &str,
        labels: Vec<String>,
        consts: Vec<Vec<Vec<Q>>>,
        killing_normalization: Q,
    ) -> Self {
        let mut a = LieAlgebra {
            id: Arc::from(name),
            labels,
            consts,
            killing_normalization,
            gram: vec![],
            rep: None,
            notes: vec![],
        };
        a.gram = a.compute_gram();
        a
    }

    /// Derives structure constants from a matrix realization.
    pub fn from_rep(
        name: &str,
        labels: Vec<String>,
        rep: MatrixRep,
        killing_normalization: Q,
    ) -> Result<Self> {
        let n = rep.gens.len();
        if labels.len() != n {
            return Err(Error::DimMismatch { expected: n, got: labels.len() });
        }
        let mut upper = vec![vec![vec![]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                upper[i][j] = rep.pull_back(&linalg::commutator(&rep.gens[i], &rep.gens[j]))?;
            }
        }
        let mut a = Self::from_upper(name, labels, |i, j| upper[i][j].clone(), killing_normalization);
        a.rep = Some(rep);
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.id
    }

    pub fn id(&self) -> Arc<str> {
        self.id.clone()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Q] {
        &self.consts[i][j]
    }

    pub fn element(&self, coords: Vec<Q>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: coords.len() });
        }
        Ok(Element { algebra: self.id.clone(), coords })
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut c = vec![Q::zero(); self.dim()];
        c[i] = Q::from_integer(1.into());
        Element { algebra: self.id.clone(), coords: c }
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Evaluates a vector expression over the basis labels.
    pub fn parse_vector(&self, src: &str, params: &[(String, Q)]) -> Result<Vec<Q>> {
        let env = BasisEnv { labels: &self.labels, scalars: params };
        Ok(expr::eval_str(src, &env)?.vector()?)
    }

    pub fn parse_element(&self, src: &str, params: &[(String, Q)]) -> Result<Element> {
        self.element(self.parse_vector(src, params)?)
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.algebra != self.id {
            return Err(Error::AlgebraMismatch(x.algebra.to_string(), self.id.to_string()));
        }
        if x.coords.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: x.coords.len() });
        }
        Ok(())
    }

    pub fn bracket_coords(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.consts[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(Element { algebra: self.id.clone(), coords: self.bracket_coords(&x.coords, &y.coords) })
    }

    /// Matrix of `ad x` in the standard basis (column j is `[x, e_j]`).
    pub fn ad_coords(&self, x: &[Q]) -> Mat<Q> {
        let n = self.dim();
        let mut m = linalg::zeros(n, n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = &self.consts[i][j][k];
                    if !c.is_zero() {
                        m[k][j] += &x[i] * c;
                    }
                }
            }
        }
        m
    }

    pub fn ad_matrix(&self, x: &Element) -> Result<Mat<Q>> {
        self.check(x)?;
        Ok(self.ad_coords(&x.coords))
    }

    fn compute_gram(&self) -> Mat<Q> {
        let n = self.dim();
        let ads: Vec<Mat<Q>> = (0..n)
            .map(|i| {
                let mut e = vec![Q::zero(); n];
                e[i] = Q::from_integer(1.into());
                self.ad_coords(&e)
            })
            .collect();
        let mut g = linalg::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = linalg::trace(&linalg::mat_mul(&ads[i], &ads[j])) * &self.killing_normalization;
                g[i][j] = t.clone();
                g[j][i] = t;
            }
        }
        g
    }

    /// Normalized Killing form as a Gram matrix.
    pub fn killing_gram(&self) -> &Mat<Q> {
        &self.gram
    }

    pub fn killing_coords(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if !y[j].is_zero() && !self.gram[i][j].is_zero() {
                    s += &x[i] * &y[j] * &self.gram[i][j];
                }
            }
        }
        s
    }

    /// `ν · tr(ad x ∘ ad y)`.
    pub fn killing(&self, x: &Element, y: &Element) -> Result<Q> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.killing_coords(&x.coords, &y.coords))
    }

    /// Unnormalized trace form computed directly from ad matrices.
    pub fn trace_form(&self, x: &[Q], y: &[Q]) -> Q {
        linalg::trace(&linalg::mat_mul(&self.ad_coords(x), &self.ad_coords(y)))
    }

    pub fn classify(&self, x: &Element) -> Result<ElementClass> {
        let k = self.killing(x, x)?;
        let kind = if k.is_negative() {
            ClassKind::Elliptic
        } else if k.is_zero() {
            ClassKind::Parabolic
        } else {
            ClassKind::HyperbolicOrLoxodromic
        };
        Ok(ElementClass { kind, killing: k })
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let ok = self.consts[i][j]
                    .iter()
                    .zip(&self.consts[j][i])
                    .all(|(a, b)| (a + b).is_zero());
                if !ok {
                    return Err(Error::Antisymmetry(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![Q::zero(); n];
            v[i] = Q::from_integer(1.into());
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (e(i), e(j), e(k));
                    let t1 = self.bracket_coords(&a, &self.bracket_coords(&b, &c));
                    let t2 = self.bracket_coords(&b, &self.bracket_coords(&c, &a));
                    let t3 = self.bracket_coords(&c, &self.bracket_coords(&a, &b));
                    if !t1.iter().zip(&t2).zip(&t3).all(|((x, y), z)| (x + y + z).is_zero()) {
                        return Err(Error::Jacobi(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_antisymmetry()?;
        self.check_jacobi()
    }

    /// Smallest subalgebra containing `s`.
    pub fn lie_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let rows = cur.basis().to_vec();
            let mut vecs = rows.clone();
            for i in 0..rows.len() {
                for j in i + 1..rows.len() {
                    vecs.push(self.bracket_coords(&rows[i], &rows[j]));
                }
            }
            let next = Subspace::from_rows(self.id.clone(), self.dim(), vecs);
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.bracket_coords(&b[i], &b[j]))))
    }

    /// Whether `[h, m] ⊆ m`.
    pub fn is_invariant(&self, h: &Subspace, m: &Subspace) -> bool {
        h.basis()
            .iter()
            .all(|x| m.basis().iter().all(|y| m.contains(&self.bracket_coords(x, y))))
    }

    /// Direct sum with the given labels; matrix realizations combine block-diagonally.
    pub fn direct_sum(
        &self,
        other: &LieAlgebra,
        name: &str,
        labels: Vec<String>,
        killing_normalization: Q,
    ) -> Result<LieAlgebra> {
        let (n1, n2) = (self.dim(), other.dim());
        if labels.len() != n1 + n2 {
            return Err(Error::DimMismatch { expected: n1 + n2, got: labels.len() });
        }
        let upper = |i: usize, j: usize| -> Vec<Q> {
            let mut v = vec![Q::zero(); n1 + n2];
            if j < n1 {
                v[..n1].clone_from_slice(&self.consts[i][j]);
            } else if i >= n1 {
                v[n1..].clone_from_slice(&other.consts[i - n1][j - n1]);
            }
            v
        };
        let mut a = LieAlgebra::from_upper(name, labels, upper, killing_normalization);
        if let (Some(r1), Some(r2)) = (&self.rep, &other.rep) {
            let size = r1.size + r2.size;
            let mut gens = Vec::new();
            for g in &r1.gens {
                let mut m = linalg::zeros(size, size);
                for (i, row) in g.iter().enumerate() {
                    m[i][..r1.size].clone_from_slice(row);
                }
                gens.push(m);
            }
            for g in &r2.gens {
                let mut m = linalg::zeros(size, size);
                for (i, row) in g.iter().enumerate() {
                    m[r1.size + i][r1.size..].clone_from_slice(row);
                }
                gens.push(m);
            }
            a.rep = Some(MatrixRep { size, gens });
        }
        Ok(a)
    }

    pub fn rep_matrix(&self, x: &Element) -> Option<Mat<CQ>> {
        self.rep.as_ref().map(|r| r.matrix(&x.coords))
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_vector(&self, v: &[Q]) -> String {
        let mut out = String::new();
        for (c, l) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let coef = if a == Q::from_integer(1.into()) { String::new() } else { format!("{}*", fmt_q(&a)) };
            if out.is_empty() {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&coef);
            out.push_str(l);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl Element {
    pub fn add(&self, o: &Element) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
    pub fn scale(&self, s: &Q) -> Element {
        Element { algebra: self.algebra.clone(), coords: self.coords.iter().map(|a| a * s).collect() }
    }
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Applies a field-generic check that all entries are real.
pub fn is_real_matrix<F: crate::field::Field>(m: &Mat<crate::field::Cplx<F>>) -> bool {
    m.iter().all(|r| r.iter().all(|z| z.im.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Cplx};

    fn c(re: i64, im: i64) -> CQ {
        Cplx::new(q(re), q(im))
    }

    fn sl2() -> LieAlgebra {
        let gens = vec![
            vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0)]],
            vec![vec![c(0, 0), c(1, 0)], vec![c(1, 0), c(0, 0)]],
            vec![vec![c(0, 0), c(1, 0)], vec![c(-1, 0), c(0, 0)]],
        ];
        LieAlgebra::from_rep("t", default_labels(3), MatrixRep { size: 2, gens }, crate::field::qf(1, 8))
            .unwrap()
    }

    #[test]
    fn brackets_from_matrices() {
        let a = sl2();
        let e = |i| a.basis(i);
        assert_eq!(a.bracket(&e(0), &e(1)).unwrap().coords, vec![q(0), q(0), q(2)]);
        assert_eq!(a.bracket(&e(2), &e(1)).unwrap().coords, vec![q(2), q(0), q(0)]);
        a.validate().unwrap();
    }

    #[test]
    fn killing_signature() {
        let a = sl2();
        let k: Vec<Q> = (0..3).map(|i| a.killing(&a.basis(i), &a.basis(i)).unwrap()).collect();
        assert_eq!(k, vec![q(1), q(1), q(-1)]);
        assert_eq!(a.classify(&a.basis(2)).unwrap().kind, ClassKind::Elliptic);
        let p = a.basis(1).add(&a.basis(2));
        assert_eq!(a.classify(&p).unwrap().kind, ClassKind::Parabolic);
    }

    #[test]
    fn closure_and_subalgebras() {
        let a = sl2();
        let s = Subspace::span(&a, &[a.basis(0).coords, a.basis(1).coords]);
        assert!(!a.is_subalgebra(&s));
        assert_eq!(a.lie_closure(&s).dim(), 3);
        let b = Subspace::span(&a, &[a.basis(0).coords, a.basis(1).add(&a.basis(2)).coords]);
        assert!(a.is_subalgebra(&b));
    }

    #[test]
    fn broken_table_is_rejected() {
        let a = LieAlgebra::from_upper(
            "bad",
            default_labels(3),
            |i, j| match (i, j) {
                (0, 1) => vec![q(1), q(0), q(0)],
                (0, 2) => vec![q(1), q(0), q(0)],
                _ => vec![q(0), q(1), q(0)],
            },
            q(1),
        );
        assert!(a.check_jacobi().is_err());
    }

    #[test]
    fn mismatched_elements() {
        let a = sl2();
        let b = a.direct_sum(&a, "d", default_labels(6), q(1)).unwrap();
        assert!(a.bracket(&a.basis(0), &b.basis(0)).is_err());
        b.validate().unwrap();
    }
}
