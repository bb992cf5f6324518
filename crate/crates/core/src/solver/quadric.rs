//! Polynomials of degree ≤ 2 stored as symmetric matrices on homogenized
//! coordinates `x̃ = (x_1, …, x_n, 1)`, so that `q(x) = x̃ᵀ M x̃`.

use crate::field::{fmt_q, Q};
use crate::linalg::{self, Mat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Quadric {
    pub m: Mat<Q>,
}

/// An affine linear form `a·x̃`, length `n + 1`.
pub type Linear = Vec<Q>;

impl Quadric {
    pub fn zero(nv: usize) -> Self {
        Quadric { m: linalg::zeros(nv + 1, nv + 1) }
    }

    pub fn nv(&self) -> usize {
        self.m.len() - 1
    }

    pub fn from_linear(l: &Linear) -> Self {
        let n = l.len();
        let mut q = Quadric { m: linalg::zeros(n, n) };
        let half = Q::new(1.into(), 2.into());
        for i in 0..n - 1 {
            if !l[i].is_zero() {
                q.m[i][n - 1] = &l[i] * &half;
                q.m[n - 1][i] = &l[i] * &half;
            }
        }
        q.m[n - 1][n - 1] = l[n - 1].clone();
        q
    }

    /// The product of two affine forms.
    pub fn product(u: &Linear, w: &Linear) -> Self {
        let n = u.len();
        let half = Q::new(1.into(), 2.into());
        let mut m = linalg::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = (&u[i] * &w[j] + &u[j] * &w[i]) * &half;
                m[i][j] = v;
            }
        }
        Quadric { m }
    }

    pub fn add(&self, o: &Quadric) -> Quadric {
        Quadric { m: linalg::mat_add(&self.m, &o.m) }
    }

    pub fn sub(&self, o: &Quadric) -> Quadric {
        Quadric { m: linalg::mat_sub(&self.m, &o.m) }
    }

    pub fn scale(&self, s: &Q) -> Quadric {
        Quadric { m: linalg::mat_scale(&self.m, s) }
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_mat(&self.m)
    }

    pub fn is_linear(&self) -> bool {
        let n = self.nv();
        (0..n).all(|i| (0..n).all(|j| self.m[i][j].is_zero()))
    }

    /// The affine form of a quadric with vanishing quadratic part.
    pub fn linear_part(&self) -> Linear {
        let n = self.nv();
        let mut l: Linear = (0..n).map(|i| &self.m[i][n] * Q::from_integer(2.into())).collect();
        l.push(self.m[n][n].clone());
        l
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        let mut xt = x.to_vec();
        xt.push(Q::one());
        let mut s = Q::zero();
        for (i, row) in self.m.iter().enumerate() {
            if xt[i].is_zero() {
                continue;
            }
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() && !xt[j].is_zero() {
                    s += c * &xt[i] * &xt[j];
                }
            }
        }
        s
    }

    /// Substitutes `x_p = -(Σ_{i≠p} row_i x_i + row_n)` for a row normalized at `p`.
    pub fn substitute(&self, p: usize, row: &Linear) -> Quadric {
        let n = self.m.len();
        let mut t: Mat<Q> = linalg::identity(n);
        for j in 0..n {
            t[p][j] = if j == p { Q::zero() } else { -row[j].clone() };
        }
        let tt = linalg::transpose(&t);
        Quadric { m: linalg::mat_mul(&linalg::mat_mul(&tt, &self.m), &t) }
    }

    /// Coefficients on the monomial basis: quadratic monomials first
    /// (`x_i x_j`, `i ≤ j`), then linear terms, then the constant.
    pub fn monomial_vector(&self) -> Vec<Q> {
        let n = self.nv();
        let two = Q::from_integer(2.into());
        let mut v = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for i in 0..n {
            v.push(self.m[i][i].clone());
            for j in i + 1..n {
                v.push(&self.m[i][j] * &two);
            }
        }
        for i in 0..n {
            v.push(&self.m[i][n] * &two);
        }
        v.push(self.m[n][n].clone());
        v
    }

    pub fn from_monomial_vector(nv: usize, v: &[Q]) -> Quadric {
        let half = Q::new(1.into(), 2.into());
        let mut q = Quadric::zero(nv);
        let mut k = 0;
        for i in 0..nv {
            q.m[i][i] = v[k].clone();
            k += 1;
            for j in i + 1..nv {
                q.m[i][j] = &v[k] * &half;
                q.m[j][i] = &v[k] * &half;
                k += 1;
            }
        }
        for i in 0..nv {
            q.m[i][nv] = &v[k] * &half;
            q.m[nv][i] = &v[k] * &half;
            k += 1;
        }
        q.m[nv][nv] = v[k].clone();
        q
    }

    /// `Some(1)` if positive semidefinite, `Some(-1)` if negative
    /// semidefinite, `None` if indefinite.
    pub fn definiteness(&self) -> Option<i32> {
        let mut a = self.m.clone();
        let n = a.len();
        let mut sign = 0;
        let mut alive: Vec<usize> = (0..n).collect();
        while !alive.is_empty() {
            let piv = alive.iter().copied().find(|&i| !a[i][i].is_zero());
            let Some(p) = piv else {
                // Zero diagonal: a nonzero off-diagonal entry means indefinite.
                let off = alive.iter().any(|&i| alive.iter().any(|&j| !a[i][j].is_zero()));
                return if off { None } else { Some(if sign == 0 { 1 } else { sign }) };
            };
            let s = if a[p][p].is_positive() { 1 } else { -1 };
            if sign != 0 && s != sign {
                return None;
            }
            sign = s;
            let d = a[p][p].clone();
            alive.retain(|&i| i != p);
            for &i in &alive {
                if a[i][p].is_zero() {
                    continue;
                }
                let f = &a[i][p] / &d;
                for &j in &alive {
                    if !a[p][j].is_zero() {
                        let v = &f * &a[p][j];
                        a[i][j] -= v;
                    }
                }
            }
        }
        Some(if sign == 0 { 1 } else { sign })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.m)
    }

    /// Writes a rank-2 quadric as a product of two rational affine forms.
    pub fn factor(&self) -> Option<(Linear, Linear)> {
        let (r, piv) = linalg::rref(&self.m);
        if piv.len() != 2 {
            return None;
        }
        let (r1, r2) = (&r[0], &r[1]);
        let c11 = self.m[piv[0]][piv[0]].clone();
        let c12 = self.m[piv[0]][piv[1]].clone();
        let c22 = self.m[piv[1]][piv[1]].clone();
        let comb = |a: &Q, b: &Q| -> Linear { r1.iter().zip(r2).map(|(x, y)| a * x + b * y).collect() };
        if c11.is_zero() {
            // 2 c12 s t + c22 t² = t (2 c12 s + c22 t)
            let two = Q::from_integer(2.into());
            return Some((comb(&Q::zero(), &Q::one()), comb(&(&two * &c12), &c22)));
        }
        let disc = &c12 * &c12 - &c11 * &c22;
        let root = rational_sqrt(&disc)?;
        let z1 = (-&c12 + &root) / &c11;
        let z2 = (-&c12 - &root) / &c11;
        Some((comb(&Q::one(), &-z1), comb(&Q::one(), &-z2)))
    }

    pub fn format(&self, names: &[String]) -> String {
        format_monomials(&self.monomial_vector(), names)
    }
}

pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let sq = |n: &BigInt| -> Option<BigInt> {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Q::new(sq(x.numer())?, sq(x.denom())?))
}

pub fn format_linear(l: &Linear, names: &[String]) -> String {
    let n = names.len();
    let mut v = vec![Q::zero(); (n + 1) * n / 2];
    v.extend(l.iter().cloned());
    format_monomials(&v, names)
}

fn format_monomials(v: &[Q], names: &[String]) -> String {
    let n = names.len();
    let mut terms: Vec<(Q, String)> = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            let m = if i == j { format!("{}^2", names[i]) } else { format!("{}*{}", names[i], names[j]) };
            terms.push((v[k].clone(), m));
            k += 1;
        }
    }
    for name in names {
        terms.push((v[k].clone(), name.clone()));
        k += 1;
    }
    terms.push((v[k].clone(), String::new()));
    let mut out = String::new();
    for (c, m) in terms.into_iter().filter(|(c, _)| !c.is_zero()) {
        let neg = c.is_negative();
        let a = c.abs();
        let body = match (a.is_one(), m.is_empty()) {
            (_, true) => fmt_q(&a),
            (true, false) => m,
            (false, false) => format!("{}*{}", fmt_q(&a), m),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qf};

    fn lin(v: &[i64]) -> Linear {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn product_evaluates() {
        // (x + 1)(y - 2)
        let p = Quadric::product(&lin(&[1, 0, 1]), &lin(&[0, 1, -2]));
        assert_eq!(p.eval(&[q(2), q(5)]), q(9));
        assert_eq!(p.rank(), 2);
        let (a, b) = p.factor().unwrap();
        let prod = Quadric::product(&a, &b);
        // equal up to a scalar
        let s = &p.m[0][1] / &prod.m[0][1];
        assert_eq!(prod.scale(&s), p);
    }

    #[test]
    fn definiteness_classes() {
        // x² + 1
        let mut a = Quadric::zero(1);
        a.m[0][0] = q(1);
        a.m[1][1] = q(1);
        assert_eq!(a.definiteness(), Some(1));
        // x² - y²
        let mut b = Quadric::zero(2);
        b.m[0][0] = q(1);
        b.m[1][1] = q(-1);
        assert_eq!(b.definiteness(), None);
        // xy has zero diagonal
        let c = Quadric::product(&lin(&[1, 0, 0]), &lin(&[0, 1, 0]));
        assert_eq!(c.definiteness(), None);
        assert_eq!(a.scale(&q(-3)).definiteness(), Some(-1));
    }

    #[test]
    fn substitution() {
        // q = x*y, substitute x = -(y - 3) i.e. row (1, 1, -3)
        let p = Quadric::product(&lin(&[1, 0, 0]), &lin(&[0, 1, 0]));
        let s = p.substitute(0, &lin(&[1, 1, -3]));
        // (3 - y) y at y = 1 → 2
        assert_eq!(s.eval(&[q(100), q(1)]), q(2));
    }

    #[test]
    fn monomial_roundtrip_and_format() {
        let p = Quadric::product(&lin(&[1, 0, 1]), &lin(&[0, 2, -1]));
        let v = p.monomial_vector();
        assert_eq!(Quadric::from_monomial_vector(2, &v), p);
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(p.format(&names), "2*a*b - a + 2*b - 1");
        assert_eq!(rational_sqrt(&qf(9, 4)), Some(qf(3, 2)));
        assert_eq!(rational_sqrt(&q(2)), None);
    }
}
