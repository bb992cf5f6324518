//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

pub type Mat<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(r: usize, c: usize) -> Mat<F> {
    vec![vec![F::zero(); c]; r]
}

pub fn identity<F: Field>(n: usize) -> Mat<F> {
    let mut m = zeros::<F>(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn mat_mul<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = zeros::<F>(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = out[i][j].clone() + a[i][l].clone() * b[l][j].clone();
                }
            }
        }
    }
    out
}

pub fn mat_add<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() + y.clone()).collect())
        .collect()
}

pub fn mat_sub<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect()
}

pub fn mat_scale<F: Field>(a: &Mat<F>, s: &F) -> Mat<F> {
    a.iter()
        .map(|r| r.iter().map(|x| x.clone() * s.clone()).collect())
        .collect()
}

pub fn commutator<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn transpose<F: Field>(a: &Mat<F>) -> Mat<F> {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn trace<F: Field>(a: &Mat<F>) -> F {
    let mut t = F::zero();
    for (i, r) in a.iter().enumerate() {
        t = t + r[i].clone();
    }
    t
}

pub fn is_zero_mat<F: Field>(a: &Mat<F>) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Reduced row echelon form. Returns the nonzero rows and the pivot columns.
pub fn rref<F: Field>(rows: &[Vec<F>]) -> (Mat<F>, Vec<usize>) {
    let mut m: Mat<F> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let v = m[r][j].clone();
                    if !v.is_zero() {
                        m[i][j] = m[i][j].clone() - f.clone() * v;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    rref(rows).1.len()
}

/// Basis of the null space `{x : A x = 0}`.
pub fn nullspace<F: Field>(a: &Mat<F>, ncols: usize) -> Mat<F> {
    let (r, piv) = rref(a);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in r.iter().zip(&piv) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`, returning one solution if consistent.
pub fn solve<F: Field>(a: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    let aug: Mat<F> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let (r, piv) = rref(&aug);
    if piv.contains(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &p) in r.iter().zip(&piv) {
        x[p] = row[n].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.len();
    let aug: Mat<F> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            for j in 0..n {
                r.push(if i == j { F::one() } else { F::zero() });
            }
            r
        })
        .collect();
    let (r, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(r.iter().map(|row| row[n..].to_vec()).collect())
}

pub fn det<F: Field>(a: &Mat<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = d * m[c][c].clone();
        let inv = m[c][c].inv().unwrap();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for j in c..n {
                    m[i][j] = m[i][j].clone() - f.clone() * m[c][j].clone();
                }
            }
        }
    }
    d
}

pub fn mat_vec<F: Field>(a: &Mat<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Q};

    fn m(rows: &[&[i64]]) -> Mat<Q> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (r, p) = rref(&a);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, m(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let ai = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &ai), identity(3));
        assert_eq!(det(&a), q(5));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn nullspace_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let n = nullspace(&a, 3);
        assert_eq!(n.len(), 1);
        assert!(mat_vec(&a, &n[0]).iter().all(|x| x == &q(0)));
        let x = solve(&a, &[q(3), q(4)]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![q(3), q(4)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1), q(2)]).is_none());
    }
}
