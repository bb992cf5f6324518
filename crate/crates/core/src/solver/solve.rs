//! Bounded case-splitting solver for systems of degree-2 equations.
//!
//! Linear consequences are saturated by Gaussian elimination on the monomial
//! basis. A semidefinite equation `x̃ᵀMx̃ = 0` is replaced by `Mx̃ = 0`, and an
//! equation that factors over ℚ into two affine forms is split into two
//! branches. Anything else is returned as an unresolved residual.

use super::quadric::{format_linear, Linear, Quadric};
use crate::field::Q;
use crate::linalg::{self, Mat};
use num_traits::Zero;
use rand::Rng;

/// An affine subspace `{x : row·x̃ = 0 for every row}`, stored in reduced
/// echelon form on the homogenized coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub nv: usize,
    pub rows: Mat<Q>,
}

#[derive(Clone, Debug)]
pub struct Residual {
    pub branch: Branch,
    pub equations: Vec<Quadric>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum SolutionSet {
    Unsat,
    Branches(Vec<Branch>),
    /// Some branches could not be resolved within the budget.
    Unknown { solved: Vec<Branch>, residual: Vec<Residual> },
}

impl SolutionSet {
    pub fn branches(&self) -> &[Branch] {
        match self {
            SolutionSet::Unsat => &[],
            SolutionSet::Branches(b) => b,
            SolutionSet::Unknown { solved, .. } => solved,
        }
    }
    pub fn is_unknown(&self) -> bool {
        matches!(self, SolutionSet::Unknown { .. })
    }
}

impl Branch {
    pub fn whole(nv: usize) -> Self {
        Branch { nv, rows: vec![] }
    }

    /// `None` if the equations are inconsistent.
    pub fn with(&self, extra: &[Linear]) -> Option<Branch> {
        let mut rows = self.rows.clone();
        rows.extend(extra.iter().cloned());
        let (rows, piv) = linalg::rref(&rows);
        if piv.last() == Some(&self.nv) {
            return None;
        }
        Some(Branch { nv: self.nv, rows })
    }

    pub fn dim(&self) -> usize {
        self.nv - self.rows.len()
    }

    fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect()
    }

    pub fn free_vars(&self) -> Vec<usize> {
        let p = self.pivots();
        (0..self.nv).filter(|i| !p.contains(i)).collect()
    }

    pub fn contains_point(&self, x: &[Q]) -> bool {
        self.rows.iter().all(|r| {
            let mut s = r[self.nv].clone();
            for (a, b) in r.iter().zip(x) {
                if !a.is_zero() {
                    s += a * b;
                }
            }
            s.is_zero()
        })
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Branch) -> bool {
        let r = other.rows.len();
        self.rows.iter().all(|row| {
            let mut m = other.rows.clone();
            m.push(row.clone());
            linalg::rank(&m) == r
        })
    }

    /// The point with the given values on the free variables.
    pub fn point(&self, free: &[Q]) -> Vec<Q> {
        let fv = self.free_vars();
        let mut x = vec![Q::zero(); self.nv];
        for (i, v) in fv.iter().zip(free) {
            x[*i] = v.clone();
        }
        for (row, p) in self.rows.iter().zip(self.pivots()) {
            let mut s = -row[self.nv].clone();
            for &f in &fv {
                if !row[f].is_zero() {
                    s -= &row[f] * &x[f];
                }
            }
            x[p] = s;
        }
        x
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec<Q> {
        let free: Vec<Q> = self
            .free_vars()
            .iter()
            .map(|_| Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into()))
            .collect();
        self.point(&free)
    }

    pub fn describe(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = self.rows.iter().map(|r| format!("{} = 0", format_linear(r, names))).collect();
        let free: Vec<&str> = self.free_vars().iter().map(|&i| names[i].as_str()).collect();
        if parts.is_empty() {
            parts.push("no constraint".into());
        }
        if free.is_empty() {
            format!("{{{}}}", parts.join(", "))
        } else {
            format!("{{{}; free: {}}}", parts.join(", "), free.join(" "))
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub max_depth: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_depth: 12 }
    }
}

enum Reduced {
    Unsat,
    Ok { linear: Vec<Linear>, quadratic: Vec<Quadric> },
}

/// Row-reduces the system on the monomial basis, quadratic monomials first.
fn reduce(nv: usize, eqs: &[Quadric]) -> Reduced {
    if eqs.is_empty() {
        return Reduced::Ok { linear: vec![], quadratic: vec![] };
    }
    let rows: Vec<Vec<Q>> = eqs.iter().map(|q| q.monomial_vector()).collect();
    let nq = nv * (nv + 1) / 2;
    let (r, piv) = linalg::rref(&rows);
    let mut linear = vec![];
    let mut quadratic = vec![];
    for (row, p) in r.iter().zip(piv) {
        if p < nq {
            quadratic.push(Quadric::from_monomial_vector(nv, row));
        } else if p < nq + nv {
            linear.push(row[nq..].to_vec());
        } else {
            return Reduced::Unsat;
        }
    }
    Reduced::Ok { linear, quadratic }
}

fn substitute_all(branch: &Branch, eqs: &[Quadric]) -> Vec<Quadric> {
    let piv = branch.pivots();
    eqs.iter()
        .map(|q| {
            let mut q = q.clone();
            for (row, &p) in branch.rows.iter().zip(&piv) {
                q = q.substitute(p, row);
            }
            q
        })
        .filter(|q| !q.is_zero())
        .collect()
}

pub fn solve(nv: usize, eqs: &[Quadric], cfg: &SolverConfig) -> SolutionSet {
    let mut solved = vec![];
    let mut residual = vec![];
    solve_rec(Branch::whole(nv), eqs.to_vec(), 0, cfg, &mut solved, &mut residual);
    let solved = prune(solved);
    if !residual.is_empty() {
        SolutionSet::Unknown { solved, residual }
    } else if solved.is_empty() {
        SolutionSet::Unsat
    } else {
        SolutionSet::Branches(solved)
    }
}

fn solve_rec(
    mut branch: Branch,
    mut eqs: Vec<Quadric>,
    depth: usize,
    cfg: &SolverConfig,
    solved: &mut Vec<Branch>,
    residual: &mut Vec<Residual>,
) {
    let nv = branch.nv;
    'outer: loop {
        eqs = substitute_all(&branch, &eqs);
        let (linear, quadratic) = match reduce(nv, &eqs) {
            Reduced::Unsat => return,
            Reduced::Ok { linear, quadratic } => (linear, quadratic),
        };
        if !linear.is_empty() {
            match branch.with(&linear) {
                Some(b) => branch = b,
                None => return,
            }
            eqs = quadratic;
            continue;
        }
        eqs = quadratic;
        if eqs.is_empty() {
            solved.push(branch);
            return;
        }
        for q in &eqs {
            if q.definiteness().is_some() {
                match branch.with(&q.m) {
                    Some(b) => branch = b,
                    None => return,
                }
                continue 'outer;
            }
        }
        for q in &eqs {
            if let Some((u, w)) = q.factor() {
                if depth >= cfg.max_depth {
                    residual.push(Residual { branch, equations: eqs, reason: "case depth exceeded".into() });
                    return;
                }
                if let Some(b) = branch.with(&[u]) {
                    solve_rec(b, eqs.clone(), depth + 1, cfg, solved, residual);
                }
                if let Some(b) = branch.with(&[w]) {
                    solve_rec(b, eqs, depth + 1, cfg, solved, residual);
                }
                return;
            }
        }
        residual.push(Residual { branch, equations: eqs, reason: "no semidefinite or factorable equation".into() });
        return;
    }
}

/// Drops duplicate branches and branches contained in another one.
fn prune(mut bs: Vec<Branch>) -> Vec<Branch> {
    bs.sort_by_key(|b| std::cmp::Reverse(b.dim()));
    let mut out: Vec<Branch> = vec![];
    for b in bs {
        if !out.iter().any(|o| o.contains(&b)) {
            out.push(b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn lin(v: &[i64]) -> Linear {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn sum_of_squares_plus_one_is_unsat() {
        // a² + 1 = 0
        let mut e = Quadric::zero(1);
        e.m[0][0] = q(1);
        e.m[1][1] = q(1);
        assert!(matches!(solve(1, &[e], &SolverConfig::default()), SolutionSet::Unsat));
    }

    #[test]
    fn product_splits() {
        // x*y = 0, x + y + z = 1
        let e1 = Quadric::product(&lin(&[1, 0, 0, 0]), &lin(&[0, 1, 0, 0]));
        let e2 = Quadric::from_linear(&lin(&[1, 1, 1, -1]));
        let s = solve(3, &[e1, e2], &SolverConfig::default());
        let b = s.branches();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|b| b.dim() == 1));
        assert!(b.iter().any(|b| b.contains_point(&[q(0), q(3), q(-2)])));
        assert!(b.iter().any(|b| b.contains_point(&[q(4), q(0), q(-3)])));
    }

    #[test]
    fn squares_force_zero() {
        // x² + y² = 0 → x = y = 0
        let mut e = Quadric::zero(2);
        e.m[0][0] = q(1);
        e.m[1][1] = q(1);
        let s = solve(2, &[e], &SolverConfig::default());
        assert_eq!(s.branches().len(), 1);
        assert_eq!(s.branches()[0].dim(), 0);
    }

    #[test]
    fn irrational_roots_are_unknown() {
        // x² - 2 = 0
        let mut e = Quadric::zero(1);
        e.m[0][0] = q(1);
        e.m[1][1] = q(-2);
        assert!(solve(1, &[e], &SolverConfig::default()).is_unknown());
    }

    #[test]
    fn depth_bound() {
        // x1 x2 = 0, x3 x4 = 0 with depth 1 cannot finish
        let e1 = Quadric::product(&lin(&[1, 0, 0, 0, 0]), &lin(&[0, 1, 0, 0, 0]));
        let e2 = Quadric::product(&lin(&[0, 0, 1, 0, 0]), &lin(&[0, 0, 0, 1, 0]));
        let s = solve(4, &[e1.clone(), e2.clone()], &SolverConfig { max_depth: 1 });
        assert!(s.is_unknown());
        assert_eq!(solve(4, &[e1, e2], &SolverConfig::default()).branches().len(), 4);
    }

    #[test]
    fn contained_branches_are_pruned() {
        // x*y = 0 and x*(y - 1) = 0 → x = 0 (the point y=0,y=1 branches collapse)
        let e1 = Quadric::product(&lin(&[1, 0, 0]), &lin(&[0, 1, 0]));
        let e2 = Quadric::product(&lin(&[1, 0, 0]), &lin(&[0, 1, -1]));
        let s = solve(2, &[e1, e2], &SolverConfig::default());
        assert_eq!(s.branches().len(), 1);
        assert_eq!(s.branches()[0].dim(), 1);
    }
}
