//! Side conditions on parameters and a seeded rational sampler.
//!
//! Conditions are `;`-separated: `a != 0`, `b >= 0`, `a notin {0, 1}`,
//! `a = -2` (pins a parameter) or `d := (b*c - 1/2)/a` (derived parameter).

use crate::error::{Error, Result};
use crate::expr::{self, BasisEnv, Expr};
use crate::field::Q;
use num_traits::Zero;
use rand::Rng;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub enum Cond {
    Assign(String, Expr),
    Rel(Expr, Rel, Expr),
    NotIn(Expr, Vec<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

pub type Assignment = Vec<(String, Q)>;

pub fn parse_conditions(src: &str) -> Result<Vec<Cond>> {
    src.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_cond)
        .collect()
}

fn parse_cond(s: &str) -> Result<Cond> {
    if let Some((l, r)) = s.split_once(":=") {
        return Ok(Cond::Assign(l.trim().to_string(), expr::parse(r)?));
    }
    if let Some((l, r)) = s.split_once("notin") {
        let r = r.trim().trim_start_matches('{').trim_end_matches('}');
        let items = r.split(',').map(expr::parse).collect::<std::result::Result<_, _>>()?;
        return Ok(Cond::NotIn(expr::parse(l)?, items));
    }
    for (tok, rel) in [("!=", Rel::Ne), (">=", Rel::Ge), ("<=", Rel::Le), ("=", Rel::Eq), (">", Rel::Gt), ("<", Rel::Lt)] {
        if let Some((l, r)) = s.split_once(tok) {
            return Ok(Cond::Rel(expr::parse(l)?, rel, expr::parse(r)?));
        }
    }
    Err(Error::Catalog(format!("cannot parse condition `{s}`")))
}

fn eval(e: &Expr, vals: &Assignment) -> Option<Q> {
    let env = BasisEnv { labels: &[], scalars: vals };
    e.eval(&env).ok()?.scalar().ok()
}

impl Cond {
    /// `None` when the condition cannot be evaluated (e.g. division by zero).
    pub fn holds(&self, vals: &Assignment) -> Option<bool> {
        match self {
            Cond::Assign(name, e) => {
                let v = vals.iter().find(|(n, _)| n == name)?.1.clone();
                Some(eval(e, vals)? == v)
            }
            Cond::Rel(l, rel, r) => {
                let o = eval(l, vals)?.cmp(&eval(r, vals)?);
                Some(match rel {
                    Rel::Eq => o == Ordering::Equal,
                    Rel::Ne => o != Ordering::Equal,
                    Rel::Lt => o == Ordering::Less,
                    Rel::Le => o != Ordering::Greater,
                    Rel::Gt => o == Ordering::Greater,
                    Rel::Ge => o != Ordering::Less,
                })
            }
            Cond::NotIn(l, items) => {
                let v = eval(l, vals)?;
                for i in items {
                    if eval(i, vals)? == v {
                        return Some(false);
                    }
                }
                Some(true)
            }
        }
    }

    /// The parameter this condition pins, if any.
    fn pinned(&self, params: &[&str]) -> Option<(String, Expr)> {
        match self {
            Cond::Assign(n, e) => Some((n.clone(), e.clone())),
            Cond::Rel(Expr::Ident(n), Rel::Eq, e) if params.contains(&n.as_str()) => Some((n.clone(), e.clone())),
            _ => None,
        }
    }
}

pub fn all_hold(conds: &[Cond], vals: &Assignment) -> bool {
    conds.iter().all(|c| c.holds(vals) == Some(true))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into())
}

/// Draws values for `params` satisfying `conds`, on top of `known`.
pub fn sample<R: Rng>(params: &[&str], conds: &[Cond], known: &Assignment, rng: &mut R) -> Result<Assignment> {
    let pinned: Vec<(String, Expr)> = conds.iter().filter_map(|c| c.pinned(params)).collect();
    for _ in 0..5000 {
        let mut vals = known.clone();
        for p in params {
            if !pinned.iter().any(|(n, _)| n == p) {
                vals.push((p.to_string(), random_rational(rng)));
            }
        }
        let mut ok = true;
        for (n, e) in &pinned {
            match eval(e, &vals) {
                Some(v) => vals.push((n.clone(), v)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && all_hold(conds, &vals) {
            return Ok(vals);
        }
    }
    Err(Error::Catalog(format!("no admissible sample for {params:?}")))
}

/// Zero-free admissible values are preferred for generic checks; this draws a
/// sample whose free parameters are all nonzero.
pub fn sample_nonzero<R: Rng>(params: &[&str], conds: &[Cond], known: &Assignment, rng: &mut R) -> Result<Assignment> {
    for _ in 0..200 {
        let s = sample(params, conds, known, rng)?;
        if s.iter().skip(known.len()).all(|(_, v)| !v.is_zero()) {
            return Ok(s);
        }
    }
    sample(params, conds, known, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qf};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_respect_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let conds = parse_conditions("a notin {0, 1, -1/2, -2}; b >= 0").unwrap();
        for _ in 0..50 {
            let s = sample(&["a", "b"], &conds, &vec![], &mut rng).unwrap();
            assert!(![q(0), q(1), qf(-1, 2), q(-2)].contains(&s[0].1));
            assert!(s[1].1 >= q(0));
        }
    }

    #[test]
    fn pinned_and_derived_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let conds = parse_conditions("a = -2").unwrap();
        let s = sample(&["a"], &conds, &vec![], &mut rng).unwrap();
        assert_eq!(s[0].1, q(-2));
        let conds = parse_conditions("a != 0; d := (b*c - 1/2)/a").unwrap();
        let s = sample(&["a", "b", "c", "d"], &conds, &vec![], &mut rng).unwrap();
        let get = |n: &str| s.iter().find(|(m, _)| m == n).unwrap().1.clone();
        assert_eq!(get("b") * get("c") - get("a") * get("d"), qf(1, 2));
    }

    #[test]
    fn unsatisfiable_conditions_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let conds = parse_conditions("a > 1; a < 0").unwrap();
        assert!(sample(&["a"], &conds, &vec![], &mut rng).is_err());
    }
}
