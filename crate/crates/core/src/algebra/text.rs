//! Plain-text import and export of structure constants.
//!
//! ```text
//! name: sl2R
//! dim: 3
//! killing_normalization: 1/8
//! labels: e1 e2 e3
//! 1 2 3 2
//! ```
//!
//! Each data line `i j k c` sets the `e_k` coefficient of `[e_i, e_j]` (1-indexed).
//! Missing `[e_j, e_i]` entries are filled by antisymmetry.

use super::{default_labels, LieAlgebra};
use crate::error::{Error, Result};
use crate::field::{fmt_q, parse_q, Q};
use num_traits::Zero;

pub fn to_text(a: &LieAlgebra) -> String {
    let mut s = format!(
        "name: {}\ndim: {}\nkilling_normalization: {}\nlabels: {}\n",
        a.name(),
        a.dim(),
        fmt_q(&a.killing_normalization),
        a.labels.join(" ")
    );
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            for (k, c) in a.structure(i, j).iter().enumerate() {
                if !c.is_zero() {
                    s.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, fmt_q(c)));
                }
            }
        }
    }
    s
}

pub fn from_text(src: &str) -> Result<LieAlgebra> {
    let mut name = None;
    let mut dim = None;
    let mut nu = None;
    let mut labels = None;
    let mut entries: Vec<(usize, usize, usize, Q, usize)> = vec![];
    let bad = |line: usize, msg: &str| Error::AlgebraText { line, msg: msg.to_string() };
    for (ln, raw) in src.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, val)) = line.split_once(':') {
            let val = val.trim();
            match key.trim() {
                "name" => name = Some(val.to_string()),
                "dim" => dim = Some(val.parse::<usize>().map_err(|_| bad(ln, "bad dim"))?),
                "killing_normalization" => {
                    nu = Some(parse_q(val).ok_or_else(|| bad(ln, "bad normalization"))?)
                }
                "labels" => labels = Some(val.split_whitespace().map(String::from).collect::<Vec<_>>()),
                _ => return Err(bad(ln, "unknown header")),
            }
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(bad(ln, "expected `i j k coefficient`"));
        }
        let idx = |s: &str| s.parse::<usize>().map_err(|_| bad(ln, "bad index"));
        let c = parse_q(parts[3]).ok_or_else(|| bad(ln, "bad coefficient"))?;
        entries.push((idx(parts[0])?, idx(parts[1])?, idx(parts[2])?, c, ln));
    }
    let name = name.ok_or_else(|| bad(0, "missing name"))?;
    let n = dim.ok_or_else(|| bad(0, "missing dim"))?;
    let nu = nu.ok_or_else(|| bad(0, "missing killing_normalization"))?;
    let labels = labels.unwrap_or_else(|| default_labels(n));
    if labels.len() != n {
        return Err(bad(0, "label count differs from dim"));
    }
    let mut consts = vec![vec![vec![Q::zero(); n]; n]; n];
    let mut given = vec![vec![false; n]; n];
    for (i, j, k, c, ln) in &entries {
        if !(1..=n).contains(i) || !(1..=n).contains(j) || !(1..=n).contains(k) {
            return Err(bad(*ln, "index out of range"));
        }
        consts[i - 1][j - 1][k - 1] = c.clone();
        given[i - 1][j - 1] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if given[i][j] && !given[j][i] {
                consts[j][i] = consts[i][j].iter().map(|x| -x.clone()).collect();
            }
        }
    }
    let a = LieAlgebra::from_consts(&name, labels, consts, nu);
    a.validate()?;
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = "name: s\ndim: 3\nkilling_normalization: 1/8\n1 2 3 2\n1 3 2 2\n3 2 1 2\n";

    #[test]
    fn roundtrip() {
        let a = from_text(SL2).unwrap();
        let b = from_text(&to_text(&a)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.structure(i, j), b.structure(i, j));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_text("name: s\ndim: 2\n").is_err());
        assert!(from_text("name: s\ndim: 3\nkilling_normalization: 1\n1 2 9 1\n").is_err());
        // violates Jacobi
        let bad = "name: s\ndim: 3\nkilling_normalization: 1\n1 2 1 1\n1 3 1 1\n2 3 2 1\n";
        assert!(matches!(from_text(bad), Err(Error::Jacobi(..))));
    }
}
