//! Exponential representatives in PSL2(R) × G2 for elements of the
//! complements of `(x3, εy_j)` type, and the identities `g = m·h = m'`.

use super::witnesses::WitnessRow;
use super::{exp_closed, CMat};
use crate::catalog::{self, conditions};
use crate::field::{fmt_q, q_to_f64};
use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

pub const TOL: f64 = 1e-9;

/// A pair of 2×2 matrices standing for an element of a product group.
pub type Pair = (CMat, CMat);

fn m2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> CMat {
    CMat::from_row_slice(2, 2, &[a, b, c, d])
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Distance in PSL2: `min(|x - y|, |x + y|)`, entrywise maximum.
pub fn proj_dist(x: &CMat, y: &CMat) -> f64 {
    let d = |m: CMat| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    d(x - y).min(d(x + y))
}

pub fn pair_dist(x: &Pair, y: &Pair) -> f64 {
    proj_dist(&x.0, &y.0).max(proj_dist(&x.1, &y.1))
}

fn mul(x: &Pair, y: &Pair) -> Pair {
    (&x.0 * &y.0, &x.1 * &y.1)
}

/// `ε = 1` for sl2 ⊕ sl2 and `ε = i` for sl2 ⊕ so3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Second {
    Sl2,
    So3,
}

impl Second {
    fn eps(self) -> Complex64 {
        match self {
            Second::Sl2 => re(1.0),
            Second::So3 => Complex64::i(),
        }
    }
    fn algebra(self) -> &'static str {
        match self {
            Second::Sl2 => "sl2R",
            Second::So3 => "so3",
        }
    }
}

/// `A`, the rotation `exp(k e3)`.
pub fn rotation(t: f64) -> CMat {
    m2(re(t.cos()), re(t.sin()), re(-t.sin()), re(t.cos()))
}

/// The stated second component of `exp v_{j,l}` with `t = k/l`.
/// `flip_j2` reproduces the lower-left sign as originally typeset for `j = 2`.
pub fn stated_second(j: usize, t: f64, eps: Complex64, flip_j2: bool) -> CMat {
    let (ch, sh) = ((eps * t).cosh(), (eps * t).sinh());
    match j {
        3 => rotation(t),
        2 => m2(ch, sh, if flip_j2 { -sh } else { sh }, ch),
        _ => m2(ch + sh, re(0.0), re(0.0), ch - sh),
    }
}

/// `(exp v_{j,l}, exp w_{j,l})` computed from the closed-form exponential.
pub fn exponentials(second: Second, j: usize, k: f64, l: f64) -> (Pair, Pair) {
    let sl2 = catalog::load_algebra("sl2R").expect("sl2R");
    let g2 = catalog::load_algebra(second.algebra()).expect("second factor");
    let mut y = [0.0; 3];
    // the basis of so3 is (i e1, i e2, e3), so ε e_j is a basis vector there too
    y[j - 1] = k / l;
    let v1 = [0.0, 0.0, k];
    let w1 = [0.0, (k * k - 4.0 * PI * PI).sqrt(), k];
    let e2 = exp_closed(&g2, &y).expect("closed form");
    let v = (exp_closed(&sl2, &v1).expect("closed form"), e2.clone());
    let w = (exp_closed(&sl2, &w1).expect("closed form"), e2);
    (v, w)
}

/// Rows for one `(G2, j, l)`: the representatives `m_{2i-1}`, `m_{2i}`,
/// `g_i` against their stated forms and the identity `g_i = m_{2i-1}·h_1 = m_{2i}`.
pub fn check_case(second: Second, j: usize, k: u32, l: f64) -> Vec<(String, bool, String)> {
    let kf = k as f64;
    let (mv, mw) = exponentials(second, j, kf, l);
    let idx = 4 - j; // j = 3, 2, 1 → case 1, 2, 3
    let eps = second.eps();
    let a = rotation(kf);
    let r = stated_second(j, kf / l, eps, false);
    let id = CMat::identity(2, 2);
    let stated_v: Pair = (a.clone(), r.clone());
    let stated_w: Pair = (id.clone(), r.clone());
    let g: Pair = (id.clone(), r);
    let h1: Pair = (a.try_inverse().expect("rotation"), id);
    let mut out = vec![];
    let mut row = |name: String, d: f64| out.push((name, d <= TOL, format!("max deviation {d:.2e}")));
    row(format!("m{}", 2 * idx - 1), pair_dist(&mv, &stated_v));
    row(format!("m{}", 2 * idx), pair_dist(&mw, &stated_w));
    row(format!("g{idx} = m{}·h1", 2 * idx - 1), pair_dist(&g, &mul(&mv, &h1)));
    row(format!("g{idx} = m{}", 2 * idx), pair_dist(&g, &mw));
    out
}

pub fn check_all(k: u32, n: usize, rng: &mut ChaCha8Rng) -> Vec<WitnessRow> {
    let mut rows = vec![];
    let conds = catalog::parse_conditions("l != 0").expect("static conditions");
    for second in [Second::Sl2, Second::So3] {
        for j in [3, 2, 1] {
            for _ in 0..n {
                let vals = conditions::sample(&["l"], &conds, &vec![], rng).expect("l != 0 is satisfiable");
                let l = q_to_f64(&vals[0].1);
                for (name, ok, detail) in check_case(second, j, k, l) {
                    rows.push(WitnessRow {
                        id: format!("sl2x{}.{name}", if second == Second::Sl2 { "sl2" } else { "so3" }),
                        kind: "exp-identity",
                        sample: format!("k={k}, l={}", fmt_q(&vals[0].1)),
                        ok,
                        detail,
                    });
                }
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_at_k7() {
        for s in [Second::Sl2, Second::So3] {
            for j in [1, 2, 3] {
                for l in [0.5, -2.0, 3.0] {
                    for (name, ok, d) in check_case(s, j, 7, l) {
                        assert!(ok, "{s:?} j={j} l={l} {name}: {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn flipped_sign_is_not_the_exponential() {
        let (v, _) = exponentials(Second::Sl2, 2, 7.0, 2.0);
        let typeset = stated_second(2, 3.5, re(1.0), true);
        assert!(proj_dist(&v.1, &typeset) > 1.0);
        let (v, _) = exponentials(Second::So3, 2, 7.0, 2.0);
        let typeset = stated_second(2, 3.5, Complex64::i(), true);
        assert!(proj_dist(&v.1, &typeset) > 0.1);
    }
}
