//! Algebras, subalgebras, complement families and the expected verdicts.

mod algebras;
pub mod conditions;
mod data;
mod expected;

pub use algebras::{
    compare_printed, load_algebra, printed_table, sl2_matrices, sl2c, sl2r, sl2xsl2, sl2xso3, sl3r, so3, su21,
    TableDiff, ALGEBRAS,
};
pub use conditions::{parse_conditions, sample, Assignment, Cond};
pub use data::{FAMILIES, SUBALGEBRAS};
pub use expected::{EXPECTED, PROPOSITIONS};

use crate::algebra::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::field::Q;
use crate::linalg;
use serde::Serialize;

/// A subalgebra shape. `algebra` is `sl2xg2` for shapes shared by both
/// direct sums.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SubalgebraDef {
    pub algebra: &'static str,
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub conditions: &'static str,
    pub basis: &'static [&'static str],
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub enum Naming {
    /// One letter per generator, indexed by direction: `a1, a2, …` belong to `X1`.
    ByGenerator(&'static [&'static str]),
    /// One letter per direction, indexed by generator: `a1` belongs to `X1`.
    ByDirection(&'static [&'static str]),
}

/// A chart of complements `X_j = f_j + Σ_k θ_jk d_k` where the `d_k` span h.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FamilyDef {
    pub algebra: &'static str,
    pub subalgebra: &'static str,
    /// Conditions on the subalgebra parameters under which this chart applies.
    pub region: &'static str,
    pub symbol: &'static str,
    pub fixed: &'static [&'static str],
    /// Directions spanning h; empty means the subalgebra basis.
    pub directions: &'static [&'static str],
    pub naming: Naming,
    pub note: &'static str,
}

/// A complement family as stated in a proposition.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ListedFamily {
    pub label: &'static str,
    pub params: &'static [&'static str],
    pub conditions: &'static str,
    pub basis: &'static [&'static str],
    /// Corrections applied to the printed form, if any.
    pub note: &'static str,
}

/// `[h, X_gen] = bracket` at every chart point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WitnessDef {
    pub h: &'static str,
    pub generator: usize,
    pub bracket: &'static str,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub enum Expect {
    Reductive(&'static [ListedFamily]),
    NotReductive(Option<WitnessDef>),
    /// Parameter region the source leaves open.
    Open(&'static str),
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExpectedOutcome {
    pub prop: &'static str,
    pub case: &'static str,
    pub algebra: &'static str,
    pub subalgebra: &'static str,
    pub region: &'static str,
    pub expect: Expect,
}

impl ExpectedOutcome {
    pub fn case_id(&self) -> String {
        format!("{}.{}", self.prop, self.case)
    }
}

fn matches_algebra(def_alg: &str, alg: &str) -> bool {
    def_alg == alg || (def_alg == "sl2xg2" && (alg == "sl2xsl2" || alg == "sl2xso3"))
}

/// Subalgebra shapes available in `algebra`.
pub fn subalgebras(algebra: &str) -> Vec<&'static SubalgebraDef> {
    let so3_only = ["h7", "h8", "h9", "h10", "h12k3", "h16", "h17", "h18"];
    SUBALGEBRAS
        .iter()
        .filter(|s| matches_algebra(s.algebra, algebra))
        .filter(|s| algebra != "sl2xso3" || so3_only.contains(&s.id))
        .collect()
}

pub fn subalgebra(algebra: &str, id: &str) -> Result<&'static SubalgebraDef> {
    subalgebras(algebra)
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownCase(format!("{algebra}.{id}")))
}

/// Every chart attached to a subalgebra shape.
pub fn families(algebra: &str, id: &str) -> Vec<&'static FamilyDef> {
    FAMILIES
        .iter()
        .filter(|f| matches_algebra(f.algebra, algebra) && f.subalgebra == id)
        .collect()
}

/// The chart whose region contains the given subalgebra parameters.
pub fn complement_family(algebra: &str, id: &str, hparams: &Assignment) -> Result<&'static FamilyDef> {
    for f in families(algebra, id) {
        if conditions::all_hold(&parse_conditions(f.region)?, hparams) {
            return Ok(f);
        }
    }
    Err(Error::UnknownCase(format!("{algebra}.{id}: no listed family")))
}

pub fn expected_outcomes(prop: &str) -> Vec<&'static ExpectedOutcome> {
    EXPECTED.iter().filter(|e| e.prop == prop).collect()
}

impl SubalgebraDef {
    pub fn full_id(&self, algebra: &str) -> String {
        format!("{algebra}.{}", self.id)
    }

    pub fn vectors(&self, alg: &LieAlgebra, params: &Assignment) -> Result<Vec<Vec<Q>>> {
        self.basis.iter().map(|b| alg.parse_vector(b, params)).collect()
    }

    pub fn instantiate(&self, alg: &LieAlgebra, params: &Assignment) -> Result<Subspace> {
        let v = self.vectors(alg, params)?;
        let s = Subspace::span(alg, &v);
        if s.dim() != v.len() {
            return Err(Error::Catalog(format!("{}: basis degenerates at {params:?}", self.id)));
        }
        Ok(s)
    }
}

impl FamilyDef {
    pub fn full_id(&self) -> String {
        format!("{}.{}[{}]", self.algebra, self.subalgebra, self.symbol)
    }

    /// Parameter names in chart order (generator-major).
    pub fn param_names(&self, r: usize) -> Vec<String> {
        let s = self.fixed.len();
        let mut out = Vec::with_capacity(s * r);
        for j in 0..s {
            for k in 0..r {
                out.push(match self.naming {
                    Naming::ByGenerator(l) => format!("{}{}", l[j], k + 1),
                    Naming::ByDirection(l) => format!("{}{}", l[k], j + 1),
                });
            }
        }
        out
    }
}

impl ListedFamily {
    pub fn vectors(&self, alg: &LieAlgebra, params: &Assignment) -> Result<Vec<Vec<Q>>> {
        self.basis.iter().map(|b| alg.parse_vector(b, params)).collect()
    }
}

/// Checks that catalog entries are well formed at a sample point: bases are
/// independent subalgebras and every chart's fixed vectors complement h.
pub fn check_entry<R: rand::Rng>(algebra: &LieAlgebra, def: &SubalgebraDef, rng: &mut R) -> Result<()> {
    let conds = parse_conditions(def.conditions)?;
    for f in families(algebra.name(), def.id) {
        let mut c = conds.clone();
        c.extend(parse_conditions(f.region)?);
        let hp = sample(def.params, &c, &vec![], rng)?;
        let h = def.instantiate(algebra, &hp)?;
        if !algebra.is_subalgebra(&h) {
            return Err(Error::Catalog(format!("{} is not a subalgebra", def.full_id(algebra.name()))));
        }
        let dirs = if f.directions.is_empty() { def.basis } else { f.directions };
        let dv: Vec<Vec<Q>> = dirs.iter().map(|d| algebra.parse_vector(d, &hp)).collect::<Result<_>>()?;
        if Subspace::span(algebra, &dv) != h || dv.len() != h.dim() {
            return Err(Error::Catalog(format!("{}: directions do not span h", f.full_id())));
        }
        let fv: Vec<Vec<Q>> = f.fixed.iter().map(|d| algebra.parse_vector(d, &hp)).collect::<Result<_>>()?;
        let mut all = fv.clone();
        all.extend(dv);
        if all.len() != algebra.dim() || linalg::rank(&all) != algebra.dim() {
            return Err(Error::Catalog(format!("{}: fixed vectors do not complement h", f.full_id())));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_entries_are_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["sl2C", "sl3R", "su21", "sl2xsl2", "sl2xso3"] {
            let a = load_algebra(name).unwrap();
            for def in subalgebras(name) {
                assert!(!families(name, def.id).is_empty(), "{name}.{} has no family", def.id);
                for _ in 0..3 {
                    check_entry(&a, def, &mut rng).unwrap_or_else(|e| panic!("{name}.{}: {e}", def.id));
                }
            }
        }
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(subalgebras("sl2C").len(), 6);
        assert_eq!(subalgebras("sl3R").len(), 35);
        assert_eq!(subalgebras("su21").len(), 27);
        assert_eq!(subalgebras("sl2xsl2").len(), 20);
        assert_eq!(subalgebras("sl2xso3").len(), 8);
    }

    #[test]
    fn parameter_naming() {
        let f = complement_family("sl3R", "h5", &vec![]).unwrap();
        let n = f.param_names(4);
        assert_eq!(&n[..5], ["a1", "a2", "a3", "a4", "b1"]);
        let f = complement_family("sl2C", "h1", &vec![]).unwrap();
        assert_eq!(&f.param_names(2)[..4], ["a1", "b1", "a2", "b2"]);
    }
}
