//! Runs every cataloged case through the solver and compares with the
//! expected verdicts.

use super::solve::{solve, Branch, SolutionSet, SolverConfig};
use super::system::{constraints, verify_pair, Chart, PairVerdict};
use crate::algebra::{LieAlgebra, Subspace};
use crate::catalog::{self, conditions, Assignment, Expect, ExpectedOutcome};
use crate::error::{Error, Result};
use crate::expr::BasisEnv;
use crate::field::{fmt_q, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    Unknown,
    /// Unknown in a region the source itself leaves open.
    DocumentedUnknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Unknown => "unknown",
            Status::DocumentedUnknown => "documented-unknown",
        }
    }

    pub fn worst(self, o: Status) -> Status {
        use Status::*;
        match (self, o) {
            (Mismatch, _) | (_, Mismatch) => Mismatch,
            (Unknown, _) | (_, Unknown) => Unknown,
            (DocumentedUnknown, _) | (_, DocumentedUnknown) => DocumentedUnknown,
            _ => Match,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub prop: String,
    pub case_id: String,
    pub subalgebra: String,
    pub verdict: String,
    pub expected: String,
    pub status: Status,
    pub details: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ReproduceConfig {
    pub seed: u64,
    /// Samples of the subalgebra parameters per case.
    pub h_samples: usize,
    /// Samples per stated complement family.
    pub family_samples: usize,
    pub solver: SolverConfig,
}

impl Default for ReproduceConfig {
    fn default() -> Self {
        ReproduceConfig { seed: 1, h_samples: 3, family_samples: 3, solver: SolverConfig::default() }
    }
}

fn case_seed(seed: u64, id: &str) -> u64 {
    // FNV-1a, so each case draws the same values regardless of run order
    let mut h: u64 = 0xcbf29ce484222325 ^ seed;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub fn reproduce(prop: &str, cfg: &ReproduceConfig) -> Result<Vec<CaseReport>> {
    let cases = catalog::expected_outcomes(prop);
    if cases.is_empty() {
        return Err(Error::UnknownCase(prop.to_string()));
    }
    Ok(cases.par_iter().map(|c| reproduce_case(c, cfg)).collect())
}

pub fn reproduce_case(outcome: &ExpectedOutcome, cfg: &ReproduceConfig) -> CaseReport {
    let mut report = CaseReport {
        prop: outcome.prop.to_string(),
        case_id: outcome.case_id(),
        subalgebra: format!("{}.{}", outcome.algebra, outcome.subalgebra),
        verdict: String::new(),
        expected: expected_label(&outcome.expect),
        status: Status::Match,
        details: vec![],
    };
    if let Err(e) = run_case(outcome, cfg, &mut report) {
        report.status = Status::Mismatch;
        report.verdict = "error".into();
        report.details.push(format!("error: {e}"));
    }
    report
}

fn expected_label(e: &Expect) -> String {
    match e {
        Expect::Reductive(fams) => {
            let labels: Vec<&str> = fams.iter().map(|f| f.label).collect();
            format!("reductive ({})", labels.join(", "))
        }
        Expect::NotReductive(_) => "not reductive".into(),
        Expect::Open(_) => "open".into(),
    }
}

fn fmt_assignment(a: &Assignment) -> String {
    let parts: Vec<String> = a.iter().map(|(n, v)| format!("{n}={}", fmt_q(v))).collect();
    parts.join(", ")
}

struct BranchInfo {
    branch: Branch,
    generating: bool,
}

fn analyse_branches(
    alg: &LieAlgebra,
    chart: &Chart,
    h: &Subspace,
    sol: &SolutionSet,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<BranchInfo>> {
    let mut out = vec![];
    for b in sol.branches() {
        let mut generating = false;
        for _ in 0..5 {
            let theta = b.sample(rng);
            let m = chart.complement(alg, &theta);
            match verify_pair(alg, h, &m)? {
                PairVerdict::Reductive { generates } => generating |= generates,
                PairVerdict::NotReductive(w) => {
                    return Err(Error::Precondition(format!(
                        "solver returned a non-reductive point: {} ({})",
                        fmt_assignment(&chart.names.iter().cloned().zip(theta).collect()),
                        w.bracket
                    )))
                }
            }
        }
        out.push(BranchInfo { branch: b.clone(), generating });
    }
    Ok(out)
}

fn run_case(outcome: &ExpectedOutcome, cfg: &ReproduceConfig, report: &mut CaseReport) -> Result<()> {
    let alg = catalog::load_algebra(outcome.algebra)?;
    let def = catalog::subalgebra(outcome.algebra, outcome.subalgebra)?;
    let mut conds = catalog::parse_conditions(def.conditions)?;
    conds.extend(catalog::parse_conditions(outcome.region)?);
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, &report.case_id));
    let samples = if def.params.is_empty() { 1 } else { cfg.h_samples.max(1) };
    let mut status = Status::Match;
    let mut verdicts = vec![];
    for _ in 0..samples {
        let hp = conditions::sample(def.params, &conds, &vec![], &mut rng)?;
        let (s, v) = run_sample(&alg, def, outcome, &hp, cfg, &mut rng, &mut report.details)?;
        status = status.worst(s);
        verdicts.push(v);
    }
    verdicts.dedup();
    report.verdict = verdicts.join(" | ");
    report.status = status;
    Ok(())
}

fn run_sample(
    alg: &LieAlgebra,
    def: &catalog::SubalgebraDef,
    outcome: &ExpectedOutcome,
    hp: &Assignment,
    cfg: &ReproduceConfig,
    rng: &mut ChaCha8Rng,
    details: &mut Vec<String>,
) -> Result<(Status, String)> {
    let at = if hp.is_empty() { String::new() } else { format!(" at {}", fmt_assignment(hp)) };
    let fam = catalog::complement_family(outcome.algebra, def.id, hp)?;
    let chart = Chart::from_def(alg, def, fam, hp)?;
    let h = chart.h(alg);
    if h != def.instantiate(alg, hp)? || !alg.is_subalgebra(&h) {
        return Err(Error::Catalog(format!("{}: bad subalgebra data", def.id)));
    }
    let sys = constraints(alg, &chart);
    let sol = solve(chart.nv(), &sys.quadrics(), &cfg.solver);
    let infos = analyse_branches(alg, &chart, &h, &sol, rng)?;
    let generating: Vec<&BranchInfo> = infos.iter().filter(|b| b.generating).collect();
    let verdict = match &sol {
        SolutionSet::Unsat => "not reductive (unsat)".to_string(),
        SolutionSet::Unknown { residual, .. } => format!("unknown ({} unresolved)", residual.len()),
        SolutionSet::Branches(_) if generating.is_empty() => "not reductive (no generating complement)".to_string(),
        SolutionSet::Branches(_) => format!("reductive ({} branch(es))", generating.len()),
    };
    details.push(format!(
        "{}{}: {} params, {} equations, {}",
        chart.symbol,
        at,
        chart.nv(),
        sys.equations.len(),
        verdict
    ));
    for b in &infos {
        details.push(format!(
            "  branch dim {}{}: {}",
            b.branch.dim(),
            if b.generating { "" } else { " (does not generate g)" },
            b.branch.describe(&chart.names)
        ));
    }
    if let SolutionSet::Unknown { residual, .. } = &sol {
        for r in residual {
            let eqs: Vec<String> = r.equations.iter().map(|q| format!("{} = 0", q.format(&chart.names))).collect();
            details.push(format!("  residual on {}: {} [{}]", r.branch.describe(&chart.names), eqs.join(", "), r.reason));
        }
    }
    let status = match &outcome.expect {
        Expect::Open(note) => {
            details.push(format!("  open region: {note}"));
            Status::DocumentedUnknown
        }
        _ if sol.is_unknown() => Status::Unknown,
        Expect::NotReductive(w) => {
            let mut st = if generating.is_empty() { Status::Match } else { Status::Mismatch };
            let theta0 = vec![Q::from_integer(0.into()); chart.nv()];
            if let PairVerdict::NotReductive(w0) = verify_pair(alg, &h, &chart.complement(alg, &theta0))? {
                details.push(format!(
                    "  witness at θ=0: [{}, {}] = {} has h-component {}",
                    w0.h, w0.m, w0.bracket, w0.h_component
                ));
            }
            if let Some(w) = w {
                if check_witness(alg, &chart, hp, w, rng)? {
                    details.push(format!("  stated witness [{}, {}{}] = {} verified", w.h, chart.symbol, w.generator, w.bracket));
                } else {
                    details.push(format!("  stated witness [{}, {}{}] = {} FAILED", w.h, chart.symbol, w.generator, w.bracket));
                    st = Status::Mismatch;
                }
            }
            st
        }
        Expect::Reductive(fams) => {
            let mut st = Status::Match;
            let mut hit = vec![false; infos.len()];
            for f in fams.iter() {
                if !f.note.is_empty() {
                    details.push(format!("  {}: {}", f.label, f.note));
                }
                let fconds = catalog::parse_conditions(f.conditions)?;
                for _ in 0..cfg.family_samples.max(1) {
                    let fp = conditions::sample_nonzero(f.params, &fconds, hp, rng)?;
                    let vecs = f.vectors(alg, &fp)?;
                    let m = Subspace::span(alg, &vecs);
                    let label = format!("{}({})", f.label, fmt_assignment(&fp[hp.len()..].to_vec()));
                    if m.dim() != vecs.len() || !m.is_complement(&h) {
                        details.push(format!("  {label} is not a complement of h"));
                        st = Status::Mismatch;
                        continue;
                    }
                    match verify_pair(alg, &h, &m)? {
                        PairVerdict::Reductive { generates: true } => {}
                        PairVerdict::Reductive { generates: false } => {
                            details.push(format!("  {label} is reductive but does not generate g"));
                            st = Status::Mismatch;
                            continue;
                        }
                        PairVerdict::NotReductive(w) => {
                            details.push(format!(
                                "  {label} fails: [{}, {}] = {} has h-component {}",
                                w.h, w.m, w.bracket, w.h_component
                            ));
                            st = Status::Mismatch;
                            continue;
                        }
                    }
                    let theta = chart.coordinates(&vecs).expect("complement has chart coordinates");
                    let mut found = false;
                    for (i, b) in infos.iter().enumerate() {
                        if b.branch.contains_point(&theta) {
                            hit[i] = true;
                            found = true;
                        }
                    }
                    if !found {
                        details.push(format!("  {label} lies in no solved branch"));
                        st = Status::Mismatch;
                    }
                }
            }
            for (i, b) in infos.iter().enumerate() {
                if b.generating && !hit[i] {
                    details.push(format!(
                        "  extra generating branch not covered by the stated families: {}",
                        b.branch.describe(&chart.names)
                    ));
                    st = Status::Mismatch;
                }
            }
            if generating.is_empty() {
                st = Status::Mismatch;
            }
            st
        }
    };
    Ok((status, verdict))
}

fn check_witness(
    alg: &LieAlgebra,
    chart: &Chart,
    hp: &Assignment,
    w: &catalog::WitnessDef,
    rng: &mut ChaCha8Rng,
) -> Result<bool> {
    let hv = alg.parse_vector(w.h, hp)?;
    if !chart.h(alg).contains(&hv) {
        return Ok(false);
    }
    for _ in 0..3 {
        let theta: Vec<Q> = (0..chart.nv()).map(|_| conditions::random_rational(rng)).collect();
        let mut scalars: Vec<(String, Q)> = chart.names.iter().cloned().zip(theta.iter().cloned()).collect();
        scalars.extend(hp.iter().cloned());
        let env = BasisEnv { labels: &alg.labels, scalars: &scalars };
        let claimed = crate::expr::eval_str::<Q>(w.bracket, &env)?.vector()?;
        let actual = alg.bracket_coords(&hv, &chart.generator(w.generator - 1, &theta));
        if claimed != actual {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exit-code summary of a set of reports.
pub fn summarize(reports: &[CaseReport]) -> (usize, usize, usize) {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    (count(Status::Match), count(Status::Mismatch), count(Status::Unknown))
}
