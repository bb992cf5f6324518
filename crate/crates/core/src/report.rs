//! Aggregated check records in text and JSON form.

use crate::catalog::{self, ALGEBRAS};
use crate::error::Result;
use crate::expm::{self, witnesses};
use crate::loops::{self, Construction, LoopInstance};
use crate::solver::{self, intersect, ReproduceConfig, Status};
use rand::SeedableRng;
use serde::Serialize;
use std::collections::BTreeMap;

/// One check. Field order is part of the output format.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub suite: String,
    pub case_id: String,
    pub verdict: String,
    pub expected: String,
    #[serde(rename = "match")]
    pub status: Status,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub seed: u64,
    pub records: Vec<Record>,
}

#[derive(Clone, Debug)]
pub struct Tolerances {
    pub loops: f64,
    pub exp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { loops: 1e-8, exp: 1e-10 }
    }
}

fn ok(b: bool) -> Status {
    if b {
        Status::Match
    } else {
        Status::Mismatch
    }
}

fn rec(suite: &str, id: impl Into<String>, verdict: impl Into<String>, expected: impl Into<String>, status: Status) -> Record {
    Record { suite: suite.into(), case_id: id.into(), verdict: verdict.into(), expected: expected.into(), status, details: vec![] }
}

impl Report {
    pub fn new(seed: u64) -> Self {
        Report { seed, records: vec![] }
    }

    pub fn extend(&mut self, r: Vec<Record>) {
        self.records.extend(r);
    }

    pub fn worst(&self) -> Status {
        self.records.iter().fold(Status::Match, |a, r| a.worst(r.status))
    }

    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        for r in &self.records {
            *m.entry(r.status.as_str()).or_default() += 1;
        }
        m
    }

    /// 0 if every record matches, 2 on a mismatch, 3 on an undocumented unknown.
    pub fn exit_code(&self) -> i32 {
        match self.worst() {
            Status::Match | Status::DocumentedUnknown => 0,
            Status::Mismatch => 2,
            Status::Unknown => 3,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        for r in &self.records {
            out += &format!("{:<10} {:<28} {:<18} {}  (expected {})\n", r.suite, r.case_id, r.status.as_str(), r.verdict, r.expected);
            if verbose || r.status != Status::Match {
                for d in &r.details {
                    out += &format!("    {d}\n");
                }
            }
        }
        let counts: Vec<String> = self.counts().iter().map(|(k, v)| format!("{v} {k}")).collect();
        out += &format!("{} records: {}\n", self.records.len(), counts.join(", "));
        out
    }
}

/// Structure constants: antisymmetry, Jacobi and the printed tables.
pub fn catalog_records() -> Vec<Record> {
    let mut out = vec![];
    for &name in ALGEBRAS {
        let mut r = match catalog::load_algebra(name).and_then(|a| a.validate().map(|_| a)) {
            Ok(a) => {
                let mut r = rec("catalog", name, format!("dim {}, Jacobi holds", a.dim()), "Lie algebra", Status::Match);
                if let Ok((diffs, missing)) = catalog::compare_printed(&a) {
                    for d in &diffs {
                        r.details.push(format!("[{},{}] printed {} derived {}", d.pair.0, d.pair.1, d.printed, d.derived));
                    }
                    r.details.push(format!("printed table: {} disagreements, {} pairs not listed", diffs.len(), missing.len()));
                }
                r
            }
            Err(e) => rec("catalog", name, e.to_string(), "Lie algebra", Status::Mismatch),
        };
        for def in catalog::subalgebras(name) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            if let Err(e) = catalog::check_entry(&catalog::load_algebra(name).expect("validated"), def, &mut rng) {
                r.status = Status::Mismatch;
                r.details.push(format!("{}: {e}", def.id));
            }
        }
        out.push(r);
    }
    out
}

pub fn prop_records(props: &[&str], cfg: &ReproduceConfig) -> Result<Vec<Record>> {
    let mut out = vec![];
    for p in props {
        for c in solver::reproduce(p, cfg)? {
            out.push(Record {
                suite: "prop".into(),
                case_id: c.case_id,
                verdict: c.verdict,
                expected: c.expected,
                status: c.status,
                details: c.details,
            });
        }
    }
    Ok(out)
}

/// One record per witness, with a detail line per sample.
pub fn witness_records(seed: u64, n: usize, k: u32) -> Vec<Record> {
    let rows = witnesses::verify_all_witnesses(seed, n, k);
    let mut out: Vec<Record> = vec![];
    let notes: BTreeMap<&str, &str> = witnesses::CONJUGACY_WITNESSES.iter().map(|w| (w.id, w.note)).collect();
    for row in rows {
        let id = format!("{}:{}", row.kind, row.id);
        let line = format!("[{}] {}: {}", if row.ok { "ok" } else { "FAIL" }, row.sample, row.detail);
        match out.iter_mut().find(|r| r.case_id == id) {
            Some(r) => {
                r.details.push(line);
                r.status = r.status.worst(ok(row.ok));
            }
            None => {
                let mut r = rec("witness", id, "", "holds exactly", ok(row.ok));
                if let Some(note) = notes.get(row.id.as_str()).filter(|n| !n.is_empty()) {
                    r.details.push(format!("corrected: {note}"));
                }
                r.details.push(line);
                out.push(r);
            }
        }
    }
    for r in &mut out {
        let bad = r.details.iter().filter(|d| d.starts_with("[FAIL]")).count();
        let total = r.details.iter().filter(|d| d.starts_with('[')).count();
        r.verdict = format!("{}/{} samples hold", total - bad, total);
    }
    out
}

pub fn exp_records(seed: u64, n: usize, max_norm: f64, tol: f64) -> Vec<Record> {
    ["sl2R", "so3"]
        .iter()
        .map(|name| match catalog::load_algebra(name).and_then(|a| expm::exp_check(&a, n, max_norm, seed)) {
            Ok(c) => {
                let worst = c.closed_vs_series.max(c.one_parameter).max(c.det);
                let mut r = rec("exp", *name, format!("max deviation {worst:.2e}"), format!("<= {tol:e}"), ok(worst <= tol));
                r.details = vec![
                    format!("closed vs series {:.2e}", c.closed_vs_series),
                    format!("one-parameter law {:.2e}", c.one_parameter),
                    format!("det - 1 {:.2e}", c.det),
                    format!("{} samples, |X| <= {}", c.samples, c.max_norm),
                ];
                r
            }
            Err(e) => rec("exp", *name, e.to_string(), format!("<= {tol:e}"), Status::Mismatch),
        })
        .collect()
}

/// Element classes stated in the text.
pub const STATED_CLASSES: &[(&str, &str, &str)] = &[
    ("sl2R", "e3", "elliptic"),
    ("sl2R", "e1", "hyperbolic"),
    ("sl2R", "e2", "hyperbolic"),
    ("sl2R", "e2 + e3", "parabolic"),
    ("sl2R", "e1 + e3", "parabolic"),
    ("su21", "e7", "loxodromic"),
    ("su21", "e4", "loxodromic"),
];

pub fn classify_records() -> Vec<Record> {
    STATED_CLASSES
        .iter()
        .map(|(a, x, want)| {
            let got = catalog::load_algebra(a).and_then(|alg| {
                let e = alg.parse_element(x, &[])?;
                alg.classify(&e)
            });
            match got {
                Ok(c) => {
                    let kind = c.kind.to_string();
                    let mut r = rec("classify", format!("{a}:{x}"), format!("{kind} (k = {})", crate::field::fmt_q(&c.killing)), *want, ok(kind.contains(want)));
                    r.details.push(format!("Killing value {}", crate::field::fmt_q(&c.killing)));
                    r
                }
                Err(e) => rec("classify", format!("{a}:{x}"), e.to_string(), *want, Status::Mismatch),
            }
        })
        .collect()
}

fn expect_bruck(l: &LoopInstance) -> bool {
    matches!(l.construction, Construction::H2 | Construction::H2xH2)
}

pub fn loop_records(seed: u64, n: usize, tol: f64) -> Vec<Record> {
    let mut out = vec![];
    for l in LoopInstance::catalog() {
        let r = match loops::check_loop(&l, n, seed, 1.0) {
            Ok(r) => r,
            Err(e) => {
                out.push(rec("loop", l.name.clone(), e.to_string(), "loop", Status::Mismatch));
                continue;
            }
        };
        let mut push = |check: &str, dev: f64, expected_ok: bool| {
            let good = if expected_ok { dev <= tol } else { dev > tol };
            let expected = if expected_ok { format!("<= {tol:e}") } else { format!("> {tol:e}") };
            out.push(rec("loop", format!("{}:{check}", l.name), format!("max deviation {dev:.2e}"), expected, ok(good)));
        };
        push("decompose", r.decomposition, true);
        push("identity", r.identity, true);
        push("division", r.division, true);
        push("left-A", r.left_a, true);
        push("bol", r.bol, true);
        push("H-invariance", r.h_invariance, true);
        let bruck = expect_bruck(&l);
        push("automorphic-inverse", r.automorphic_inverse, bruck);
        let t = &r.tangent;
        let mut tr = rec(
            "loop",
            format!("{}:tangent", l.name),
            format!("bruck {}, bol {}", t.bruck, t.bol),
            format!("bruck {bruck}, bol true"),
            ok(t.bruck == bruck && t.bol && t.reductive && t.complement && t.generating),
        );
        tr.details.push(format!("{}: complement {}, reductive {}, generating {}", t.algebra, t.complement, t.reductive, t.generating));
        out.push(tr);
        if !r.errors.is_empty() {
            let mut e = rec("loop", format!("{}:samples", l.name), format!("{} failed samples", r.errors.len()), "0 failed samples", Status::Mismatch);
            e.details = r.errors.clone();
            out.push(e);
        }
    }
    let (bad, worst) = loops::sharp_transitivity(n, seed);
    out.push(rec("loop", "H2:sharp-transitivity", format!("{bad} bad coset pairs, residual {worst:.2e}"), "0 bad pairs", ok(bad == 0 && worst <= tol)));
    let fd = loops::checks::tangent_fd();
    out.push(rec("loop", "H2:section-tangent", format!("deviation {fd:.2e}"), "<= 1e-6", ok(fd <= 1e-6)));
    out.push(symmetric_space_record());
    out
}

/// `[m6, m6] ⊆ h6` in sl3R.
fn symmetric_space_record() -> Record {
    let h = catalog::subalgebra("sl3R", "h6").map(|d| d.basis.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let m: Vec<String> = ["e5", "e8", "e1 + e3", "e2 + e4", "e7 + e6"].iter().map(|s| s.to_string()).collect();
    match h.and_then(|h| loops::tangent_report("sl3R", &m, &h)) {
        Ok(t) => rec("loop", "sl3R:h6/m6:tangent", format!("bruck {}", t.bruck), "bruck true", ok(t.bruck && t.reductive && t.complement)),
        Err(e) => rec("loop", "sl3R:h6/m6:tangent", e.to_string(), "bruck true", Status::Mismatch),
    }
}

pub fn intersection_records(seed: u64, n: usize) -> Result<Vec<Record>> {
    let rows = intersect::intersection_suite(seed, n, &[4, 5])?;
    let mut out = vec![];
    for alg in ["sl2xsl2", "sl2xso3"] {
        for dim in [4, 5] {
            let sel: Vec<_> = rows.iter().filter(|r| r.algebra == alg && r.dim == dim).collect();
            let bad = sel.iter().filter(|r| !r.ok).count();
            let min = sel.iter().map(|r| r.first.min(r.second)).min().unwrap_or(0);
            out.push(rec(
                "intersect",
                format!("{alg}:dim{dim}"),
                format!("{} subspaces, min intersection {min}", sel.len()),
                format!(">= {} with each summand", dim - 3),
                ok(bad == 0),
            ));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RunAll {
    pub seed: u64,
    pub samples: usize,
    pub tol: Tolerances,
    pub props: ReproduceConfig,
}

impl RunAll {
    pub fn new(seed: u64) -> Self {
        RunAll { seed, samples: 100, tol: Tolerances::default(), props: ReproduceConfig { seed, ..Default::default() } }
    }
}

pub fn report_all(cfg: &RunAll) -> Result<Report> {
    let mut r = Report::new(cfg.seed);
    r.extend(catalog_records());
    r.extend(prop_records(catalog::PROPOSITIONS, &cfg.props)?);
    r.extend(witness_records(cfg.seed, 5, 7));
    r.extend(classify_records());
    r.extend(exp_records(cfg.seed, cfg.samples, 5.0, cfg.tol.exp));
    r.extend(loop_records(cfg.seed, cfg.samples, cfg.tol.loops));
    r.extend(intersection_records(cfg.seed, cfg.samples)?);
    Ok(r)
}
