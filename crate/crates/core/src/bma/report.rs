use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{BoseMesnerAlgebra, ETraceComparison};
use crate::exactnum::{format_rational, RealScalar};

/// Indices locating a failed identity: the matrices involved and an entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn pass(identity: String) -> Self {
        Check {
            identity,
            pass: true,
            witness: None,
            detail: String::new(),
        }
    }

    pub fn fail(identity: String, witness: Option<Witness>, detail: String) -> Self {
        Check {
            identity,
            pass: false,
            witness,
            detail,
        }
    }
}

/// A named group of checks.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: &str, checks: Vec<Check>) -> Self {
        Report {
            title: title.to_string(),
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Everything the `bma` command prints.
#[derive(Clone, Debug)]
pub struct BmaReport {
    pub field: String,
    pub n: u32,
    pub t: u32,
    pub size: usize,
    pub exact: bool,
    pub rho: Vec<RealScalar>,
    pub chi: Vec<String>,
    pub lambda_s: Option<RealScalar>,
    pub ranks: Vec<usize>,
    pub expected_ranks: Vec<String>,
    pub e_trace: Option<ETraceComparison>,
    pub sections: Vec<Report>,
}

impl BmaReport {
    pub fn new(alg: &BoseMesnerAlgebra, sections: Vec<Report>) -> Self {
        BmaReport {
            field: alg.params.field.symbol().to_string(),
            n: alg.params.n,
            t: alg.params.t,
            size: alg.size,
            exact: alg.is_exact(),
            rho: alg.rho.clone(),
            chi: alg.chi.iter().map(format_rational).collect(),
            lambda_s: alg.lambda_s.clone(),
            ranks: alg.ranks.clone(),
            expected_ranks: (0..alg.ranks.len())
                .map(|i| format_rational(&alg.expected_rank(i)))
                .collect(),
            e_trace: super::e_trace_comparison(&alg.params).ok(),
            sections,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.sections.iter().all(Report::all_pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "n": self.n,
            "t": self.t,
            "size": self.size,
            "backend": if self.exact { "exact" } else { "float" },
            "rho": self.rho.iter().map(value_json).collect::<Vec<_>>(),
            "chi": self.chi,
            "lambda_s": self.lambda_s.as_ref().map(value_json),
            "ranks": self.ranks,
            "closed_form_ranks": self.expected_ranks,
            "rank_sum": self.ranks.iter().sum::<usize>(),
            "e_trace": self.e_trace.as_ref().map(|c| json!({
                "q_s_at_1": format_rational(&c.q_s_at_1),
                "rank_ls": format_rational(&c.rank_ls),
                "differs": c.differs,
            })),
            "sections": self.sections,
            "pass": self.all_pass(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Bose-Mesner algebra of a {}-design in {}P^{} with {} points ({})",
            self.t,
            self.field,
            self.n,
            self.size,
            if self.exact { "exact" } else { "float" }
        );
        for (i, r) in self.rho.iter().enumerate() {
            let _ = writeln!(out, "  rho_{i} = {}", r.describe());
        }
        for (i, c) in self.chi.iter().enumerate() {
            let _ = writeln!(out, "  chi_{i} = {c}");
        }
        if let Some(l) = &self.lambda_s {
            let _ = writeln!(out, "  lambda_s = {}", l.describe());
        }
        let ranks: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  ranks: {} (sum {})",
            ranks.join(", "),
            self.ranks.iter().sum::<usize>()
        );
        let _ = writeln!(
            out,
            "  closed-form ranks: {}",
            self.expected_ranks.join(", ")
        );
        if let Some(c) = &self.e_trace {
            let _ = writeln!(
                out,
                "  tr E_s = {} vs rank L_s = {}{}",
                format_rational(&c.q_s_at_1),
                format_rational(&c.rank_ls),
                if c.differs {
                    " (E_s is not an idempotent)"
                } else {
                    ""
                }
            );
        }
        for section in &self.sections {
            let _ = writeln!(
                out,
                "{}: {}",
                section.title,
                if section.all_pass() { "PASS" } else { "FAIL" }
            );
            for c in &section.checks {
                let _ = write!(
                    out,
                    "  [{}] {}",
                    if c.pass { "ok" } else { "FAIL" },
                    c.identity
                );
                if let Some(w) = &c.witness {
                    let _ = write!(out, " at i={}", w.i);
                    if let Some(k) = w.k {
                        let _ = write!(out, ", k={k}");
                    }
                    let _ = write!(out, ", (x, y) = ({}, {})", w.x, w.y);
                }
                if !c.detail.is_empty() {
                    let _ = write!(out, ": {}", c.detail);
                }
                out.push('\n');
            }
        }
        out
    }
}

/// `{"exact": "...", "approx": x}` for exact values, `{"approx": x}` for floats.
pub fn value_json(v: &RealScalar) -> Value {
    match v {
        RealScalar::Exact(z) => json!({ "exact": z.to_string(), "approx": z.to_f64() }),
        RealScalar::Float(x) => json!({ "approx": x }),
    }
}
