//! Text, JSON and CSV renderings of verification, construction and bound
//! results, shared by the command-line tool and its tests.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::bma::value_json;
use crate::designs::{
    averaging_check_with_tol, is_t_design_with_tol, tightness_with_tol, DesignVerdict,
    TightnessCertificate,
};
use crate::error::Result;
use crate::exactnum::{format_rational, Rational};
use crate::jacobi::{design_bound, tight_angle_set, DesignParams, TightAngleSet, DEFAULT_ROOT_TOL};
use crate::projective::{angle_set, gram_with_tol, AngleSet, PointSet};

/// Output flavour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct VerifyReport {
    pub field: String,
    pub n: u32,
    pub size: usize,
    pub t: u32,
    pub exact: bool,
    pub verdict: DesignVerdict,
    pub averaging: DesignVerdict,
    pub certificate: Option<TightnessCertificate>,
}

/// Runs `is_t_design`, `averaging_check` and, for designs, `tightness`.
/// `design_tol` scales the float design-sum threshold; `tol` is the angle
/// and annihilator tolerance.
pub fn verify_report(ps: &PointSet, t: u32, design_tol: f64, tol: f64) -> Result<VerifyReport> {
    let verdict = is_t_design_with_tol(ps, t, design_tol)?;
    let averaging = averaging_check_with_tol(ps, t, design_tol)?;
    let certificate = if verdict.is_design {
        Some(tightness_with_tol(ps, t, tol)?)
    } else {
        None
    };
    Ok(VerifyReport {
        field: ps.field().symbol().to_string(),
        n: ps.n(),
        size: ps.len(),
        t,
        exact: verdict.exact,
        verdict,
        averaging,
        certificate,
    })
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_design
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => pretty(&self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "design: {} points in {}P^{} ({})",
            self.size,
            self.field,
            self.n,
            backend(self.exact)
        );
        let _ = writeln!(
            out,
            "{:<8}{:<28}{:<28}status",
            "degree", "design sum", "averaging"
        );
        for (d, a) in self.verdict.residuals.iter().zip(&self.averaging.residuals) {
            let _ = writeln!(
                out,
                "{:<8}{:<28}{:<28}{}",
                d.degree,
                d.max_abs.to_string(),
                a.max_abs.to_string(),
                if d.vanishes && a.vanishes {
                    "ok"
                } else {
                    "FAIL"
                }
            );
        }
        match self.verdict.first_failure() {
            None => {
                let _ = writeln!(out, "verdict: {}-design", self.t);
            }
            Some(d) => {
                let w = self.verdict.residuals[d as usize - 1].witness;
                let _ = writeln!(
                    out,
                    "verdict: not a {}-design (degree {d} fails at y = {w})",
                    self.t
                );
            }
        }
        if self.averaging.is_design != self.verdict.is_design {
            let _ = writeln!(out, "warning: averaging check disagrees");
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(
                out,
                "tightness: {} (s = {}, e = {}, eps = {}, t_max = {}, |X| = {}, bound = {})",
                if c.is_tight() { "tight" } else { "not tight" },
                c.s,
                c.e,
                c.eps,
                c.t_max,
                c.size,
                format_rational(&c.bound)
            );
            let _ = writeln!(out, "angle set: {}", c.angles);
            let _ = writeln!(out, "annihilator: {}", c.annihilator);
            let _ = writeln!(
                out,
                "cardinality match: {}, angle roots match: {}",
                c.cardinality_match, c.angle_roots_match
            );
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "n": self.n,
            "size": self.size,
            "t": self.t,
            "backend": backend(self.exact),
            "is_design": self.verdict.is_design,
            "averaging_agrees": self.averaging.is_design == self.verdict.is_design,
            "residuals": verdict_json(&self.verdict),
            "averaging_residuals": verdict_json(&self.averaging),
            "tightness": self.certificate.as_ref().map(certificate_json),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,design_sum,averaging,vanishes\n");
        for (d, a) in self.verdict.residuals.iter().zip(&self.averaging.residuals) {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                d.degree,
                d.max_abs,
                a.max_abs,
                d.vanishes && a.vanishes
            );
        }
        out
    }
}

fn backend(exact: bool) -> &'static str {
    if exact {
        "exact"
    } else {
        "float"
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

fn verdict_json(v: &DesignVerdict) -> Value {
    Value::Array(
        v.residuals
            .iter()
            .map(|r| {
                json!({
                    "degree": r.degree,
                    "max_abs": value_json(&r.max_abs),
                    "witness": r.witness,
                    "vanishes": r.vanishes,
                })
            })
            .collect(),
    )
}

fn angles_json(a: &AngleSet) -> Value {
    Value::Array(a.values.iter().map(value_json).collect())
}

fn certificate_json(c: &TightnessCertificate) -> Value {
    json!({
        "tight": c.is_tight(),
        "s": c.s,
        "e": c.e,
        "eps": c.eps,
        "t_max": c.t_max,
        "size": c.size,
        "bound": format_rational(&c.bound),
        "cardinality_match": c.cardinality_match,
        "angle_roots_match": c.angle_roots_match,
        "angles": angles_json(&c.angles),
        "annihilator": c.annihilator.to_string(),
    })
}

/// What `construct` echoes next to the design file.
pub struct ConstructionSummary {
    pub field: String,
    pub n: u32,
    pub size: usize,
    pub angles: AngleSet,
    pub bound: Rational,
}

pub fn construction_summary(ps: &PointSet, t: u32, tol: f64) -> Result<ConstructionSummary> {
    let angles = angle_set(&gram_with_tol(ps, tol)?, tol)?;
    let bound = design_bound(&DesignParams::new(ps.field(), ps.n(), t)?);
    Ok(ConstructionSummary {
        field: ps.field().symbol().to_string(),
        n: ps.n(),
        size: ps.len(),
        angles,
        bound,
    })
}

impl ConstructionSummary {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => pretty(&json!({
                "field": self.field,
                "n": self.n,
                "size": self.size,
                "angles": angles_json(&self.angles),
                "bound": format_rational(&self.bound),
            })),
            Format::Csv => format!(
                "field,n,size,angles,bound\n{},{},{},{},{}\n",
                self.field,
                self.n,
                self.size,
                self.angles
                    .values
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                format_rational(&self.bound)
            ),
            Format::Text => format!(
                "|X| = {} in {}P^{}\nangle set: {}\nbound: {}\n",
                self.size,
                self.field,
                self.n,
                self.angles,
                format_rational(&self.bound)
            ),
        }
    }
}

/// `design_bound` and the predicted tight angle set for `(F, n, t)`.
pub struct BoundReport {
    pub params: DesignParams,
    pub bound: Rational,
    pub roots: TightAngleSet,
}

pub fn bound_report(params: &DesignParams) -> Result<BoundReport> {
    Ok(BoundReport {
        params: params.clone(),
        bound: design_bound(params),
        roots: tight_angle_set(params, DEFAULT_ROOT_TOL)?,
    })
}

impl BoundReport {
    fn root_strings(&self) -> Vec<String> {
        self.roots
            .approx
            .iter()
            .map(|&x| {
                if x == 0.0 {
                    "0".to_string()
                } else {
                    format!("{x:.7}")
                }
            })
            .collect()
    }

    fn exact_strings(&self) -> Option<Vec<String>> {
        self.roots
            .exact
            .as_ref()
            .map(|r| r.iter().map(ToString::to_string).collect())
    }

    pub fn render(&self, format: Format) -> String {
        let p = &self.params;
        match format {
            Format::Json => pretty(&json!({
                "field": p.field.symbol(),
                "n": p.n,
                "t": p.t,
                "bound": format_rational(&self.bound),
                "angle_roots": self.roots.approx,
                "angle_roots_exact": self.exact_strings(),
                "annihilator": self.roots.annihilator.to_string(),
            })),
            Format::Csv => {
                let mut out = String::from("root,approx,exact\n");
                let exact = self.exact_strings();
                for (k, x) in self.roots.approx.iter().enumerate() {
                    let e = exact.as_ref().map_or(String::new(), |e| e[k].clone());
                    let _ = writeln!(out, "{k},{x:?},{e}");
                }
                out
            }
            Format::Text => {
                let mut out = format!(
                    "bound |X| >= {} for a {}-design in {}P^{}\n",
                    format_rational(&self.bound),
                    p.t,
                    p.field.symbol(),
                    p.n
                );
                let _ = writeln!(out, "angle roots {{{}}}", self.root_strings().join(", "));
                if let Some(e) = self.exact_strings() {
                    let _ = writeln!(out, "exact roots {{{}}}", e.join(", "));
                }
                let _ = writeln!(out, "annihilator: {}", self.roots.annihilator);
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::construct_cp1_5design;
    use crate::exactnum::DEFAULT_TOL;
    use crate::jacobi::Field;

    #[test]
    fn verify_text_mentions_tightness() {
        let r = verify_report(&construct_cp1_5design(), 5, 1e-8, DEFAULT_TOL).unwrap();
        assert!(r.passed());
        let text = r.to_text();
        assert!(text.contains("tightness: tight"), "{text}");
        assert!(text.contains("(5-sqrt5)/10"), "{text}");
        let r6 = verify_report(&construct_cp1_5design(), 6, 1e-8, DEFAULT_TOL).unwrap();
        assert!(!r6.passed() && r6.certificate.is_none());
    }

    #[test]
    fn bound_text() {
        let p = DesignParams::new(Field::C, 1, 5).unwrap();
        let text = bound_report(&p).unwrap().render(Format::Text);
        assert!(text.contains("bound |X| >= 12"), "{text}");
        assert!(text.contains("{0, 0.2763932, 0.7236068}"), "{text}");
    }
}
