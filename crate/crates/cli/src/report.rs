use std::fmt::{self, Write as _};
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize, Debug, Clone)]
pub struct Witness {
    /// Arguments of the smallest failing evaluation, as χ-images.
    pub arguments: Vec<String>,
    pub leading_monomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Nonzero monomials summed over every failing evaluation.
    pub residual_terms: usize,
    pub evaluations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Serialize, Debug)]
pub struct Versions {
    pub dorfman: &'static str,
    pub cli: &'static str,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub job: Value,
    pub checks: Vec<Check>,
    pub versions: Versions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
}

impl Report {
    pub fn new(job: Value, checks: Vec<Check>, output: Option<Value>) -> Self {
        Report {
            job,
            checks,
            versions: Versions {
                dorfman: dorfman::VERSION,
                cli: env!("CARGO_PKG_VERSION"),
            },
            output,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn write_checks(&self, out: &mut String) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                out,
                "{} {:<13} evaluations {:>5}  residual terms {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.evaluations,
                c.residual_terms
            )?;
            if let Some(w) = &c.witness {
                writeln!(out, "     witness: ({})", w.arguments.join(", "))?;
                writeln!(out, "     leading monomial: {}", w.leading_monomial)?;
                if let Some(d) = &w.detail {
                    writeln!(out, "     {d}")?;
                }
            }
        }
        Ok(())
    }

    pub fn print_json(&self) {
        let text = serde_json::to_string_pretty(self).expect("report serialises");
        print(&format!("{text}\n"));
    }
}

/// Writes to stdout; a closed pipe downstream is not an error worth reporting.
pub fn print(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
