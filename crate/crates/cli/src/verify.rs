//! The verification sweeps behind `dorfman verify`.

use clap::ValueEnum;
use dorfman::brackets::{HamiltonianDerivation, SectionExpr};
use dorfman::geometry::{proposition_oracle, Multivector, Slot};
use dorfman::superalgebra::{Chart, SuperPolynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::CliError;
use crate::report::{Check, Witness};

/// Argument tuples per arity beyond which tuples are sampled instead of enumerated.
pub const MAX_TUPLES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckName {
    Homological,
    Loday,
    Theorem,
    Defect,
    Proposition,
    Polarisation,
}

impl CheckName {
    pub fn label(self) -> &'static str {
        match self {
            CheckName::Homological => "homological",
            CheckName::Loday => "loday",
            CheckName::Theorem => "theorem",
            CheckName::Defect => "defect",
            CheckName::Proposition => "proposition",
            CheckName::Polarisation => "polarisation",
        }
    }
}

/// Every `n`-tuple of indices below `count` when there are few enough,
/// otherwise a seeded sample of them. Tuples come out in a fixed order.
pub fn tuples(count: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let total = count.checked_pow(n as u32).unwrap_or(usize::MAX);
    if total <= MAX_TUPLES {
        (0..total)
            .map(|mut t| {
                let mut tuple = vec![0; n];
                for slot in tuple.iter_mut().rev() {
                    *slot = t % count;
                    t /= count;
                }
                tuple
            })
            .collect()
    } else {
        (0..MAX_TUPLES)
            .map(|_| (0..n).map(|_| rng.gen_range(0..count)).collect())
            .collect()
    }
}

struct Tally {
    check: Check,
}

impl Tally {
    fn new(name: CheckName) -> Self {
        Tally {
            check: Check {
                name: name.label().to_string(),
                pass: true,
                residual_terms: 0,
                evaluations: 0,
                witness: None,
            },
        }
    }

    fn record(&mut self, args: &[SectionExpr], residual: &SuperPolynomial, detail: Option<String>) {
        self.check.evaluations += 1;
        if residual.is_zero() {
            return;
        }
        self.check.pass = false;
        self.check.residual_terms += residual.len();
        let smaller = self
            .check
            .witness
            .as_ref()
            .is_none_or(|w| args.len() < w.arguments.len());
        if smaller {
            self.check.witness = Some(Witness {
                arguments: args.iter().map(|u| u.value().to_string()).collect(),
                leading_monomial: residual
                    .leading_monomial()
                    .map(|m| format!("{} {m}", residual.coefficient(m)))
                    .unwrap_or_default(),
                detail,
            });
        }
    }

    fn finish(self) -> Check {
        self.check
    }
}

pub struct Sweep<'a> {
    pub derivation: &'a HamiltonianDerivation,
    pub multivector: Option<&'a Multivector>,
    pub sections: &'a [SectionExpr],
    pub max_arity: usize,
}

fn pick(sections: &[SectionExpr], tuple: &[usize]) -> Vec<SectionExpr> {
    tuple.iter().map(|&t| sections[t].clone()).collect()
}

impl Sweep<'_> {
    fn chart(&self) -> &Chart {
        self.derivation.chart()
    }

    pub fn run(&self, name: CheckName, rng: &mut ChaCha8Rng) -> Result<Check, CliError> {
        let d = self.derivation;
        let mut tally = Tally::new(name);
        let bracket = |e: dorfman::brackets::BracketError| CliError::Invariant(e.to_string());
        match name {
            CheckName::Homological => {
                tally.record(&[], d.half_square(), Some("½[θ, θ] ≠ 0".into()))
            }
            CheckName::Loday | CheckName::Theorem => {
                for n in 1..=self.max_arity {
                    for tuple in tuples(self.sections.len(), n, rng) {
                        let args = pick(self.sections, &tuple);
                        let report = d.loday_identity(&args).map_err(bracket)?;
                        if name == CheckName::Loday {
                            tally.record(&args, &report.residual, Some(format!("J_{n} ≠ 0")));
                        } else {
                            let sum = &report.residual + &report.q_squared;
                            tally.record(&args, &sum, Some(format!("χ(J_{n}) + Q² bracket ≠ 0")));
                        }
                    }
                }
            }
            CheckName::Defect => {
                for k in 2..=self.max_arity.max(2) {
                    for tuple in tuples(self.sections.len(), k, rng) {
                        let args = pick(self.sections, &tuple);
                        for i in 1..k {
                            let (lhs, rhs) = d.symmetry_defect(&args, i).map_err(bracket)?;
                            let diff = lhs.value() - rhs.value();
                            tally.record(&args, &diff, Some(format!("k = {k}, swap at {i}")));
                        }
                    }
                }
            }
            CheckName::Proposition => {
                let p = self.multivector.ok_or_else(|| {
                    CliError::Invariant(
                        "the proposition check needs θ = Δ + K_P from a preset".into(),
                    )
                })?;
                for n in 1..=self.max_arity {
                    for tuple in tuples(self.sections.len(), n, rng) {
                        let args = pick(self.sections, &tuple);
                        for pattern in 0..1u32 << n {
                            let slots: Vec<Slot> = args
                                .iter()
                                .enumerate()
                                .map(|(t, u)| {
                                    if pattern >> t & 1 == 1 {
                                        Slot::Field(u.field_part())
                                    } else {
                                        Slot::Form(u.form_part())
                                    }
                                })
                                .collect();
                            if slots.iter().any(|s| s.section().is_zero()) {
                                continue;
                            }
                            let parts: Vec<SectionExpr> =
                                slots.iter().map(|s| s.section().clone()).collect();
                            let engine = d.dorfman(&parts).map_err(bracket)?;
                            let oracle = proposition_oracle(p, self.chart(), &slots)
                                .map_err(|e| CliError::Invariant(e.to_string()))?;
                            let diff = engine.value() - oracle.chi();
                            tally.record(
                                &parts,
                                &diff,
                                Some(format!("pattern {pattern:0n$b} (1 = field)")),
                            );
                        }
                    }
                }
            }
            CheckName::Polarisation => {
                for u in self.sections.iter().filter(|u| !u.parity().is_odd()) {
                    for n in 1..=self.max_arity {
                        let diagonal = vec![u.clone(); n];
                        let full = d.loday_residual(&diagonal).map_err(bracket)?;
                        let polarised = d.polarised_loday(u, n).map_err(bracket)?;
                        tally.record(&diagonal, &(&full - &polarised), Some(format!("n = {n}")));
                    }
                }
            }
        }
        Ok(tally.finish())
    }
}
