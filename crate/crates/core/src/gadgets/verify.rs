use std::fmt;

use super::{tds_witness_from_assignment, GadgetKind, GadgetOutput};
use crate::cover::Budget;
use crate::error::{Error, Result};
use crate::generators::{claw, linear_forest, path};
use crate::graph::Graph;
use crate::induced::contains_induced;
use crate::oracle::{contains_p3, gamma, gamma_t_with_budget, has_min_tds_with_p3, has_min_tds_with_p3_budgeted, is_total_dominating, tds_within};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Confirmed(String),
    Refuted(String),
    BudgetExceeded,
    /// Nothing to compare against, e.g. the source instance is too large to solve.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn outcome(&self, name: &str) -> Option<&Outcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }

    pub fn any_refuted(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.outcome, Outcome::Refuted(_)))
    }

    fn push(&mut self, name: &'static str, outcome: Outcome) {
        self.checks.push(Check { name, outcome });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Confirmed(s) => writeln!(f, "{}: confirmed ({s})", c.name)?,
                Outcome::Refuted(s) => writeln!(f, "{}: REFUTED ({s})", c.name)?,
                Outcome::BudgetExceeded => writeln!(f, "{}: budget exceeded", c.name)?,
                Outcome::Skipped(s) => writeln!(f, "{}: skipped ({s})", c.name)?,
            }
        }
        Ok(())
    }
}

fn judge(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Confirmed(detail)
    } else {
        Outcome::Refuted(detail)
    }
}

fn bounded<T>(r: Result<T>, f: impl FnOnce(T) -> Outcome) -> Outcome {
    match r {
        Ok(v) => f(v),
        Err(Error::BudgetExceeded(_)) => Outcome::BudgetExceeded,
        Err(e) => Outcome::Refuted(e.to_string()),
    }
}

fn verdict(yes: bool) -> &'static str {
    if yes {
        "YES"
    } else {
        "NO"
    }
}

/// What the construction promises about the gadget.
struct Expectation {
    /// Exact total domination number, or a strict lower bound when `exact` is false.
    gamma_t: Option<(usize, bool)>,
    yes: Option<bool>,
    forbidden: Vec<(&'static str, Graph)>,
}

fn expectation(gadget: &GadgetOutput) -> Result<Expectation> {
    Ok(match &gadget.kind {
        GadgetKind::EvenDs { ell, gamma: g, source } => {
            let g = g.or_else(|| (source.n() <= super::PROMISE_CHECK_LIMIT).then(|| gamma(source)));
            Expectation {
                gamma_t: g.map(|g| (g.min(2 * ell), true)),
                yes: g.map(|g| g <= 2 * ell),
                forbidden: vec![("P6", path(6)), ("P5+P2", linear_forest(&[5, 2]))],
            }
        }
        GadgetKind::TwoP4 { formula } => {
            let sat = (formula.num_vars <= 20).then(|| formula.brute_force_satisfiable().is_some());
            Expectation {
                gamma_t: sat.map(|s| (2 * formula.num_vars, s)),
                yes: sat.map(|s| !s),
                forbidden: vec![("2P4", linear_forest(&[4, 4]))],
            }
        }
        GadgetKind::ClawFree { formula } => {
            let sat = (formula.num_vars <= 20).then(|| formula.brute_force_one_in_three().is_some());
            Expectation {
                gamma_t: Some((14 * formula.num_vars + 8 * formula.clauses.len(), true)),
                yes: sat.map(|s| !s),
                forbidden: vec![("claw", claw())],
            }
        }
        GadgetKind::Subdivision { source } => Expectation {
            gamma_t: Some((crate::oracle::gamma_t(source)? + 2 * source.m(), true)),
            yes: Some(has_min_tds_with_p3(source)?),
            forbidden: Vec::new(),
        },
    })
}

/// Checks a gadget against what its construction promises, spending at most
/// `budget` search nodes on each exact computation.
pub fn verify_gadget_equivalence(gadget: &GadgetOutput, budget: Budget) -> VerificationReport {
    let mut report = VerificationReport::default();
    let g = &gadget.graph;
    let expected = gadget.expected_order();
    report.push("order", judge(g.n() == expected, format!("{} vertices, expected {expected}", g.n())));
    let connected = g.is_connected();
    report.push("connected", judge(connected, format!("connected: {connected}")));

    let exp = match expectation(gadget) {
        Ok(e) => e,
        Err(e) => {
            report.push("expectation", Outcome::Refuted(e.to_string()));
            return report;
        }
    };
    for (name, h) in &exp.forbidden {
        let free = !contains_induced(g, h);
        report.push("class", judge(free, format!("{name}-free: {free}")));
    }

    let witness = match &gadget.kind {
        GadgetKind::TwoP4 { formula } if formula.num_vars <= 20 => formula.brute_force_satisfiable(),
        GadgetKind::ClawFree { formula } if formula.num_vars <= 20 => formula.brute_force_one_in_three(),
        _ => None,
    };
    if let Some(assignment) = witness {
        let outcome = match tds_witness_from_assignment(gadget, &assignment) {
            Ok(d) => {
                let valid = is_total_dominating(g, &d);
                let p3 = contains_p3(g, &d);
                let size_ok = exp.gamma_t.is_none_or(|(t, _)| d.len() == t);
                judge(
                    valid && size_ok && !p3,
                    format!("size {}, total dominating: {valid}, contains P3: {p3}", d.len()),
                )
            }
            Err(e) => Outcome::Refuted(e.to_string()),
        };
        report.push("witness", outcome);
    }

    let gamma_t = match exp.gamma_t {
        None => Outcome::Skipped("source instance not solved".into()),
        Some((t, true)) => bounded(gamma_t_with_budget(g, budget), |v| {
            judge(v == t, format!("gamma_t = {v}, expected {t}"))
        }),
        Some((t, false)) => bounded(tds_within(g, t, budget), |d| {
            judge(d.is_none(), format!("expected gamma_t > {t}"))
        }),
    };
    report.push("gamma_t", gamma_t);

    let decision = match exp.yes {
        None => Outcome::Skipped("source instance not solved".into()),
        Some(yes) => bounded(has_min_tds_with_p3_budgeted(g, budget), |v| {
            judge(v == yes, format!("{}, expected {}", verdict(v), verdict(yes)))
        }),
    };
    report.push("decision", decision);
    report
}
