//! CNF formulas and the DIMACS `cnf` format.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A variable (0-based) with its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn is_true(&self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var >= num_vars) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} uses variable {} but only {num_vars} are declared",
                    i + 1,
                    l.var + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Every clause has at least one true literal.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.first_unsatisfied(assignment).is_none()
    }

    /// Index of the first clause without a true literal.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.is_true(assignment)))
    }

    /// Index of the first clause without exactly one true literal.
    pub fn first_not_one_in_three(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| c.iter().filter(|l| l.is_true(assignment)).count() != 1)
    }

    /// A satisfying assignment found by trying all of them; `None` if unsatisfiable.
    pub fn brute_force_satisfiable(&self) -> Option<Vec<bool>> {
        self.brute_force(|a| self.is_satisfied_by(a))
    }

    /// An assignment with exactly one true literal per clause.
    pub fn brute_force_one_in_three(&self) -> Option<Vec<bool>> {
        self.brute_force(|a| self.first_not_one_in_three(a).is_none())
    }

    fn brute_force(&self, accept: impl Fn(&[bool]) -> bool) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "brute force over {} variables", self.num_vars);
        (0u64..1 << self.num_vars)
            .map(|mask| (0..self.num_vars).map(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .find(|a| accept(a))
    }

    /// Clause indices containing variable `var`, in order, counting repeats.
    pub fn occurrences(&self, var: usize) -> Vec<usize> {
        self.clauses
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().filter(move |l| l.var == var).map(move |_| i))
            .collect()
    }

    /// All literals positive, three distinct variables per clause, three occurrences per variable.
    pub fn check_positive_cubic(&self) -> Result<()> {
        for (i, c) in self.clauses.iter().enumerate() {
            if c.iter().any(|l| !l.positive) {
                return Err(Error::InvalidFormula(format!("clause {} has a negated literal", i + 1)));
            }
            let mut vars: Vec<usize> = c.iter().map(|l| l.var).collect();
            vars.sort_unstable();
            vars.dedup();
            if c.len() != 3 || vars.len() != 3 {
                return Err(Error::InvalidFormula(format!(
                    "clause {} must have exactly three distinct variables",
                    i + 1
                )));
            }
        }
        for v in 0..self.num_vars {
            let count = self.occurrences(v).len();
            if count != 3 {
                return Err(Error::InvalidFormula(format!(
                    "variable {} occurs {count} times, expected 3",
                    v + 1
                )));
            }
        }
        Ok(())
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(Error::parse(line_no, "expected 'p cnf VARS CLAUSES'"));
                }
                let num = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("bad count '{s}'")))
                };
                header = Some((num(parts[2])?, num(parts[3])?));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(Error::parse(line_no, "clause before 'p cnf' header"));
            };
            for tok in line.split_whitespace() {
                let x: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad literal '{tok}'")))?;
                if x == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = x.unsigned_abs() as usize;
                if var > vars {
                    return Err(Error::parse(line_no, format!("variable {var} exceeds declared {vars}")));
                }
                current.push(Literal {
                    var: var - 1,
                    positive: x > 0,
                });
            }
        }
        let Some((vars, count)) = header else {
            return Err(Error::parse(0, "missing 'p cnf' header"));
        };
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(Error::parse(
                0,
                format!("header declares {count} clauses, found {}", clauses.len()),
            ));
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(out, "{} ", l.to_dimacs());
            }
            out.push_str("0\n");
        }
        out
    }
}
