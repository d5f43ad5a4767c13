use super::{Builder, CnfFormula, GadgetKind, GadgetOutput};
use crate::error::{Error, Result};

fn pos(x: usize) -> String {
    format!("x{}", x + 1)
}

fn neg(x: usize) -> String {
    format!("~x{}", x + 1)
}

fn u(x: usize) -> String {
    format!("u_x{}", x + 1)
}

fn v(x: usize) -> String {
    format!("v_x{}", x + 1)
}

/// Per variable a paw-shaped gadget `x, ~x, u_x, v_x`; one clause vertex per clause,
/// joined to its literals; all clause vertices form a clique.
pub fn build_2p4_gadget(phi: &CnfFormula) -> Result<GadgetOutput> {
    if phi.clauses.is_empty() {
        return Err(Error::InvalidFormula("formula has no clauses".into()));
    }
    if let Some(i) = phi.clauses.iter().position(|c| c.is_empty() || c.len() > 3) {
        return Err(Error::InvalidFormula(format!(
            "clause {} must have between 1 and 3 literals",
            i + 1
        )));
    }
    if let Some(x) = (0..phi.num_vars).find(|&x| phi.occurrences(x).is_empty()) {
        return Err(Error::InvalidFormula(format!("variable {} occurs in no clause", x + 1)));
    }
    let mut b = Builder::new();
    for x in 0..phi.num_vars {
        for role in [pos(x), neg(x), u(x), v(x)] {
            b.add(role);
        }
        b.edge(&pos(x), &neg(x));
        b.edge(&pos(x), &u(x));
        b.edge(&neg(x), &u(x));
        b.edge(&u(x), &v(x));
    }
    let clause_roles: Vec<String> = (1..=phi.clauses.len()).map(|c| format!("clause[c{c}]")).collect();
    for (role, clause) in clause_roles.iter().zip(&phi.clauses) {
        b.add(role.clone());
        for l in clause {
            let lit = if l.positive { pos(l.var) } else { neg(l.var) };
            b.edge(role, &lit);
        }
    }
    b.clique(&clause_roles);
    Ok(b.finish(GadgetKind::TwoP4 {
        formula: phi.clone(),
    }))
}

pub(super) fn witness_roles(assignment: &[bool]) -> Vec<String> {
    assignment
        .iter()
        .enumerate()
        .flat_map(|(x, &value)| [if value { pos(x) } else { neg(x) }, u(x)])
        .collect()
}
