use super::{Builder, CnfFormula, GadgetKind, GadgetOutput};
use crate::cover::{Budget, CoverProblem};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

const WING_T: [&str; 4] = ["a", "b", "c", "d"];
const WING_F: [&str; 4] = ["g", "h", "i", "j"];

fn var_role(base: &str, x: usize) -> String {
    format!("{base}_x{}", x + 1)
}

/// Variable-side vertex `base^c_x`.
fn var_wing(base: &str, c: usize, x: usize) -> String {
    format!("{base}^c{}_x{}", c + 1, x + 1)
}

fn clause_role(base: &str, c: usize) -> String {
    format!("{base}_c{}", c + 1)
}

/// Clause-side vertex `base^x_c`.
fn clause_wing(base: &str, x: usize, c: usize) -> String {
    format!("{base}^x{}_c{}", x + 1, c + 1)
}

/// Variable gadget: `u, v, T, F` and two wings of three 5-vertex arms each.
fn add_variable(b: &mut Builder, x: usize, clauses: &[usize]) {
    let (u, v, t, f) = (var_role("u", x), var_role("v", x), var_role("T", x), var_role("F", x));
    for r in [&u, &v, &t, &f] {
        b.add(r.clone());
    }
    b.edge(&u, &v);
    b.edge(&u, &t);
    b.edge(&u, &f);
    b.edge(&t, &f);
    for &c in clauses {
        for base in WING_T.iter().chain(&WING_F).chain(&["t", "f"]) {
            b.add(var_wing(base, c, x));
        }
        let r = |base: &str| var_wing(base, c, x);
        b.edge(&t, &r("a"));
        b.edge(&r("a"), &r("b"));
        b.edge(&r("b"), &r("c"));
        b.edge(&r("b"), &r("d"));
        b.edge(&r("c"), &r("d"));
        b.edge(&r("d"), &r("t"));
        b.edge(&f, &r("g"));
        b.edge(&r("g"), &r("h"));
        b.edge(&r("h"), &r("i"));
        b.edge(&r("h"), &r("j"));
        b.edge(&r("i"), &r("j"));
        b.edge(&r("j"), &r("f"));
    }
    for base in ["a", "g"] {
        let triple: Vec<String> = clauses.iter().map(|&c| var_wing(base, c, x)).collect();
        b.clique(&triple);
    }
}

/// Clause gadget: a true part on `u_c` with three 5-vertex arms and a false part
/// on `v_c, w_c` with three 2-vertex arms.
fn add_clause(b: &mut Builder, c: usize, vars: &[usize]) {
    let (u, v, w) = (clause_role("u", c), clause_role("v", c), clause_role("w", c));
    for r in [&u, &v, &w] {
        b.add(r.clone());
    }
    b.edge(&v, &w);
    for &x in vars {
        for base in ["a", "b", "c", "d", "t", "g", "f"] {
            b.add(clause_wing(base, x, c));
        }
        let r = |base: &str| clause_wing(base, x, c);
        b.edge(&u, &r("a"));
        b.edge(&r("a"), &r("b"));
        b.edge(&r("a"), &r("c"));
        b.edge(&r("b"), &r("c"));
        b.edge(&r("c"), &r("d"));
        b.edge(&r("d"), &r("t"));
        b.edge(&v, &r("g"));
        b.edge(&r("g"), &r("f"));
    }
    for base in ["a", "g"] {
        let triple: Vec<String> = vars.iter().map(|&x| clause_wing(base, x, c)).collect();
        b.clique(&triple);
    }
}

/// Builds the claw-free graph for a positive cubic 1-in-3 formula.
pub fn build_clawfree_gadget(phi: &CnfFormula) -> Result<GadgetOutput> {
    phi.check_positive_cubic()?;
    let mut b = Builder::new();
    for x in 0..phi.num_vars {
        add_variable(&mut b, x, &phi.occurrences(x));
    }
    for (c, clause) in phi.clauses.iter().enumerate() {
        let vars: Vec<usize> = clause.iter().map(|l| l.var).collect();
        add_clause(&mut b, c, &vars);
        for &x in &vars {
            b.edge(&clause_wing("t", x, c), &var_wing("t", c, x));
            b.edge(&clause_wing("f", x, c), &var_wing("f", c, x));
        }
    }
    Ok(b.finish(GadgetKind::ClawFree {
        formula: phi.clone(),
    }))
}

pub(super) fn witness_roles(phi: &CnfFormula, assignment: &[bool]) -> Vec<String> {
    let mut roles = Vec::new();
    for (x, &value) in assignment.iter().enumerate() {
        let side = if value { "T" } else { "F" };
        roles.push(var_role("u", x));
        roles.push(var_role(side, x));
        let arms: [&str; 4] = if value { ["d", "t", "h", "j"] } else { ["j", "f", "b", "d"] };
        for c in phi.occurrences(x) {
            roles.extend(arms.iter().map(|base| var_wing(base, c, x)));
        }
    }
    for (c, clause) in phi.clauses.iter().enumerate() {
        for l in clause {
            let x = l.var;
            if assignment[x] {
                roles.push(clause_wing("c", x, c));
                roles.push(clause_wing("a", x, c));
                roles.push(clause_wing("g", x, c));
                roles.push(clause_role("v", c));
            } else {
                roles.push(clause_wing("d", x, c));
                roles.push(clause_wing("c", x, c));
            }
        }
    }
    roles
}

/// A single variable or clause gadget with its attachment vertices.
#[derive(Clone, Debug)]
pub struct IsolatedGadget {
    pub graph: Graph,
    /// The `t` and `f` vertices that receive an edge from the rest of the construction.
    pub boundary: VertexSet,
}

impl IsolatedGadget {
    /// Fewest gadget vertices that dominate every non-boundary vertex by a neighbor.
    pub fn internal_lower_bound(&self, budget: Budget) -> Result<Option<usize>> {
        let targets = VertexSet::full(self.graph.n()).difference(&self.boundary);
        let all = VertexSet::full(self.graph.n());
        let problem = CoverProblem::restricted_total(&self.graph, &targets, &all);
        Ok(problem.minimum(budget)?.map(|d| d.len()))
    }
}

fn isolate(b: Builder) -> IsolatedGadget {
    let graph = b.graph();
    let boundary = graph.vertex_set(
        b.labels
            .iter()
            .enumerate()
            .filter(|(_, r)| r.starts_with("t^") || r.starts_with("f^"))
            .map(|(v, _)| v),
    );
    IsolatedGadget { graph, boundary }
}

pub fn isolated_variable_gadget() -> IsolatedGadget {
    let mut b = Builder::new();
    add_variable(&mut b, 0, &[0, 1, 2]);
    isolate(b)
}

pub fn isolated_clause_gadget() -> IsolatedGadget {
    let mut b = Builder::new();
    add_clause(&mut b, 0, &[0, 1, 2]);
    isolate(b)
}
