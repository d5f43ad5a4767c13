//! Reductions from Even Dominating Set, 3-SAT and positive cubic 1-in-3 SAT to
//! the contraction problem, the 4-subdivision transform, and their verifiers.

mod claw;
pub mod cnf;
mod even_ds;
mod subdivision;
mod two_p4;
mod verify;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use claw::{build_clawfree_gadget, isolated_clause_gadget, isolated_variable_gadget, IsolatedGadget};
pub use cnf::{CnfFormula, Literal};
pub use even_ds::{build_even_ds_gadget, Promise, PROMISE_CHECK_LIMIT};
pub use subdivision::{four_subdivide_all, four_subdivide_gadget};
pub use two_p4::build_2p4_gadget;
pub use verify::{verify_gadget_equivalence, Check, Outcome, VerificationReport};

/// What a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    EvenDs {
        ell: usize,
        source: Graph,
        /// Domination number of the source, when it was computed.
        gamma: Option<usize>,
    },
    TwoP4 { formula: CnfFormula },
    ClawFree { formula: CnfFormula },
    Subdivision { source: Graph },
}

#[derive(Clone, Debug)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub kind: GadgetKind,
    /// Role name of each vertex.
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GadgetOutput {
    pub fn vertex(&self, role: &str) -> Option<usize> {
        self.index.get(role).copied()
    }

    pub fn role(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// One `role vertex-id` pair per line, in vertex order.
    pub fn roles_text(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, r)| format!("{r} {v}\n"))
            .collect()
    }

    /// The number of vertices the construction should produce.
    pub fn expected_order(&self) -> usize {
        match &self.kind {
            GadgetKind::EvenDs { ell, source, .. } => 2 * ell + (2 * ell + 1) * source.n(),
            GadgetKind::TwoP4 { formula } => 4 * formula.num_vars + formula.clauses.len(),
            GadgetKind::ClawFree { formula } => 34 * formula.num_vars + 24 * formula.clauses.len(),
            GadgetKind::Subdivision { source } => source.n() + 4 * source.m(),
        }
    }

    fn vertices(&self, roles: &[String]) -> VertexSet {
        self.graph
            .vertex_set(roles.iter().map(|r| self.vertex(r).expect("role exists")))
    }
}

/// Accumulates named vertices and edges.
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, role: String) -> usize {
        let v = self.labels.len();
        let previous = self.index.insert(role.clone(), v);
        assert!(previous.is_none(), "duplicate role {role}");
        self.labels.push(role);
        v
    }

    fn id(&self, role: &str) -> usize {
        self.index[role]
    }

    fn edge(&mut self, a: &str, b: &str) {
        let (a, b) = (self.id(a), self.id(b));
        self.edges.push((a, b));
    }

    fn clique(&mut self, roles: &[String]) {
        for (i, a) in roles.iter().enumerate() {
            for b in &roles[i + 1..] {
                self.edge(a, b);
            }
        }
    }

    fn graph(&self) -> Graph {
        let mut graph = Graph::new(self.labels.len());
        for &(a, b) in &self.edges {
            if !graph.has_edge(a, b) {
                graph.add_edge(a, b);
            }
        }
        graph
    }

    fn finish(self, kind: GadgetKind) -> GadgetOutput {
        GadgetOutput {
            graph: self.graph(),
            kind,
            labels: self.labels,
            index: self.index,
        }
    }
}

/// The explicit total dominating set built from a satisfying assignment.
///
/// For the 3-SAT gadget: `u_x` plus the literal vertex made true. For the
/// 1-in-3 gadget: fourteen vertices per variable and eight per clause.
pub fn tds_witness_from_assignment(gadget: &GadgetOutput, assignment: &[bool]) -> Result<VertexSet> {
    let check_len = |formula: &CnfFormula| {
        if assignment.len() != formula.num_vars {
            return Err(Error::InvalidParameter(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                formula.num_vars
            )));
        }
        Ok(())
    };
    match &gadget.kind {
        GadgetKind::TwoP4 { formula } => {
            check_len(formula)?;
            if let Some(clause) = formula.first_unsatisfied(assignment) {
                return Err(Error::UnsatisfiedClause { clause: clause + 1 });
            }
            Ok(gadget.vertices(&two_p4::witness_roles(assignment)))
        }
        GadgetKind::ClawFree { formula } => {
            check_len(formula)?;
            if let Some(clause) = formula.first_not_one_in_three(assignment) {
                return Err(Error::UnsatisfiedClause { clause: clause + 1 });
            }
            Ok(gadget.vertices(&claw::witness_roles(formula, assignment)))
        }
        _ => Err(Error::InvalidParameter(
            "witnesses exist only for formula gadgets".into(),
        )),
    }
}
