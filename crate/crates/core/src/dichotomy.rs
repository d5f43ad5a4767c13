//! Complexity classification of the contraction problem on `H`-free graphs.

use std::fmt;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Poly,
    NPhard,
    CoNPhard,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Poly => "polynomial",
            Verdict::NPhard => "NP-hard",
            Verdict::CoNPhard => "coNP-hard",
        })
    }
}

/// The case of the decision tree that produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Cycle,
    Claw,
    LongPath,
    P5PlusComponent,
    TwoP4,
    WithinFamily,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Cycle => "cycle branch",
            Branch::Claw => "claw branch",
            Branch::LongPath => "P6 branch",
            Branch::P5PlusComponent => "P5+component branch",
            Branch::TwoP4 => "2P4 branch",
            Branch::WithinFamily => "within-family branch",
        })
    }
}

/// Component counts of a linear forest inside a polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    /// Order of the one long component (4 or 5), if any.
    pub long: Option<usize>,
    /// Components that are `P3`.
    pub q: usize,
    /// Components that are `K2`.
    pub p: usize,
    /// Isolated vertices.
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HClassification {
    pub verdict: Verdict,
    pub branch: Branch,
    pub family: Option<Family>,
}

impl HClassification {
    /// Machine-readable line, e.g. `coNP-hard (claw branch)`.
    pub fn summary(&self) -> String {
        format!("{} ({})", self.verdict, self.branch)
    }

    pub fn explanation(&self) -> String {
        match (self.branch, self.family) {
            (Branch::Cycle, _) => "H contains a cycle; hard already on graphs without short cycles".into(),
            (Branch::Claw, _) => "H is a forest with a vertex of degree at least 3, so it contains a claw".into(),
            (Branch::LongPath, _) => "H contains an induced P6".into(),
            (Branch::P5PlusComponent, _) => "H contains an induced P5 + P2".into(),
            (Branch::TwoP4, _) => "H contains an induced 2P4".into(),
            (Branch::WithinFamily, Some(f)) if f.long == Some(5) => {
                format!("H is an induced subgraph of P5 + {}K1", f.t)
            }
            (Branch::WithinFamily, Some(f)) => format!(
                "H is an induced subgraph of P4 + {}P3 + {}K2 + {}K1",
                f.q, f.p, f.t
            ),
            (Branch::WithinFamily, None) => "H lies in a polynomial family".into(),
        }
    }
}

/// Sorted component orders if `h` is a linear forest.
pub fn linear_forest_components(h: &Graph) -> Option<Vec<usize>> {
    let comps = h.components();
    if h.m() + comps.len() != h.n() || h.max_degree() > 2 {
        return None;
    }
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    Some(sizes)
}

pub fn classify_h(h: &Graph) -> HClassification {
    let hard = |verdict, branch| HClassification {
        verdict,
        branch,
        family: None,
    };
    let comps = h.components().len();
    if h.m() + comps > h.n() {
        return hard(Verdict::NPhard, Branch::Cycle);
    }
    if h.max_degree() >= 3 {
        return hard(Verdict::CoNPhard, Branch::Claw);
    }
    let sizes = linear_forest_components(h).expect("acyclic with maximum degree 2");
    let largest = sizes.last().copied().unwrap_or(0);
    let count = |s: usize| sizes.iter().filter(|&&x| x == s).count();
    if largest >= 6 {
        return hard(Verdict::NPhard, Branch::LongPath);
    }
    let long = match largest {
        5 => {
            if sizes.len() > count(1) + 1 {
                return hard(Verdict::NPhard, Branch::P5PlusComponent);
            }
            Some(5)
        }
        4 if count(4) >= 2 => return hard(Verdict::CoNPhard, Branch::TwoP4),
        4 => Some(4),
        _ => None,
    };
    HClassification {
        verdict: Verdict::Poly,
        branch: Branch::WithinFamily,
        family: Some(Family {
            long,
            q: count(3),
            p: count(2),
            t: count(1),
        }),
    }
}

/// The polynomial procedure that covers every `H`-free graph for a polynomial `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    /// `H` is `P5 + tK1`.
    P5PlusIsolated { isolated: usize },
    /// `H` is an induced subgraph of `P4 + kP3`.
    P4PlusSmall { k: usize },
}

pub fn poly_family(h: &Graph) -> Option<PolyFamily> {
    let c = classify_h(h);
    let family = c.family?;
    Some(match family.long {
        Some(5) => PolyFamily::P5PlusIsolated { isolated: family.t },
        _ => PolyFamily::P4PlusSmall {
            k: (family.q + family.p + family.t + usize::from(family.long.is_some())).saturating_sub(1),
        },
    })
}
