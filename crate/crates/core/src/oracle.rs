//! Ground-truth solvers: total domination, domination, enumeration of minimum total
//! dominating sets, and the contraction problem decided straight from its definition.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::cover::{Budget, CoverProblem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Outcome of the contraction-count search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtResult {
    /// The least number of contractions that lowers the total domination number.
    Contractions(usize),
    Irreducible,
}

/// All minimum total dominating sets of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdsEnumeration {
    pub size: usize,
    /// Lexicographically sorted.
    pub sets: Vec<VertexSet>,
}

pub fn is_total_dominating(g: &Graph, set: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).intersects(set))
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    (0..g.n()).all(|v| set.contains(v) || g.neighbors(v).intersects(set))
}

/// True iff `g[set]` contains a `P3` as a (not necessarily induced) subgraph.
pub fn contains_p3(g: &Graph, set: &VertexSet) -> bool {
    set.iter().any(|v| g.neighbors(v).intersection_len(set) >= 2)
}

/// A minimum total dominating set.
pub fn min_tds(g: &Graph, budget: Budget) -> Result<VertexSet> {
    CoverProblem::total_domination(g)
        .minimum(budget)?
        .ok_or(Error::NoTds)
}

/// The total domination number; `NoTds` iff `g` has an isolated vertex.
pub fn gamma_t(g: &Graph) -> Result<usize> {
    gamma_t_with_budget(g, Budget::UNLIMITED)
}

pub fn gamma_t_with_budget(g: &Graph, budget: Budget) -> Result<usize> {
    min_tds(g, budget).map(|d| d.len())
}

/// A total dominating set of size at most `k`, if one exists.
pub fn tds_within(g: &Graph, k: usize, budget: Budget) -> Result<Option<VertexSet>> {
    CoverProblem::total_domination(g).find_within(k, budget)
}

/// The domination number. The null graph has domination number 0.
pub fn gamma(g: &Graph) -> usize {
    CoverProblem::domination(g)
        .minimum(Budget::UNLIMITED)
        .expect("unlimited budget")
        .map_or(0, |d| d.len())
}

/// Visits every minimum total dominating set until `visit` breaks.
pub fn for_each_min_tds<F>(g: &Graph, budget: Budget, visit: F) -> Result<(usize, ControlFlow<()>)>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let problem = CoverProblem::total_domination(g);
    let size = problem.minimum(budget)?.ok_or(Error::NoTds)?.len();
    let flow = problem.for_each_minimum(size, budget, visit)?;
    Ok((size, flow))
}

pub fn enumerate_min_tds(g: &Graph) -> Result<TdsEnumeration> {
    let mut sets = Vec::new();
    let (size, _) = for_each_min_tds(g, Budget::UNLIMITED, |s| {
        sets.push(s.clone());
        ControlFlow::Continue(())
    })?;
    sets.sort();
    Ok(TdsEnumeration { size, sets })
}

/// Whether some minimum total dominating set `D` has `g[D]` containing a `P3`.
pub fn has_min_tds_with_p3(g: &Graph) -> Result<bool> {
    has_min_tds_with_p3_budgeted(g, Budget::UNLIMITED)
}

/// Forces each path `u v w` into the set in turn and asks whether the rest of a
/// minimum total dominating set still fits. `budget` applies to each search for
/// the minimum and to the forced searches together.
pub fn has_min_tds_with_p3_budgeted(g: &Graph, budget: Budget) -> Result<bool> {
    let problem = CoverProblem::total_domination(g);
    let best = problem.minimum(budget)?.ok_or(Error::NoTds)?;
    if contains_p3(g, &best) {
        return Ok(true);
    }
    let size = best.len();
    if size < 3 {
        return Ok(false);
    }
    let mut paths = Vec::new();
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &u) in nb.iter().enumerate() {
            paths.extend(nb[i + 1..].iter().map(|&w| g.vertex_set([u, v, w])));
        }
    }
    Ok(problem.first_extendable(paths, size, budget)?.is_some())
}

fn require_connected_pair(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition("graph needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Some edge `e` with `gamma_t(g / e) <= gamma_t(g) - 1`, found by trying every edge.
pub fn reducing_edge(g: &Graph) -> Result<Option<Edge>> {
    require_connected_pair(g)?;
    let target = gamma_t(g)? - 1;
    for e in g.edges() {
        let (h, _) = g.contract_edge(e)?;
        if tds_within(&h, target, Budget::UNLIMITED)?.is_some() {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Decides the one-contraction problem by contracting every edge in turn.
pub fn decide_by_definition(g: &Graph) -> Result<bool> {
    reducing_edge(g).map(|e| e.is_some())
}

/// Breadth-first search over contraction sequences of length up to `max_depth`.
///
/// Graphs reached at the same depth are deduplicated by exact labelled adjacency.
pub fn ct_gamma_t(g: &Graph, max_depth: usize) -> Result<CtResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let base = gamma_t(g)?;
    if base <= 2 {
        return Ok(CtResult::Irreducible);
    }
    let target = base - 1;
    let mut frontier = vec![g.clone()];
    let mut seen: HashSet<Graph> = HashSet::new();
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for current in &frontier {
            for e in current.edges() {
                let (h, _) = current.contract_edge(e)?;
                if !seen.insert(h.clone()) {
                    continue;
                }
                if tds_within(&h, target, Budget::UNLIMITED)?.is_some() {
                    return Ok(CtResult::Contractions(depth));
                }
                next.push(h);
            }
        }
        frontier = next;
    }
    Ok(CtResult::Irreducible)
}

/// An edge `uv` with `N[u] ∪ N[v] = V`, if any.
pub fn has_dominating_edge(g: &Graph) -> Option<Edge> {
    let all = VertexSet::full(g.n());
    g.edges()
        .into_iter()
        .find(|e| g.closed_neighbors(e.u).union(&g.closed_neighbors(e.v)) == all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn sets(e: &TdsEnumeration) -> Vec<Vec<usize>> {
        e.sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn gamma_t_examples() {
        assert_eq!(gamma_t(&path(4)), Ok(2));
        assert_eq!(gamma_t(&cycle(8).unwrap()), Ok(4));
        assert_eq!(gamma_t(&cycle(15).unwrap()), Ok(8));
        assert_eq!(gamma_t(&Graph::new(1)), Err(Error::NoTds));
        assert_eq!(gamma_t(&union(&path(3), &Graph::new(1))), Err(Error::NoTds));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&path(10)), 4);
        assert_eq!(gamma(&complete(5)), 1);
        assert_eq!(gamma(&cycle(4).unwrap()), 2);
    }

    #[test]
    fn enumeration_examples() {
        let k2 = enumerate_min_tds(&path(2)).unwrap();
        assert_eq!((k2.size, sets(&k2)), (2, vec![vec![0, 1]]));
        let p3 = enumerate_min_tds(&path(3)).unwrap();
        assert_eq!((p3.size, sets(&p3)), (2, vec![vec![0, 1], vec![1, 2]]));
        let c4 = enumerate_min_tds(&cycle(4).unwrap()).unwrap();
        assert_eq!(sets(&c4), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert_eq!(enumerate_min_tds(&Graph::new(1)), Err(Error::NoTds));
    }

    #[test]
    fn p3_criterion_examples() {
        assert_eq!(has_min_tds_with_p3(&path(6)), Ok(true));
        assert_eq!(has_min_tds_with_p3(&cycle(8).unwrap()), Ok(false));
        assert_eq!(has_min_tds_with_p3(&path(2)), Ok(false));
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide_by_definition(&cycle(6).unwrap()), Ok(true));
        assert_eq!(decide_by_definition(&path(2)), Ok(false));
        assert_eq!(decide_by_definition(&path(3)), Ok(false));
        assert_eq!(decide_by_definition(&Graph::new(2)), Err(Error::Disconnected));
        assert!(decide_by_definition(&Graph::new(1)).is_err());
    }

    #[test]
    fn ct_examples() {
        assert_eq!(ct_gamma_t(&cycle(6).unwrap(), 3), Ok(CtResult::Contractions(1)));
        // C7 and C6 both keep total domination number 4; C5 drops to 3.
        assert_eq!(ct_gamma_t(&cycle(8).unwrap(), 3), Ok(CtResult::Contractions(3)));
        assert_eq!(ct_gamma_t(&cycle(8).unwrap(), 2), Ok(CtResult::Irreducible));
        assert_eq!(ct_gamma_t(&path(2), 3), Ok(CtResult::Irreducible));
        assert_eq!(ct_gamma_t(&cycle(8).unwrap(), 1), Ok(CtResult::Irreducible));
    }

    #[test]
    fn dominating_edge_examples() {
        assert_eq!(has_dominating_edge(&path(4)), Some(Edge::new(1, 2)));
        assert!(has_dominating_edge(&star(3)).is_some());
        assert_eq!(has_dominating_edge(&cycle(6).unwrap()), None);
    }

    #[test]
    fn predicates() {
        let p6 = path(6);
        let d = p6.vertex_set([1, 2, 3, 4]);
        assert!(is_total_dominating(&p6, &d));
        assert!(contains_p3(&p6, &d));
        assert!(!is_total_dominating(&p6, &p6.vertex_set([0, 2, 3, 5])));
        assert!(is_dominating(&p6, &p6.vertex_set([1, 4])));
    }
}
