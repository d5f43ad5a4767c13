//! Exact branch-and-bound for "pick vertices so that every target has a chosen
//! vertex in its cover set". Total domination, domination and the restricted
//! covering steps of the polynomial solvers are all instances.
//!
//! Branching picks the uncovered target with the fewest remaining options and tries
//! each option in increasing id order, excluding earlier options in later branches,
//! so every cover is reached along exactly one path. The bound is a greedy packing
//! of uncovered targets with pairwise disjoint option sets.
//!
//! Existence queries also split the uncovered targets into groups that share no
//! available option and solve each group on its own, smallest budget first.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Upper limit on search nodes for a single call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

#[derive(Clone, Debug)]
pub struct CoverProblem {
    n: usize,
    /// Per target, the vertices that cover it.
    covers: Vec<VertexSet>,
    /// Per vertex, the targets it covers.
    hits: Vec<VertexSet>,
}

/// What is known about covering one group of targets from one set of available options.
#[derive(Clone, Debug, Default)]
struct Known {
    /// Every cover has at least this many vertices.
    lower: usize,
    witness: Option<VertexSet>,
}

/// Memo entries kept before the table is cleared.
const MEMO_LIMIT: usize = 1 << 20;

struct Search<'a> {
    problem: &'a CoverProblem,
    limit: u64,
    nodes: u64,
    chosen: VertexSet,
    excluded: VertexSet,
    memo: HashMap<(VertexSet, VertexSet), Known>,
}

impl CoverProblem {
    pub fn new(n: usize, covers: Vec<VertexSet>) -> Self {
        let t = covers.len();
        let mut hits = vec![VertexSet::new(t); n];
        for (target, cover) in covers.iter().enumerate() {
            for v in cover {
                hits[v].insert(target);
            }
        }
        CoverProblem { n, covers, hits }
    }

    /// Every vertex must have a chosen neighbor.
    pub fn total_domination(g: &Graph) -> Self {
        CoverProblem::new(g.n(), (0..g.n()).map(|v| g.neighbors(v).clone()).collect())
    }

    /// Every vertex must be chosen or have a chosen neighbor.
    pub fn domination(g: &Graph) -> Self {
        CoverProblem::new(g.n(), (0..g.n()).map(|v| g.closed_neighbors(v)).collect())
    }

    /// Every vertex of `targets` must have a chosen neighbor inside `candidates`.
    pub fn restricted_total(g: &Graph, targets: &VertexSet, candidates: &VertexSet) -> Self {
        CoverProblem::new(
            g.n(),
            targets
                .iter()
                .map(|t| g.neighbors(t).intersection(candidates))
                .collect(),
        )
    }

    pub fn num_targets(&self) -> usize {
        self.covers.len()
    }

    pub fn is_feasible(&self) -> bool {
        self.covers.iter().all(|c| !c.is_empty())
    }

    pub fn is_cover(&self, set: &VertexSet) -> bool {
        self.covers.iter().all(|c| c.intersects(set))
    }

    /// Repeatedly takes the vertex covering the most uncovered targets (lowest id on ties).
    pub fn greedy(&self) -> Option<VertexSet> {
        if !self.is_feasible() {
            return None;
        }
        let mut uncovered = VertexSet::full(self.num_targets());
        let mut chosen = VertexSet::new(self.n);
        while !uncovered.is_empty() {
            let best = (0..self.n)
                .max_by_key(|&v| (self.hits[v].intersection_len(&uncovered), std::cmp::Reverse(v)))
                .expect("feasible problem has candidates");
            chosen.insert(best);
            uncovered.difference_with(&self.hits[best]);
        }
        Some(chosen)
    }

    /// Some cover of size at most `k`, or `None` if none exists.
    pub fn find_within(&self, k: usize, budget: Budget) -> Result<Option<VertexSet>> {
        if !self.is_feasible() {
            return Ok(None);
        }
        let mut search = Search::new(self, budget);
        search.fit(&VertexSet::full(self.num_targets()), k)
    }

    /// The first of `forced` that extends to a cover of size at most `k`, with that cover.
    /// One search state, and one node budget, is shared across all of them.
    pub fn first_extendable<I>(&self, forced: I, k: usize, budget: Budget) -> Result<Option<VertexSet>>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if !self.is_feasible() {
            return Ok(None);
        }
        let mut search = Search::new(self, budget);
        for f in forced {
            if f.len() > k {
                continue;
            }
            let mut uncovered = VertexSet::full(self.num_targets());
            for v in &f {
                uncovered.difference_with(&self.hits[v]);
            }
            search.reset();
            if let Some(mut s) = search.fit(&uncovered, k - f.len())? {
                s.union_with(&f);
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// A minimum cover, searching sizes in increasing order up to the greedy bound.
    pub fn minimum(&self, budget: Budget) -> Result<Option<VertexSet>> {
        let Some(greedy) = self.greedy() else {
            return Ok(None);
        };
        let mut search = Search::new(self, budget);
        let lower = search.packing_bound(&VertexSet::full(self.num_targets())).unwrap_or(0);
        let all = VertexSet::full(self.num_targets());
        for k in lower..greedy.len() {
            search.reset();
            if let Some(found) = search.fit(&all, k)? {
                return Ok(Some(found));
            }
        }
        Ok(Some(greedy))
    }

    /// Calls `visit` once for every minimum cover, in no particular order.
    ///
    /// `size` must be the optimum; the branching then only reaches minimum covers.
    pub fn for_each_minimum<F>(&self, size: usize, budget: Budget, mut visit: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        if !self.is_feasible() {
            return Ok(ControlFlow::Continue(()));
        }
        let mut search = Search::new(self, budget);
        search.run(size, &mut visit)
    }
}

impl<'a> Search<'a> {
    fn new(problem: &'a CoverProblem, budget: Budget) -> Self {
        Search {
            problem,
            limit: budget.0,
            nodes: 0,
            chosen: VertexSet::new(problem.n),
            excluded: VertexSet::new(problem.n),
            memo: HashMap::new(),
        }
    }

    fn reset(&mut self) {
        self.chosen.clear();
        self.excluded.clear();
    }

    /// Size of a greedy packing of `uncovered` targets with disjoint option sets;
    /// `None` when some target has no option left.
    fn packing_bound(&self, uncovered: &VertexSet) -> Option<usize> {
        let mut used = VertexSet::new(self.problem.n);
        let mut count = 0;
        for t in uncovered {
            let options = self.problem.covers[t].difference(&self.excluded);
            if options.is_empty() {
                return None;
            }
            if !options.intersects(&used) {
                used.union_with(&options);
                count += 1;
            }
        }
        Some(count)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        Ok(())
    }

    /// Groups of `uncovered` targets linked through shared available options.
    fn split(&self, uncovered: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = uncovered.clone();
        let mut groups = Vec::new();
        while let Some(t) = remaining.first() {
            remaining.remove(t);
            let mut group = VertexSet::new(uncovered.universe());
            group.insert(t);
            let mut stack = vec![t];
            while let Some(x) = stack.pop() {
                for u in &self.problem.covers[x].difference(&self.excluded) {
                    for y in &self.problem.hits[u].intersection(&remaining) {
                        remaining.remove(y);
                        group.insert(y);
                        stack.push(y);
                    }
                }
            }
            groups.push(group);
        }
        groups
    }

    /// Fewest available options; ties go to the target whose options reach furthest,
    /// which tends to split the rest into independent groups sooner.
    fn branch_target(&self, uncovered: &VertexSet) -> usize {
        let problem = self.problem;
        uncovered
            .iter()
            .min_by_key(|&t| {
                let options = problem.covers[t].difference(&self.excluded);
                let reach = options.iter().map(|u| problem.hits[u].intersection_len(uncovered)).max();
                (options.len(), std::cmp::Reverse(reach))
            })
            .expect("nonempty")
    }

    /// A minimum cover of `group` if it has at most `allowed` vertices, remembering
    /// what each attempt proved.
    fn group_minimum(&mut self, group: &VertexSet, lower: usize, allowed: usize) -> Result<Option<VertexSet>> {
        let mut options = VertexSet::new(self.problem.n);
        for t in group {
            options.union_with(&self.problem.covers[t]);
        }
        let key = (group.clone(), options.intersection(&self.excluded));
        let mut known = self.memo.get(&key).cloned().unwrap_or_default();
        known.lower = known.lower.max(lower);
        if known.witness.as_ref().is_some_and(|w| w.len() == known.lower) {
            return Ok(known.witness.filter(|w| w.len() <= allowed));
        }
        let mut found = None;
        for k in known.lower..=allowed {
            if let Some(s) = self.fit(group, k)? {
                found = Some(s);
                break;
            }
            known.lower = k + 1;
        }
        if let Some(s) = &found {
            known.witness = Some(s.clone());
        }
        if self.memo.len() >= MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert(key, known);
        Ok(found)
    }

    /// Some set of at most `room` available vertices covering `uncovered`.
    fn fit(&mut self, uncovered: &VertexSet, room: usize) -> Result<Option<VertexSet>> {
        self.tick()?;
        if uncovered.is_empty() {
            return Ok(Some(VertexSet::new(self.problem.n)));
        }
        if room == 0 {
            return Ok(None);
        }
        match self.packing_bound(uncovered) {
            Some(lb) if lb <= room => {}
            _ => return Ok(None),
        }
        let mut groups = self.split(uncovered);
        if groups.len() > 1 {
            groups.sort_by_key(VertexSet::len);
            let mut bounds: Vec<usize> = groups
                .iter()
                .map(|g| self.packing_bound(g).expect("feasible groups"))
                .collect();
            let mut total: usize = bounds.iter().sum();
            let mut result = VertexSet::new(self.problem.n);
            for (i, group) in groups.iter().enumerate() {
                if total > room {
                    return Ok(None);
                }
                let allowed = room - (total - bounds[i]);
                let Some(s) = self.group_minimum(group, bounds[i], allowed)? else {
                    return Ok(None);
                };
                total = total + s.len() - bounds[i];
                bounds[i] = s.len();
                result.union_with(&s);
            }
            return Ok(Some(result));
        }
        let problem = self.problem;
        let target = self.branch_target(uncovered);
        let options = problem.covers[target].difference(&self.excluded);
        let mut found = None;
        for u in &options {
            let rest = uncovered.difference(&problem.hits[u]);
            if let Some(mut s) = self.fit(&rest, room - 1)? {
                s.insert(u);
                found = Some(s);
                break;
            }
            self.excluded.insert(u);
        }
        self.excluded.difference_with(&options);
        Ok(found)
    }

    fn run<F>(&mut self, k: usize, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        let uncovered = VertexSet::full(self.problem.num_targets());
        self.dfs(&uncovered, k, visit)
    }

    fn dfs<F>(&mut self, uncovered: &VertexSet, k: usize, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        self.tick()?;
        if uncovered.is_empty() {
            return Ok(visit(&self.chosen));
        }
        let room = k.saturating_sub(self.chosen.len());
        if room == 0 {
            return Ok(ControlFlow::Continue(()));
        }
        match self.packing_bound(uncovered) {
            Some(lb) if lb <= room => {}
            _ => return Ok(ControlFlow::Continue(())),
        }
        let problem = self.problem;
        let target = uncovered
            .iter()
            .min_by_key(|&t| problem.covers[t].difference(&self.excluded).len())
            .unwrap();
        let options = problem.covers[target].difference(&self.excluded);
        let mut flow = Ok(ControlFlow::Continue(()));
        for u in &options {
            self.chosen.insert(u);
            let rest = uncovered.difference(&problem.hits[u]);
            let r = self.dfs(&rest, k, visit);
            self.chosen.remove(u);
            self.excluded.insert(u);
            match r {
                Ok(ControlFlow::Continue(())) => {}
                other => {
                    flow = other;
                    break;
                }
            }
        }
        self.excluded.difference_with(&options);
        flow
    }
}
