//! Polynomial-time decision procedures for `P4`-free, `P5`-free and
//! `(P4 + kP3)`-free graphs, the `(H + K1)` lifting, and a dispatcher.

use std::ops::ControlFlow;

use crate::cover::{Budget, CoverProblem};
use crate::dichotomy::{poly_family, PolyFamily};
use crate::error::{Error, Result};
use crate::generators::{complete, p4_plus_p3s, path, union};
use crate::graph::{Graph, VertexSet};
use crate::induced::{contains_induced, induced_witness};
use crate::oracle::{contains_p3, decide_by_definition, has_dominating_edge, has_min_tds_with_p3, tds_within};

/// Class-membership checks are skipped above this many vertices under [`ClassCheck::Auto`].
pub const CLASS_CHECK_LIMIT: usize = 40;

/// Whether a solver verifies that its input lies in the class it is specialised for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassCheck {
    #[default]
    Auto,
    Always,
    Never,
}

impl ClassCheck {
    fn enabled(self, n: usize) -> bool {
        match self {
            ClassCheck::Auto => n <= CLASS_CHECK_LIMIT,
            ClassCheck::Always => true,
            ClassCheck::Never => false,
        }
    }
}

fn require_instance(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition("instance needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_free(g: &Graph, pattern: &Graph, name: &str, check: ClassCheck) -> Result<()> {
    if check.enabled(g.n()) && contains_induced(g, pattern) {
        return Err(Error::Precondition(format!("input is not {name}-free")));
    }
    Ok(())
}

/// Connected cographs on at least two vertices have a dominating edge, so the answer is always no.
pub fn decide_p4_free(g: &Graph, check: ClassCheck) -> Result<bool> {
    require_instance(g)?;
    require_free(g, &path(4), "P4", check)?;
    if has_dominating_edge(g).is_none() {
        return Err(Error::Precondition(
            "connected P4-free graph without a dominating edge".into(),
        ));
    }
    Ok(false)
}

/// No iff a dominating edge exists; every `P5`-free graph with `gamma_t >= 3` is a yes-instance.
pub fn decide_p5_free(g: &Graph, check: ClassCheck) -> Result<bool> {
    require_instance(g)?;
    require_free(g, &path(5), "P5", check)?;
    Ok(has_dominating_edge(g).is_none())
}

/// Decides a graph whose total domination number is known to be at most `q`:
/// a dominating edge means no; otherwise minimum total dominating sets are
/// enumerated and checked for a `P3`.
pub fn decide_bounded_gamma_t(g: &Graph, q: usize) -> Result<bool> {
    require_instance(g)?;
    if has_dominating_edge(g).is_some() {
        return Ok(false);
    }
    if tds_within(g, q, Budget::UNLIMITED)?.is_none() {
        return Err(Error::Precondition(format!(
            "total domination number exceeds the bound {q}"
        )));
    }
    has_min_tds_with_p3(g)
}

/// The split around an induced `P4 + (k-1)P3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcPartition {
    /// Induces `P4 + (k-1)P3`.
    pub a: VertexSet,
    /// Vertices at distance one from `a`.
    pub b: VertexSet,
    pub c: VertexSet,
}

pub fn compute_partition(g: &Graph, k: usize) -> Option<AbcPartition> {
    assert!(k >= 1, "partition needs k >= 1");
    let a = induced_witness(g, &p4_plus_p3s(k - 1))?;
    let b = g.neighborhood(&a).difference(&a);
    let c = VertexSet::full(g.n()).difference(&a).difference(&b);
    Some(AbcPartition { a, b, c })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCliqueSet {
    /// Components of `g[C]`, ordered by smallest vertex.
    pub all_cliques: Vec<VertexSet>,
    /// Cliques with a `P4`-free closed neighborhood and no complete `B`-vertex.
    pub kprime: Vec<VertexSet>,
    pub regular: Vec<VertexSet>,
}

pub fn compute_regular_cliques(g: &Graph, part: &AbcPartition, k: usize) -> Result<RegularCliqueSet> {
    let c_vertices = part.c.to_vec();
    let sub = g.induced_subgraph(&c_vertices);
    let mut all_cliques = Vec::new();
    for comp in sub.components() {
        let clique = g.vertex_set(comp.iter().map(|&i| c_vertices[i]));
        let size = clique.len();
        if clique.iter().any(|v| g.neighbors(v).intersection_len(&clique) != size - 1) {
            return Err(Error::Precondition(
                "G[C] is not a disjoint union of cliques; input is not (P4+kP3)-free".into(),
            ));
        }
        all_cliques.push(clique);
    }

    let p4 = path(4);
    let kprime: Vec<VertexSet> = all_cliques
        .iter()
        .filter(|clique| {
            let closed = g.closed_neighborhood(clique);
            let around = g.induced_subgraph(&closed.to_vec());
            !contains_induced(&around, &p4)
                && !part.b.iter().any(|b| clique.is_subset(g.neighbors(b)))
        })
        .cloned()
        .collect();

    let far: Vec<Vec<bool>> = kprime
        .iter()
        .map(|x| {
            kprime
                .iter()
                .map(|y| x != y && g.distance(x, y).is_none_or(|d| d >= 4))
                .collect()
        })
        .collect();
    let regular = (0..kprime.len())
        .filter(|&i| {
            let partners: Vec<usize> = (0..kprime.len()).filter(|&j| far[i][j]).collect();
            has_far_family(&far, &partners, k, &mut Vec::new())
        })
        .map(|i| kprime[i].clone())
        .collect();

    Ok(RegularCliqueSet {
        all_cliques,
        kprime,
        regular,
    })
}

/// Whether `need` members of `pool` are pairwise far apart.
fn has_far_family(far: &[Vec<bool>], pool: &[usize], need: usize, picked: &mut Vec<usize>) -> bool {
    if picked.len() == need {
        return true;
    }
    for (idx, &j) in pool.iter().enumerate() {
        if picked.iter().all(|&p| far[p][j]) {
            picked.push(j);
            if has_far_family(far, &pool[idx + 1..], need, picked) {
                return true;
            }
            picked.pop();
        }
    }
    false
}

/// `3(|A| - 1) + t(t + 1) + k + 1` with `t = k(k + 3)/2`.
pub fn f_bound(a_size: usize, k: usize) -> usize {
    let t = k * (k + 3) / 2;
    3 * (a_size - 1) + t * (t + 1) + k + 1
}

/// Which step of the `(P4 + kP3)`-free procedure produced the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// No induced `P4` remained; the cograph rule applies.
    P4FreeBase,
    /// No regular cliques and no total dominating set within `f(k)`.
    LargeTotalDomination,
    /// No regular cliques; decided by bounded enumeration.
    BoundedEnumeration,
    /// Two regular cliques lie within distance three.
    CloseRegularCliques,
    /// Nothing lies beyond distance one of the regular cliques.
    EmptyOuterRegion,
    /// No set of size at most `2 f(k)` covers the outer region.
    NoBoundedCover,
    /// A minimum outer cover contains a `P3`.
    CoverWithP3,
    /// A minimum outer cover meets the inner ring.
    CoverMeetsInnerRing,
    /// Every minimum outer cover is an induced matching inside the outer region.
    InducedMatching,
}

/// The state the `(P4 + kP3)`-free procedure ended in.
#[derive(Clone, Debug)]
pub struct P4kP3Trace {
    pub answer: bool,
    pub step: Step,
    /// The `k` at which a partition was found (0 for the cograph base).
    pub k_used: usize,
    pub partition: Option<AbcPartition>,
    pub cliques: Option<RegularCliqueSet>,
    pub f_bound: Option<usize>,
    /// Vertices at distance one from `N[R]`.
    pub inner_ring: Option<VertexSet>,
    /// Everything beyond the inner ring.
    pub outer_region: Option<VertexSet>,
    /// Minimum-size outer covers, lexicographically sorted.
    pub min_covers: Vec<VertexSet>,
}

impl P4kP3Trace {
    fn new(k_used: usize) -> Self {
        P4kP3Trace {
            answer: false,
            step: Step::P4FreeBase,
            k_used,
            partition: None,
            cliques: None,
            f_bound: None,
            inner_ring: None,
            outer_region: None,
            min_covers: Vec::new(),
        }
    }

    fn finish(mut self, step: Step, answer: bool) -> Self {
        self.step = step;
        self.answer = answer;
        self
    }
}

pub fn decide_p4_kp3_free(g: &Graph, k: usize, check: ClassCheck) -> Result<bool> {
    trace_p4_kp3_free(g, k, check).map(|t| t.answer)
}

/// Runs the `(P4 + kP3)`-free procedure and reports the step that fired.
pub fn trace_p4_kp3_free(g: &Graph, k: usize, check: ClassCheck) -> Result<P4kP3Trace> {
    require_instance(g)?;
    require_free(g, &p4_plus_p3s(k), &format!("(P4+{k}P3)"), check)?;

    let mut k = k;
    let part = loop {
        if k == 0 {
            decide_p4_free(g, ClassCheck::Never)?;
            return Ok(P4kP3Trace::new(0).finish(Step::P4FreeBase, false));
        }
        match compute_partition(g, k) {
            Some(part) => break part,
            None => k -= 1,
        }
    };

    let fk = f_bound(part.a.len(), k);
    let cliques = compute_regular_cliques(g, &part, k)?;
    let mut trace = P4kP3Trace::new(k);
    trace.f_bound = Some(fk);
    trace.partition = Some(part);

    if cliques.regular.is_empty() {
        trace.cliques = Some(cliques);
        if tds_within(g, fk, Budget::UNLIMITED)?.is_none() {
            return Ok(trace.finish(Step::LargeTotalDomination, true));
        }
        let answer = decide_bounded_gamma_t(g, fk)?;
        return Ok(trace.finish(Step::BoundedEnumeration, answer));
    }

    let regular = &cliques.regular;
    let close = regular.iter().enumerate().any(|(i, x)| {
        regular[i + 1..]
            .iter()
            .any(|y| g.distance(x, y).is_some_and(|d| d <= 3))
    });
    if close {
        trace.cliques = Some(cliques);
        return Ok(trace.finish(Step::CloseRegularCliques, true));
    }

    let mut around = g.empty_set();
    for clique in regular {
        around.union_with(&g.closed_neighborhood(clique));
    }
    let dist = g.bfs_distances(&around);
    let inner = g.vertex_set((0..g.n()).filter(|&v| dist[v] == Some(1)));
    let outer = g.vertex_set((0..g.n()).filter(|&v| dist[v].is_none_or(|d| d >= 2)));
    trace.cliques = Some(cliques);
    trace.inner_ring = Some(inner.clone());
    trace.outer_region = Some(outer.clone());
    if outer.is_empty() {
        return Ok(trace.finish(Step::EmptyOuterRegion, false));
    }

    let ground = inner.union(&outer);
    let problem = CoverProblem::restricted_total(g, &outer, &ground);
    if problem.find_within(2 * fk, Budget::UNLIMITED)?.is_none() {
        return Ok(trace.finish(Step::NoBoundedCover, true));
    }
    let size = problem
        .minimum(Budget::UNLIMITED)?
        .expect("a bounded cover exists")
        .len();
    let mut covers = Vec::new();
    let _ = problem.for_each_minimum(size, Budget::UNLIMITED, |s| {
        covers.push(s.clone());
        ControlFlow::Continue(())
    })?;
    covers.sort();
    trace.min_covers = covers;

    if trace.min_covers.iter().any(|s| contains_p3(g, s)) {
        return Ok(trace.finish(Step::CoverWithP3, true));
    }
    if trace.min_covers.iter().any(|s| s.intersects(&inner)) {
        return Ok(trace.finish(Step::CoverMeetsInnerRing, true));
    }
    Ok(trace.finish(Step::InducedMatching, false))
}

/// Decides `(H + K1)`-free graphs from a procedure for `H`-free ones.
///
/// If `g` contains an induced `H`, that copy dominates `g`, so the total domination
/// number is at most `2|V(H)|` and bounded enumeration decides.
pub fn lift_plus_k1<F>(g: &Graph, h: &Graph, base: F, check: ClassCheck) -> Result<bool>
where
    F: Fn(&Graph) -> Result<bool>,
{
    require_instance(g)?;
    let lifted = union(h, &complete(1));
    require_free(g, &lifted, "(H+K1)", check)?;
    if !contains_induced(g, h) {
        return base(g);
    }
    decide_bounded_gamma_t(g, 2 * h.n())
}

/// The procedure [`decide_auto`] picks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    P5Free,
    /// `P5 + tK1`-free with `t >= 1`, via repeated `(H + K1)` lifting.
    P5PlusIsolated(usize),
    P4PlusP3s(usize),
    Oracle,
}

/// Chooses a procedure for `g` given an optional pattern `h` it is claimed to avoid.
///
/// The claim is verified for graphs up to [`CLASS_CHECK_LIMIT`] vertices; an
/// unverified or hard pattern falls back to the definition.
pub fn route(g: &Graph, hint: Option<&Graph>) -> Method {
    let Some(h) = hint else {
        return Method::Oracle;
    };
    if g.n() <= CLASS_CHECK_LIMIT && contains_induced(g, h) {
        return Method::Oracle;
    }
    match poly_family(h) {
        Some(PolyFamily::P5PlusIsolated { isolated: 0 }) => Method::P5Free,
        Some(PolyFamily::P5PlusIsolated { isolated }) => Method::P5PlusIsolated(isolated),
        Some(PolyFamily::P4PlusSmall { k }) => Method::P4PlusP3s(k),
        None => Method::Oracle,
    }
}

pub fn decide_with(g: &Graph, method: Method) -> Result<bool> {
    match method {
        Method::P5Free => decide_p5_free(g, ClassCheck::Auto),
        Method::P5PlusIsolated(t) => decide_p5_plus_isolated(g, t),
        Method::P4PlusP3s(k) => decide_p4_kp3_free(g, k, ClassCheck::Auto),
        Method::Oracle => decide_by_definition(g),
    }
}

fn decide_p5_plus_isolated(g: &Graph, t: usize) -> Result<bool> {
    if t == 0 {
        return decide_p5_free(g, ClassCheck::Auto);
    }
    let inner = union(&path(5), &Graph::new(t - 1));
    lift_plus_k1(g, &inner, |g| decide_p5_plus_isolated(g, t - 1), ClassCheck::Auto)
}

pub fn decide_auto(g: &Graph, hint: Option<&Graph>) -> Result<bool> {
    decide_with(g, route(g, hint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn p4_free_examples() {
        assert_eq!(decide_p4_free(&complete(4), ClassCheck::Always), Ok(false));
        assert_eq!(decide_p4_free(&cycle(4).unwrap(), ClassCheck::Always), Ok(false));
        // complement of P3 is K2 + K1; joined with K1 gives the paw.
        let paw = join(&union(&complete(2), &complete(1)), &complete(1));
        assert_eq!(decide_p4_free(&paw, ClassCheck::Always), Ok(false));
        assert!(matches!(
            decide_p4_free(&path(4), ClassCheck::Always),
            Err(Error::Precondition(_))
        ));
        assert_eq!(decide_p4_free(&Graph::new(2), ClassCheck::Always), Err(Error::Disconnected));
    }

    #[test]
    fn p5_free_examples() {
        assert_eq!(decide_p5_free(&complete(4), ClassCheck::Always), Ok(false));
        assert_eq!(decide_p5_free(&cycle(5).unwrap(), ClassCheck::Always), Ok(true));
        assert_eq!(decide_p5_free(&path(4), ClassCheck::Always), Ok(false));
        assert!(decide_p5_free(&path(5), ClassCheck::Always).is_err());
    }

    #[test]
    fn partition_examples() {
        let c6 = cycle(6).unwrap();
        let part = compute_partition(&c6, 1).unwrap();
        assert_eq!(part.a.len(), 4);
        assert_eq!(part.b.len(), 2);
        assert!(part.c.is_empty());

        let part = compute_partition(&path(4), 1).unwrap();
        assert_eq!(part.a.len(), 4);
        assert!(part.b.is_empty() && part.c.is_empty());

        assert_eq!(compute_partition(&cycle(4).unwrap(), 1), None);
    }

    #[test]
    fn f_bound_examples() {
        assert_eq!(f_bound(4, 1), 17);
        assert_eq!(f_bound(7, 2), 51);
        assert_eq!(f_bound(10, 3), 121);
        let values: Vec<usize> = (1..=6).map(|k| f_bound(4 + 3 * (k - 1), k)).collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn p4_kp3_examples() {
        let c = ClassCheck::Always;
        assert_eq!(decide_p4_kp3_free(&cycle(6).unwrap(), 1, c), Ok(true));
        assert_eq!(decide_p4_kp3_free(&cycle(8).unwrap(), 1, c), Ok(false));
        assert_eq!(decide_p4_kp3_free(&path(2), 1, c), Ok(false));
        assert!(decide_p4_kp3_free(&path(8), 1, c).is_err());
    }

    #[test]
    fn lift_examples() {
        let c = ClassCheck::Always;
        let p5_base = |g: &Graph| decide_p5_free(g, ClassCheck::Always);
        assert_eq!(lift_plus_k1(&cycle(5).unwrap(), &path(5), p5_base, c), Ok(true));
        assert_eq!(lift_plus_k1(&path(4), &path(5), p5_base, c), Ok(false));
        let h = linear_forest(&[4, 3]);
        let kp3_base = |g: &Graph| decide_p4_kp3_free(g, 1, ClassCheck::Always);
        assert_eq!(lift_plus_k1(&cycle(8).unwrap(), &h, kp3_base, c), Ok(false));
    }

    #[test]
    fn auto_examples() {
        assert_eq!(route(&cycle(5).unwrap(), Some(&path(5))), Method::P5Free);
        assert_eq!(decide_auto(&cycle(5).unwrap(), Some(&path(5))), Ok(true));
        let h = linear_forest(&[4, 3]);
        assert_eq!(route(&cycle(8).unwrap(), Some(&h)), Method::P4PlusP3s(1));
        assert_eq!(decide_auto(&cycle(8).unwrap(), Some(&h)), Ok(false));
        assert_eq!(decide_auto(&cycle(6).unwrap(), None), Ok(true));
        // a hint the graph does not satisfy falls back to the definition
        assert_eq!(route(&cycle(6).unwrap(), Some(&path(5))), Method::Oracle);
        assert_eq!(route(&cycle(9).unwrap(), Some(&claw())), Method::Oracle);
    }
}
