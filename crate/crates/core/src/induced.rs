//! Induced-subgraph search for small pattern graphs.
//!
//! Patterns are placed one vertex at a time in a connectivity-first order, so every
//! later vertex of a connected pattern component is drawn from the neighborhood of
//! an already placed vertex. Candidate sets are maintained as bitsets: a placed
//! pattern neighbor intersects with its image's neighborhood, a placed non-neighbor
//! subtracts it. Twin pattern vertices are placed in increasing image order.

use crate::graph::{Graph, VertexSet};

struct Plan {
    order: Vec<usize>,
    /// For position i, an earlier position whose pattern vertex is adjacent to `order[i]`.
    anchor: Vec<Option<usize>>,
    /// For position i, an earlier position holding a twin of `order[i]`.
    twin: Vec<Option<usize>>,
}

fn plan(h: &Graph) -> Plan {
    let mut comps = h.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(h.n());
    for comp in comps {
        let start = *comp.iter().max_by_key(|&&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
        let mut placed = h.empty_set();
        placed.insert(start);
        order.push(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            let mut next: Vec<usize> = h.neighbors(v).iter().filter(|&w| !placed.contains(w)).collect();
            next.sort_by_key(|&w| std::cmp::Reverse(h.degree(w)));
            for w in next {
                placed.insert(w);
                order.push(w);
                frontier.push(w);
            }
        }
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; h.n()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let anchor = order
        .iter()
        .enumerate()
        .map(|(i, &v)| h.neighbors(v).iter().map(|w| pos[w]).filter(|&j| j < i).min())
        .collect();
    let twin = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            (0..i).rev().find(|&j| {
                let w = order[j];
                let mut nv = h.neighbors(v).clone();
                let mut nw = h.neighbors(w).clone();
                nv.remove(w);
                nw.remove(v);
                nv == nw
            })
        })
        .collect();
    Plan { order, anchor, twin }
}

/// Finds an induced copy of `h` in `g`; the result maps each vertex of `h` to its image.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    let plan = plan(h);
    let mut images = Vec::with_capacity(h.n());
    let mut used = g.empty_set();
    if extend(g, h, &plan, &mut images, &mut used) {
        let mut mapping = vec![0; h.n()];
        for (i, &img) in images.iter().enumerate() {
            mapping[plan.order[i]] = img;
        }
        Some(mapping)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, plan: &Plan, images: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let i = images.len();
    if i == plan.order.len() {
        return true;
    }
    let p = plan.order[i];
    let mut cand = match plan.anchor[i] {
        Some(j) => g.neighbors(images[j]).clone(),
        None => VertexSet::full(g.n()),
    };
    cand.difference_with(used);
    for (j, &img) in images.iter().enumerate() {
        if h.has_edge(p, plan.order[j]) {
            cand.intersect_with(g.neighbors(img));
        } else {
            cand.difference_with(g.neighbors(img));
        }
    }
    let floor = plan.twin[i].map(|j| images[j]);
    let need = h.degree(p);
    for c in cand.iter() {
        if floor.is_some_and(|f| c <= f) || g.degree(c) < need {
            continue;
        }
        images.push(c);
        used.insert(c);
        if extend(g, h, plan, images, used) {
            return true;
        }
        images.pop();
        used.remove(c);
    }
    false
}

/// True iff some vertex subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// The vertex set of an induced copy of `h`, if any.
pub fn induced_witness(g: &Graph, h: &Graph) -> Option<VertexSet> {
    find_induced(g, h).map(|m| g.vertex_set(m))
}

/// True iff `g` contains none of `family` as an induced subgraph.
pub fn is_h_free(g: &Graph, family: &[Graph]) -> bool {
    family.iter().all(|h| !contains_induced(g, h))
}
