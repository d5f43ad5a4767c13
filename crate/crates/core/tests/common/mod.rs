//! Brute-force reference implementations and random instance generators shared by
//! the integration tests. Nothing here calls the library's search code.

#![allow(dead_code)]

use rand::Rng;
use tdcontract::graph::Graph;

/// Adjacency bitmasks; only for graphs with fewer than 64 vertices.
pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() < 64);
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&w| g.has_edge(v, w)).fold(0u64, |m, w| m | 1 << w))
        .collect()
}

pub fn is_tds_mask(adj: &[u64], set: u64) -> bool {
    adj.iter().all(|&nb| nb & set != 0)
}

pub fn is_ds_mask(adj: &[u64], set: u64) -> bool {
    adj.iter().enumerate().all(|(v, &nb)| set >> v & 1 == 1 || nb & set != 0)
}

/// Every subset of `0..n` with exactly `k` elements, in increasing numeric order.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for v in start..n {
            if n - v < k {
                break;
            }
            rec(v + 1, n, k - 1, cur | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// Smallest `k` such that some `k`-subset satisfies `ok`, and all such subsets.
pub fn minimum_sets(n: usize, ok: impl Fn(u64) -> bool) -> Option<(usize, Vec<u64>)> {
    (0..=n).find_map(|k| {
        let sets: Vec<u64> = subsets(n, k).into_iter().filter(|&s| ok(s)).collect();
        (!sets.is_empty()).then_some((k, sets))
    })
}

pub fn bf_gamma_t(g: &Graph) -> Option<usize> {
    let adj = masks(g);
    minimum_sets(g.n(), |s| is_tds_mask(&adj, s)).map(|(k, _)| k)
}

pub fn bf_gamma(g: &Graph) -> usize {
    let adj = masks(g);
    minimum_sets(g.n(), |s| is_ds_mask(&adj, s)).unwrap().0
}

pub fn bf_min_tds(g: &Graph) -> Option<(usize, Vec<u64>)> {
    let adj = masks(g);
    minimum_sets(g.n(), |s| is_tds_mask(&adj, s))
}

/// Whether some TDS of size at most `k` exists.
pub fn bf_tds_within(g: &Graph, k: usize) -> bool {
    let adj = masks(g);
    (0..=k.min(g.n())).any(|s| subsets(g.n(), s).into_iter().any(|set| is_tds_mask(&adj, set)))
}

/// Contraction on edge lists: `v` is merged into `u`, then ids are compacted.
pub fn bf_contract(g: &Graph, u: usize, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&x| x != v).collect();
    let id = |x: usize| keep.iter().position(|&y| y == if x == v { u } else { x }).unwrap();
    let mut h = Graph::new(g.n() - 1);
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.has_edge(a, b) {
                let (x, y) = (id(a), id(b));
                if x != y && !h.has_edge(x, y) {
                    h.add_edge(x, y);
                }
            }
        }
    }
    h
}

fn all_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// One contraction lowers the total domination number, by trying them all.
pub fn bf_decide(g: &Graph) -> bool {
    let t = bf_gamma_t(g).unwrap();
    all_edges(g)
        .into_iter()
        .any(|(a, b)| bf_gamma_t(&bf_contract(g, a, b)).is_some_and(|x| x < t))
}

/// Fewest contractions lowering the total domination number, searching up to `depth`.
pub fn bf_ct(g: &Graph, depth: usize) -> Option<usize> {
    let t = bf_gamma_t(g).unwrap();
    let mut level = vec![g.clone()];
    for d in 1..=depth {
        let mut next = Vec::new();
        for h in &level {
            for (a, b) in all_edges(h) {
                let c = bf_contract(h, a, b);
                if bf_gamma_t(&c).is_some_and(|x| x < t) {
                    return Some(d);
                }
                next.push(c);
            }
        }
        level = next;
    }
    None
}

/// Some minimum TDS has a vertex with two neighbors inside it.
pub fn bf_p3_criterion(g: &Graph) -> bool {
    let adj = masks(g);
    let (_, sets) = minimum_sets(g.n(), |s| is_tds_mask(&adj, s)).unwrap();
    sets.iter()
        .any(|&s| (0..g.n()).any(|v| s >> v & 1 == 1 && (adj[v] & s).count_ones() >= 2))
}

/// Pattern containment by trying every injective map.
pub fn bf_contains_induced(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for c in 0..g.n() {
            if map.contains(&c) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(c, map[j])) {
                map.push(c);
                if rec(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(g, h, &mut Vec::new())
}

pub fn sample_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

pub fn sample_connected<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let p = rng.gen_range(0.15..0.8);
        let g = sample_gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected cograph: a random binary cotree whose root is a join.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    fn build<R: Rng>(rng: &mut R, n: usize, join: bool) -> Graph {
        if n == 1 {
            return Graph::new(1);
        }
        let split = rng.gen_range(1..n);
        let a_join = if rng.gen_bool(0.7) { !join } else { join };
        let b_join = if rng.gen_bool(0.7) { !join } else { join };
        let a = build(rng, split, a_join);
        let b = build(rng, n - split, b_join);
        let mut g = Graph::new(n);
        for e in a.edges() {
            g.add_edge(e.u, e.v);
        }
        for e in b.edges() {
            g.add_edge(e.u + split, e.v + split);
        }
        if join {
            for x in 0..split {
                for y in split..n {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }
    build(rng, n, true)
}

/// A path-like random tree plus up to two chords; domination number 4 is common at 8 to 10 vertices.
pub fn random_stringy<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(v.saturating_sub(3)..v), v);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b);
        }
    }
    g
}

/// A hub clique with legs ending in cliques, plus a few random chords.
///
/// Far-apart leg cliques make the regular-clique steps of the `(P4 + kP3)`-free
/// procedure reachable at sizes the brute-force oracle can still handle.
pub fn random_spider<R: Rng>(rng: &mut R) -> Graph {
    let hub = rng.gen_range(1..=3);
    let mut edges = Vec::new();
    for a in 0..hub {
        for b in a + 1..hub {
            edges.push((a, b));
        }
    }
    let mut n = hub;
    for _ in 0..rng.gen_range(2..=4) {
        let mut prev = rng.gen_range(0..hub);
        for _ in 0..rng.gen_range(1..=4) {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        let start = n;
        for _ in 0..rng.gen_range(1..=3) {
            edges.push((prev, n));
            edges.extend((start..n).map(|j| (j, n)));
            n += 1;
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let mut g = Graph::new(n);
    for (a, b) in edges {
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b);
        }
    }
    g
}

/// The Even-DS gadget built straight from its description, on adjacency masks.
pub fn reference_even_ds(g: &Graph, ell: usize) -> Graph {
    let n = g.n();
    let copies = 2 * ell;
    let x = |i: usize| i - 1;
    let v = |i: usize, j: usize| copies + i * n + j;
    let mut h = Graph::new(copies + (copies + 1) * n);
    let add = |h: &mut Graph, a: usize, b: usize| {
        if !h.has_edge(a, b) {
            h.add_edge(a, b)
        }
    };
    for j in 0..n {
        for k in j + 1..n {
            add(&mut h, v(0, j), v(0, k));
        }
    }
    for i in 1..=copies {
        for j in 0..n {
            for k in 0..n {
                if j == k || g.has_edge(j, k) {
                    add(&mut h, v(i, j), v(0, k));
                }
            }
            add(&mut h, x(i), v(0, j));
            add(&mut h, x(i), v(i, j));
        }
        if i % 2 == 1 {
            add(&mut h, x(i), x(i + 1));
        }
    }
    h
}
