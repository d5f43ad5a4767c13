//! Named graph families and seeded random connected graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `P_n` with edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// `C_n`, requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(0, n - 1);
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `n` isolated vertices.
pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_{1,leaves}` with the center at 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn claw() -> Graph {
    star(3)
}

/// Disjoint union; vertices of `b` are shifted by `a.n()`.
pub fn union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let mut g = Graph::new(a.n() + b.n());
    for e in a.edges() {
        g.add_edge(e.u, e.v);
    }
    for e in b.edges() {
        g.add_edge(e.u + off, e.v + off);
    }
    g
}

/// Disjoint union with every cross pair joined.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = union(a, b);
    for u in 0..a.n() {
        for v in 0..b.n() {
            g.add_edge(u, a.n() + v);
        }
    }
    g
}

/// Disjoint union of the given parts, in order.
pub fn union_all<'a, I: IntoIterator<Item = &'a Graph>>(parts: I) -> Graph {
    parts.into_iter().fold(Graph::new(0), |acc, g| union(&acc, g))
}

/// `copies` disjoint copies of `g`.
pub fn copies(g: &Graph, copies: usize) -> Graph {
    union_all(std::iter::repeat_n(g, copies))
}

/// Disjoint union of paths with the given vertex counts.
pub fn linear_forest(sizes: &[usize]) -> Graph {
    let paths: Vec<Graph> = sizes.iter().map(|&s| path(s)).collect();
    union_all(&paths)
}

/// `P_4 + (k-1) P_3`, the pattern anchoring the `(P4 + kP3)`-free solver.
pub fn p4_plus_p3s(extra_p3: usize) -> Graph {
    let mut sizes = vec![4];
    sizes.extend(std::iter::repeat_n(3, extra_p3));
    linear_forest(&sizes)
}

/// Draws `G(n, p)` until the sample is connected. Deterministic in `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random graph needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    if n > 1 && p == 0.0 {
        return Err(Error::InvalidParameter(
            "p = 0 never yields a connected graph on more than one vertex".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = gnp(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
