//! Simple undirected graphs over dense vertex ids, stored as bitset rows.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A subset of `0..universe`, backed by a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = VertexSet::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} out of range {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

/// Orders sets lexicographically by their sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// An unordered edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `uv`; a no-op when the edge already exists.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_vertices(self.n(), vertices)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Open neighborhood N(S).
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// Closed neighborhood N[S].
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood(s);
        out.union_with(s);
        out
    }

    /// The subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in &self.rows[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for the null graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Multi-source BFS distances from `sources`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, sources: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap() + 1;
            for w in &self.rows[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `min` over `x in s`, `y in t` of `d(x, y)`; `None` when no path exists.
    pub fn distance(&self, s: &VertexSet, t: &VertexSet) -> Option<usize> {
        if s.intersects(t) {
            return Some(0);
        }
        let dist = self.bfs_distances(s);
        t.iter().filter_map(|v| dist[v]).min()
    }

    /// Contracts `e`, returning the new graph and the old-to-new id map.
    ///
    /// The merged vertex takes id `min(u, v)`; ids above `max(u, v)` shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, Vec<usize>)> {
        let Edge { u, v } = Edge::new(e.u, e.v);
        if !self.has_edge(u, v) {
            return Err(Error::InvalidEdge(e.u, e.v));
        }
        let n = self.n();
        let relabel: Vec<usize> = (0..n)
            .map(|x| match x.cmp(&v) {
                Ordering::Less => x,
                Ordering::Equal => u,
                Ordering::Greater => x - 1,
            })
            .collect();
        let mut h = Graph::new(n - 1);
        for edge in self.edges() {
            let (a, b) = (relabel[edge.u], relabel[edge.v]);
            if a != b {
                h.add_edge(a, b);
            }
        }
        Ok((h, relabel))
    }

    /// Replaces `e = uw` by a path `u v1 ... vk w` through `k` fresh vertices `n..n+k`.
    pub fn k_subdivide(&self, e: Edge, k: usize) -> Result<Graph> {
        let Edge { u, v: w } = Edge::new(e.u, e.v);
        if !self.has_edge(u, w) {
            return Err(Error::InvalidEdge(e.u, e.v));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("subdivision length must be positive".into()));
        }
        let n = self.n();
        let mut h = Graph::new(n + k);
        for edge in self.edges() {
            if edge != (Edge { u, v: w }) {
                h.add_edge(edge.u, edge.v);
            }
        }
        let mut prev = u;
        for fresh in n..n + k {
            h.add_edge(prev, fresh);
            prev = fresh;
        }
        h.add_edge(prev, w);
        Ok(h)
    }

    /// Parses the `n m` header followed by `m` lines of `u v` (0-based ids).
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing \"n m\" header"))?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::new(n);
        let mut count = 0;
        for (lineno, line) in lines {
            let (u, v) = parse_pair(lineno, line)?;
            if u >= n || v >= n {
                return Err(Error::parse(lineno, format!("vertex id out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::parse(lineno, format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v);
            count += 1;
        }
        if count != m {
            return Err(Error::parse(
                hline,
                format!("header declares {m} edges but {count} were given"),
            ));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for e in edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|e| Error::parse(lineno, format!("bad {what}: {e}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::parse(lineno, "expected exactly two fields"));
    }
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|e| (e.u, e.v)).collect();
        write!(f, "Graph(n={}, edges={:?})", self.n(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_vertices(130, [1, 64, 129]);
        let b = VertexSet::from_vertices(130, [64, 100]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(&b).to_vec(), vec![1, 64, 100, 129]);
        assert_eq!(a.intersection(&b).to_vec(), vec![64]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 129]);
        assert!(a.intersects(&b));
        assert!(VertexSet::from_vertices(130, [1]).is_subset(&a));
        assert!(VertexSet::from_vertices(130, [0, 5]) < VertexSet::from_vertices(130, [1]));
    }

    #[test]
    fn contract_triangle_gives_k2() {
        let c3 = cycle(3).unwrap();
        let (h, relabel) = c3.contract_edge(Edge::new(0, 2)).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edges(), vec![Edge::new(0, 1)]);
        assert_eq!(relabel, vec![0, 1, 0]);
    }

    #[test]
    fn contract_p2_gives_k1() {
        let (h, _) = path(2).contract_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.m(), 0);
    }

    #[test]
    fn contract_c6_gives_c5() {
        let (h, _) = cycle(6).unwrap().contract_edge(Edge::new(2, 3)).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.m(), 5);
        assert!((0..5).all(|v| h.degree(v) == 2));
        assert!(h.is_connected());
    }

    #[test]
    fn contract_rejects_non_edge() {
        assert_eq!(
            path(4).contract_edge(Edge::new(0, 2)),
            Err(Error::InvalidEdge(0, 2))
        );
    }

    #[test]
    fn subdivisions() {
        let p6 = path(2).k_subdivide(Edge::new(0, 1), 4).unwrap();
        assert_eq!((p6.n(), p6.m()), (6, 5));
        assert_eq!(p6.max_degree(), 2);
        assert!(p6.is_connected());

        let c7 = cycle(3).unwrap().k_subdivide(Edge::new(0, 1), 4).unwrap();
        assert_eq!((c7.n(), c7.m()), (7, 7));

        let mut g = cycle(3).unwrap();
        for e in cycle(3).unwrap().edges() {
            g = g.k_subdivide(e, 4).unwrap();
        }
        assert_eq!((g.n(), g.m()), (15, 15));
        assert!((0..15).all(|v| g.degree(v) == 2) && g.is_connected());

        assert!(path(3).k_subdivide(Edge::new(0, 2), 4).is_err());
    }

    #[test]
    fn distances() {
        let p6 = path(6);
        let s = |xs: &[usize]| p6.vertex_set(xs.iter().copied());
        assert_eq!(p6.distance(&s(&[0]), &s(&[5])), Some(5));
        assert_eq!(p6.distance(&s(&[2, 3]), &s(&[2, 3])), Some(0));
        assert_eq!(p6.distance(&s(&[0, 1]), &s(&[4, 5])), Some(3));
        let two = Graph::new(2);
        assert_eq!(two.distance(&two.vertex_set([0]), &two.vertex_set([1])), None);
    }

    #[test]
    fn edge_list_round_trip_and_rejections() {
        let g = Graph::parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("3 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Graph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }
}
