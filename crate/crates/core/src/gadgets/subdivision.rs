use super::{Builder, GadgetKind, GadgetOutput};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Replaces every edge of `g` by a path through four new vertices.
///
/// The vertices on the path replacing the `i`-th edge (in lexicographic order) are
/// `n + 4i .. n + 4i + 4`, listed from the smaller endpoint.
pub fn four_subdivide_all(g: &Graph) -> Result<Graph> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!(
            "4-subdivision needs at least 3 vertices, got {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    g.edges()
        .into_iter()
        .try_fold(g.clone(), |h, e| h.k_subdivide(e, 4))
}

/// [`four_subdivide_all`] with role names `v3` for original and `s2[0-3]` for new vertices.
pub fn four_subdivide_gadget(g: &Graph) -> Result<GadgetOutput> {
    let graph = four_subdivide_all(g)?;
    let mut b = Builder::new();
    for v in 0..g.n() {
        b.add(format!("v{v}"));
    }
    for e in g.edges() {
        for k in 1..=4 {
            b.add(format!("s{k}[{e}]"));
        }
    }
    let mut out = b.finish(GadgetKind::Subdivision { source: g.clone() });
    out.graph = graph;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn small_cases() {
        let c3 = four_subdivide_all(&cycle(3).unwrap()).unwrap();
        assert_eq!((c3.n(), c3.m()), (15, 15));
        assert_eq!(c3.max_degree(), 2);
        assert!(c3.is_connected());
        let p3 = four_subdivide_all(&path(3)).unwrap();
        assert_eq!((p3.n(), p3.m()), (11, 10));
        assert!(four_subdivide_all(&path(2)).is_err());
    }

    #[test]
    fn roles_follow_the_path() {
        let out = four_subdivide_gadget(&path(3)).unwrap();
        let s1 = out.vertex("s1[0-1]").unwrap();
        let s4 = out.vertex("s4[0-1]").unwrap();
        assert!(out.graph.has_edge(out.vertex("v0").unwrap(), s1));
        assert!(out.graph.has_edge(s4, out.vertex("v1").unwrap()));
        assert_eq!(out.roles_text().lines().count(), 11);
    }
}
