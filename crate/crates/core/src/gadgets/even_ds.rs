use super::{Builder, GadgetKind, GadgetOutput};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::gamma;

/// Sources up to this order have their `gamma >= 4` promise checked exactly.
pub const PROMISE_CHECK_LIMIT: usize = 20;

/// How the `gamma(G) >= 4` precondition is established.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Promise {
    /// Compute `gamma(G)`; refuse sources above [`PROMISE_CHECK_LIMIT`] vertices.
    #[default]
    Check,
    Trust,
}

/// Builds `G'` from `(G, 2 * ell)`: vertices `x_1..x_{2ell}` and copies `V0..V_{2ell}` of `V(G)`.
pub fn build_even_ds_gadget(g: &Graph, ell: usize, promise: Promise) -> Result<GadgetOutput> {
    if ell < 1 {
        return Err(Error::InvalidParameter("ell must be at least 1".into()));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma = match promise {
        Promise::Check if g.n() > PROMISE_CHECK_LIMIT => {
            return Err(Error::Precondition(format!(
                "cannot certify gamma >= 4 above {PROMISE_CHECK_LIMIT} vertices; trust the promise explicitly"
            )));
        }
        Promise::Check => {
            let gamma = gamma(g);
            if gamma < 4 {
                return Err(Error::Precondition(format!(
                    "source has domination number {gamma}, expected at least 4"
                )));
            }
            Some(gamma)
        }
        Promise::Trust => None,
    };

    let copies = 2 * ell;
    let x = |i: usize| format!("x_{i}");
    let v = |i: usize, j: usize| format!("V{i}[v{j}]");
    let mut b = Builder::new();
    for i in 1..=copies {
        b.add(x(i));
    }
    for i in 0..=copies {
        for j in 0..g.n() {
            b.add(v(i, j));
        }
    }
    let v0: Vec<String> = (0..g.n()).map(|j| v(0, j)).collect();
    b.clique(&v0);
    for i in 1..=copies {
        for j in 0..g.n() {
            for k in &g.closed_neighbors(j) {
                b.edge(&v(i, j), &v(0, k));
            }
        }
    }
    for i in 1..=copies {
        for j in 0..g.n() {
            b.edge(&x(i), &v(0, j));
            b.edge(&x(i), &v(i, j));
        }
        if i % 2 == 1 {
            b.edge(&x(i), &x(i + 1));
        }
    }
    Ok(b.finish(GadgetKind::EvenDs {
        ell,
        source: g.clone(),
        gamma,
    }))
}
