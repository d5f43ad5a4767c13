//! Randomised checks of the structural facts the solvers and gadgets rely on.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::Budget;
use crate::error::{Error, Result};
use crate::gadgets::{build_2p4_gadget, build_even_ds_gadget, four_subdivide_all, CnfFormula, Literal, Promise};
use crate::generators::gnp;
use crate::graph::Graph;
use crate::oracle::{
    ct_gamma_t, decide_by_definition, gamma, gamma_t_with_budget, has_min_tds_with_p3_budgeted, tds_within,
    CtResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// One contraction suffices iff some minimum total dominating set contains a `P3`.
    ContractionCriterion,
    /// The Even Dominating Set gadget has total domination number `min(gamma, 2 ell)`.
    EvenDsDomination,
    /// 4-subdividing every edge adds exactly `2m` to the total domination number.
    SubdivisionShift,
    /// At most three contractions are ever needed once `gamma_t >= 3`.
    ContractionBound,
    /// The 3-SAT gadget has `gamma_t = 2|X|` iff the formula is satisfiable iff it is a no-instance.
    SatGadget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaParams {
    /// Largest graph order (or variable count for formula samples).
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for LemmaParams {
    fn default() -> Self {
        LemmaParams {
            n: 8,
            samples: 200,
            seed: 1,
            budget: Budget(10_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub samples: usize,
    pub agreements: usize,
    /// Samples abandoned because the search budget ran out.
    pub inconclusive: usize,
    /// Edge list (or DIMACS text) of the first sample that disagreed.
    pub counterexample: Option<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} samples={} agreements={} inconclusive={}",
            self.samples, self.agreements, self.inconclusive
        )
    }
}

enum Sample {
    Agree,
    Disagree(String),
    Inconclusive,
}

fn settle(r: Result<Sample>) -> Result<Sample> {
    match r {
        Err(Error::BudgetExceeded(_)) => Ok(Sample::Inconclusive),
        other => other,
    }
}

fn random_connected<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let p = rng.gen_range(0.15..0.75);
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A path-like random tree with a couple of chords; domination numbers of 4 or more are common.
fn random_stringy<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let mut g = Graph::new(n);
    for v in 1..n {
        let parent = rng.gen_range(v.saturating_sub(3)..v);
        g.add_edge(parent, v);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b);
        }
    }
    g
}

fn random_formula<R: Rng>(rng: &mut R, vars: usize) -> CnfFormula {
    loop {
        let clauses: Vec<Vec<Literal>> = (0..rng.gen_range(1..=8))
            .map(|_| {
                (0..rng.gen_range(1..=3))
                    .map(|_| Literal {
                        var: rng.gen_range(0..vars),
                        positive: rng.gen_bool(0.5),
                    })
                    .collect()
            })
            .collect();
        let f = CnfFormula::new(vars, clauses).expect("variables in range");
        if (0..vars).all(|x| !f.occurrences(x).is_empty()) {
            return f;
        }
    }
}

fn sample<R: Rng>(lemma: Lemma, rng: &mut R, p: &LemmaParams) -> Result<Sample> {
    let budget = p.budget;
    let verdict = |ok: bool, what: String| if ok { Sample::Agree } else { Sample::Disagree(what) };
    match lemma {
        Lemma::ContractionCriterion => {
            let g = random_connected(rng, 2, p.n.max(2));
            let direct = decide_by_definition(&g)?;
            let criterion = has_min_tds_with_p3_budgeted(&g, budget)?;
            Ok(verdict(direct == criterion, g.to_edge_list()))
        }
        Lemma::EvenDsDomination => {
            let g = loop {
                let g = random_stringy(rng, 8, p.n.max(10));
                if gamma(&g) >= 4 {
                    break g;
                }
            };
            let ell = rng.gen_range(1..=2);
            let out = build_even_ds_gadget(&g, ell, Promise::Check)?;
            let expected = gamma(&g).min(2 * ell);
            let got = gamma_t_with_budget(&out.graph, budget)?;
            Ok(verdict(got == expected, g.to_edge_list()))
        }
        Lemma::SubdivisionShift => {
            let g = random_connected(rng, 3, p.n.max(3));
            let h = four_subdivide_all(&g)?;
            let shift = gamma_t_with_budget(&h, budget)? == gamma_t_with_budget(&g, budget)? + 2 * g.m();
            let same = has_min_tds_with_p3_budgeted(&g, budget)? == has_min_tds_with_p3_budgeted(&h, budget)?;
            Ok(verdict(shift && same, g.to_edge_list()))
        }
        Lemma::ContractionBound => {
            let g = loop {
                let g = random_connected(rng, 3, p.n.max(5));
                if gamma_t_with_budget(&g, budget)? >= 3 {
                    break g;
                }
            };
            let ok = matches!(ct_gamma_t(&g, 3)?, CtResult::Contractions(1..=3));
            Ok(verdict(ok, g.to_edge_list()))
        }
        Lemma::SatGadget => {
            let vars = rng.gen_range(1..=p.n.clamp(1, 4));
            let f = random_formula(rng, vars);
            let sat = f.brute_force_satisfiable().is_some();
            let out = build_2p4_gadget(&f)?;
            let tight = tds_within(&out.graph, 2 * vars, budget)?.is_some();
            let yes = has_min_tds_with_p3_budgeted(&out.graph, budget)?;
            Ok(verdict(tight == sat && yes != sat, f.to_dimacs()))
        }
    }
}

/// Draws `params.samples` random instances and checks `lemma` on each.
pub fn check_lemma(lemma: Lemma, params: &LemmaParams) -> Result<LemmaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut report = LemmaReport {
        lemma,
        samples: params.samples,
        agreements: 0,
        inconclusive: 0,
        counterexample: None,
    };
    for _ in 0..params.samples {
        match settle(sample(lemma, &mut rng, params))? {
            Sample::Agree => report.agreements += 1,
            Sample::Inconclusive => report.inconclusive += 1,
            Sample::Disagree(text) => {
                report.counterexample.get_or_insert(text);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_lemmas_hold_on_small_samples() {
        let params = LemmaParams {
            n: 6,
            samples: 15,
            seed: 3,
            budget: Budget::UNLIMITED,
        };
        for lemma in [
            Lemma::ContractionCriterion,
            Lemma::EvenDsDomination,
            Lemma::SubdivisionShift,
            Lemma::ContractionBound,
            Lemma::SatGadget,
        ] {
            let r = check_lemma(lemma, &params).unwrap();
            assert!(r.passed(), "{lemma:?}: {r} {:?}", r.counterexample);
            assert_eq!(r.agreements, 15);
        }
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let params = LemmaParams {
            n: 8,
            samples: 5,
            seed: 1,
            budget: Budget(1),
        };
        let r = check_lemma(Lemma::SubdivisionShift, &params).unwrap();
        assert!(r.passed());
        assert_eq!(r.inconclusive + r.agreements, 5);
        assert!(r.inconclusive > 0);
    }
}
