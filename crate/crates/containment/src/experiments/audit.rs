//! Audits of `c <= xi <= gamma * Delta` and of `xi <= c * Delta`.

use containment_core::numbers::{numbers_report, NumbersReport};
use containment_core::rng::{substream, substream_path};
use containment_core::strategies::{CopSpec, RobberSpec};
use containment_core::{gen_gnp, GnpParams, Graph, SolveError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::RandomAuditSpec;
use super::sweep::{play_one, RecordOutcome};
use crate::corpus::{self, CorpusError};
use crate::formats::to_graph6;

/// Exact audit row of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub xi: usize,
    pub c: usize,
    pub gamma: usize,
    pub delta: usize,
    pub chain_holds: bool,
    pub conjecture_holds: bool,
    /// `xi == c * Delta`.
    pub conjecture_tight: bool,
    pub degenerate: bool,
}

impl AuditRow {
    fn new(index: usize, g: &Graph, r: &NumbersReport) -> Self {
        AuditRow {
            index,
            graph6: to_graph6(g),
            n: g.n(),
            m: g.m(),
            xi: r.xi,
            c: r.c,
            gamma: r.gamma,
            delta: r.delta,
            chain_holds: r.chain_holds,
            conjecture_holds: r.conjecture_holds,
            conjecture_tight: !r.degenerate && r.xi == r.c * r.delta,
            degenerate: r.degenerate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallAudit {
    pub n_max: usize,
    pub connected_only: bool,
    pub rows: Vec<AuditRow>,
    pub chain_violations: Vec<AuditRow>,
    pub conjecture_violations: Vec<AuditRow>,
    pub conjecture_tight: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum AuditError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("graph {graph6}: {source}")]
    Solve { graph6: String, source: SolveError },
}

/// Exact audit of a list of graphs.
pub fn audit_graphs(graphs: &[Graph], budget: u64) -> Result<Vec<AuditRow>, AuditError> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            numbers_report(g, budget)
                .map(|r| AuditRow::new(i, g, &r))
                .map_err(|source| AuditError::Solve { graph6: to_graph6(g), source })
        })
        .collect()
}

/// Exact audit over the shipped corpus of graphs with `1..=n_max` vertices.
pub fn audit_small_graphs(n_max: usize, connected_only: bool, budget: u64) -> Result<SmallAudit, AuditError> {
    let graphs = if connected_only { corpus::connected_graphs_up_to(n_max)? } else { corpus::all_graphs_up_to(n_max)? };
    Ok(summarize_rows(n_max, connected_only, audit_graphs(&graphs, budget)?))
}

pub fn summarize_rows(n_max: usize, connected_only: bool, rows: Vec<AuditRow>) -> SmallAudit {
    SmallAudit {
        n_max,
        connected_only,
        chain_violations: rows.iter().filter(|r| !r.chain_holds).cloned().collect(),
        conjecture_violations: rows.iter().filter(|r| !r.conjecture_holds).cloned().collect(),
        conjecture_tight: rows.iter().filter(|r| r.conjecture_tight).count(),
        rows,
    }
}

/// One sampled graph of a random audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomRow {
    pub p: f64,
    pub trial: usize,
    pub seed: u64,
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    /// Exact `xi`, when solved.
    pub xi: Option<usize>,
    /// Strategy bracket `[lower, upper]` in bound mode (exact rows repeat `xi`).
    pub xi_lower: usize,
    pub xi_upper: usize,
    pub c: Option<usize>,
    pub gamma: usize,
    pub gamma_exact: bool,
    pub delta: usize,
    /// `None` when the chain cannot be checked (bound mode).
    pub chain_holds: Option<bool>,
    pub conjecture_holds: Option<bool>,
    pub degenerate: bool,
    pub note: String,
}

/// Largest `n` solved exactly by [`audit_random`].
pub const EXACT_MAX_N: usize = 8;

fn exact_row(g: &Graph, p: f64, trial: usize, seed: u64, budget: u64) -> RandomRow {
    let base = RandomRow {
        p,
        trial,
        seed,
        graph6: Some(to_graph6(g)),
        n: g.n(),
        m: g.m(),
        xi: None,
        xi_lower: 0,
        xi_upper: g.m(),
        c: None,
        gamma: 0,
        gamma_exact: false,
        delta: g.max_degree(),
        chain_holds: None,
        conjecture_holds: None,
        degenerate: g.m() == 0,
        note: String::new(),
    };
    match numbers_report(g, budget) {
        Ok(r) => RandomRow {
            xi: Some(r.xi),
            xi_lower: r.xi,
            xi_upper: r.xi,
            c: Some(r.c),
            gamma: r.gamma,
            gamma_exact: r.gamma_exact,
            chain_holds: Some(r.chain_holds),
            conjecture_holds: Some(r.conjecture_holds),
            note: if r.degenerate { "degenerate: no edges".into() } else { String::new() },
            ..base
        },
        Err(e) => RandomRow { note: e.to_string(), ..base },
    }
}

/// Brackets `xi` by strategy play: the upper end is the board size of the
/// smallest density team that beats the evasion robber, the lower end the
/// board size of the largest smaller team the robber survived.
pub fn strategy_bracket(g: &Graph, spec: &RandomAuditSpec, seed: u64) -> (usize, usize, String) {
    let b = &spec.bound;
    let cops = CopSpec::Density(b.density.clone());
    let robber = RobberSpec::Evasion(b.evasion.clone());
    let mut lower = 0;
    let mut upper = g.m();
    let mut note = String::new();
    for &k in &b.ks {
        let (outcome, _, total, why) = play_one(g, &cops, &robber, k, seed, b.max_rounds);
        if outcome == RecordOutcome::Error {
            note = why;
            break;
        }
        if outcome.is_cop_win() {
            upper = upper.min(total);
            break;
        }
        lower = total;
    }
    (lower.min(upper), upper, note)
}

fn bound_row(g: &Graph, spec: &RandomAuditSpec, p: f64, trial: usize, seed: u64) -> RandomRow {
    let dom = containment_core::domination::domination_number(g);
    let degenerate = g.m() == 0;
    let (lower, upper, note) = if degenerate {
        (0, 0, "degenerate: no edges".to_string())
    } else {
        strategy_bracket(g, spec, substream(seed, 1))
    };
    RandomRow {
        p,
        trial,
        seed,
        graph6: None,
        n: g.n(),
        m: g.m(),
        xi: None,
        xi_lower: lower,
        xi_upper: upper,
        c: None,
        gamma: dom.value,
        gamma_exact: dom.mode == containment_core::domination::DominationMode::Exact,
        delta: g.max_degree(),
        chain_holds: None,
        conjecture_holds: None,
        degenerate,
        note,
    }
}

/// Exact rows for `n <= 8`, strategy brackets beyond.
pub fn audit_random(spec: &RandomAuditSpec) -> Vec<RandomRow> {
    let jobs: Vec<(usize, f64, usize)> =
        spec.ps.iter().enumerate().flat_map(|(i, &p)| (0..spec.trials).map(move |t| (i, p, t))).collect();
    jobs.par_iter()
        .map(|&(i, p, t)| {
            let seed = substream_path(spec.seed, &[i as u64, t as u64]);
            let params = match GnpParams::new(spec.n, p, substream(seed, 0)) {
                Ok(params) => params,
                Err(e) => {
                    let mut row = exact_row(&Graph::empty(0), p, t, seed, 0);
                    row.note = e.to_string();
                    return row;
                }
            };
            let g = gen_gnp(&params);
            if spec.n <= EXACT_MAX_N {
                exact_row(&g, p, t, seed, spec.budget)
            } else {
                bound_row(&g, spec, p, t, seed)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use containment_core::solver::DEFAULT_STATE_BUDGET;

    #[test]
    fn nmax_two_is_single_edge() {
        let a = audit_small_graphs(2, true, DEFAULT_STATE_BUDGET).unwrap();
        assert_eq!(a.rows.len(), 2);
        let k2 = a.rows.iter().find(|r| r.n == 2).unwrap();
        assert_eq!((k2.xi, k2.c, k2.gamma, k2.delta), (1, 1, 1, 1));
    }

    #[test]
    fn star_row_is_tight() {
        let rows = audit_graphs(&[Graph::star(3)], DEFAULT_STATE_BUDGET).unwrap();
        assert_eq!((rows[0].xi, rows[0].c, rows[0].delta), (3, 1, 3));
        assert!(rows[0].conjecture_tight && rows[0].conjecture_holds);
    }

    #[test]
    fn edgeless_random_rows_are_degenerate() {
        let spec = RandomAuditSpec {
            n: 6,
            ps: vec![0.0],
            trials: 2,
            seed: 1,
            budget: DEFAULT_STATE_BUDGET,
            bound: Default::default(),
        };
        for row in audit_random(&spec) {
            assert!(row.degenerate);
            assert_eq!(row.xi, Some(0));
        }
    }
}
