//! The four graph numbers compared by the containment bounds:
//! `c(G) <= xi(G) <= gamma(G) * Delta(G)`, and the open question whether
//! `xi(G) <= c(G) * Delta(G)` always holds.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, Domination, DominationMode};
use crate::graph::Graph;
use crate::solver::{self, SolveError, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumbersReport {
    pub xi: usize,
    pub c: usize,
    pub gamma: usize,
    pub delta: usize,
    /// Winning placement for `xi` cops (connected graphs only).
    pub xi_witness: Option<Vec<usize>>,
    /// Winning placement for `c` cops in the vertex game.
    pub c_witness: Option<Vec<usize>>,
    pub gamma_witness: Vec<usize>,
    pub gamma_exact: bool,
    /// `c <= xi <= gamma * delta`.
    pub chain_holds: bool,
    /// `xi <= c * delta`.
    pub conjecture_holds: bool,
    /// Edgeless graph (`xi = 0` by convention; the chain is not meaningful).
    pub degenerate: bool,
}

impl NumbersReport {
    pub fn from_values(xi: usize, c: usize, dom: Domination, delta: usize, m: usize) -> Self {
        let gamma = dom.value;
        let degenerate = m == 0;
        NumbersReport {
            xi,
            c,
            gamma,
            delta,
            xi_witness: None,
            c_witness: None,
            gamma_exact: dom.mode == DominationMode::Exact,
            gamma_witness: dom.witness,
            chain_holds: degenerate || (c <= xi && xi <= gamma * delta),
            conjecture_holds: degenerate || xi <= c * delta,
            degenerate,
        }
    }
}

/// Computes `xi`, `c`, `gamma` and `Delta` exactly.
pub fn numbers_report(g: &Graph, budget: u64) -> Result<NumbersReport, SolveError> {
    let (xi, xi_res) = solver::least_winning(g, Variant::Containment, budget)?;
    let (c, c_res) = solver::least_winning(g, Variant::Classic, budget)?;
    let mut rep = NumbersReport::from_values(xi, c, domination_number(g), g.max_degree(), g.m());
    rep.xi_witness = xi_res.and_then(|r| r.witness);
    rep.c_witness = c_res.and_then(|r| r.witness);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::DEFAULT_STATE_BUDGET as B;

    #[test]
    fn star_and_edge() {
        let r = numbers_report(&Graph::star(3), B).unwrap();
        assert_eq!((r.xi, r.c, r.gamma, r.delta), (3, 1, 1, 3));
        assert!(r.chain_holds && r.conjecture_holds);
        let r = numbers_report(&Graph::path(2), B).unwrap();
        assert_eq!((r.xi, r.c, r.gamma, r.delta), (1, 1, 1, 1));
    }

    #[test]
    fn edgeless_is_degenerate() {
        let r = numbers_report(&Graph::empty(6), B).unwrap();
        assert_eq!(r.xi, 0);
        assert!(r.degenerate);
    }
}
