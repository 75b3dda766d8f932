//! Monte Carlo sweeps over `G(n, p)` cells.
//!
//! Every cell `alpha` maps to `p = n^(alpha - 1)`. Trial `t` of cell `c`
//! draws its graph and strategies from `substream_path(seed, [c, t])`, so
//! all values of `k` in a trial share the graph, the cop permutation and
//! the robber's randomness. Results come back in `(cell, trial, k)` order
//! whatever the thread count.

use std::collections::BTreeMap;
use std::time::Instant;

use containment_core::game::CopStrategy;
use containment_core::rng::{substream, substream_path};
use containment_core::strategies::{CopSpec, Cops, Robber, RobberSpec, TrapStatus};
use containment_core::{gen_gnp, play, GnpParams, Graph, Outcome};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::SweepSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RecordOutcome {
    CopWin,
    RobberSurvived,
    TrapFailed,
    #[serde(rename = "TrapFailed-Auxiliary")]
    TrapFailedAuxiliary,
    #[serde(rename = "SafetyLost-then-CopWin")]
    SafetyLostThenCopWin,
    #[serde(rename = "SafetyLost-then-Survived")]
    SafetyLostThenSurvived,
    /// The trial could not be played; `note` says why.
    Error,
}

impl RecordOutcome {
    pub fn is_cop_win(self) -> bool {
        matches!(self, RecordOutcome::CopWin | RecordOutcome::SafetyLostThenCopWin)
    }
}

/// One game of a sweep; field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub p: f64,
    pub alpha: f64,
    pub trial: usize,
    pub seed: u64,
    pub cop_strategy: String,
    pub robber_strategy: String,
    pub k: usize,
    /// Cops actually on the board (team plus any auxiliary pool).
    pub cops_total: usize,
    pub outcome: RecordOutcome,
    pub rounds: u32,
    pub wall_time_ms: Option<u64>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub alpha: f64,
    pub p: f64,
    pub k: usize,
    pub trials: usize,
    pub cop_wins: usize,
    pub win_rate: f64,
    /// Smallest `k` of the cell whose win rate reaches the threshold.
    pub threshold_k: Option<usize>,
}

/// A trial where `k` cops won but more cops did not.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairedViolation {
    pub alpha: f64,
    pub trial: usize,
    pub won_with: usize,
    pub lost_with: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSeed {
    pub cell: usize,
    pub alpha: f64,
    pub p: f64,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub records: Vec<ExperimentRecord>,
    pub summary: Vec<SummaryRow>,
    pub cells: Vec<CellSeed>,
}

pub fn edge_probability(n: usize, alpha: f64) -> f64 {
    (n as f64).powf(alpha - 1.0).clamp(0.0, 1.0)
}

/// `alpha = ln(np) / ln n`, recomputed from `n` and `p`.
pub fn alpha_of(n: usize, p: f64) -> f64 {
    let n = n as f64;
    (n * p).ln() / n.ln()
}

fn spec_json<T: Serialize>(spec: &T) -> String {
    serde_json::to_string(spec).expect("strategy specs serialize")
}

/// Plays one game of `cops` against `robber` with a team of `k`.
///
/// A density team of `k` is drawn as a prefix of the trial's edge
/// permutation, so larger teams contain smaller ones.
pub fn play_one(
    g: &Graph,
    cops: &CopSpec,
    robber: &RobberSpec,
    k: usize,
    seed: u64,
    max_rounds: u32,
) -> (RecordOutcome, u32, usize, String) {
    let spec = match cops {
        CopSpec::Density(cfg) => {
            CopSpec::Density(containment_core::strategies::DensityCopConfig { team: Some(k), ..cfg.clone() })
        }
        other => other.clone(),
    };
    let mut c: Cops = match spec.build(g, seed) {
        Ok(c) => c,
        Err(e) => return (RecordOutcome::Error, 0, k, e.to_string()),
    };
    let mut r: Robber = match robber.build(g, seed) {
        Ok(r) => r,
        Err(e) => return (RecordOutcome::Error, 0, k, e.to_string()),
    };
    let total = match &c {
        Cops::Density(d) => d.total(),
        other => other.preferred_cops().unwrap_or(k),
    };
    let trace = match play(g, total, &mut c, &mut r, max_rounds) {
        Ok(t) => t,
        Err(e) => return (RecordOutcome::Error, 0, total, e.to_string()),
    };
    let won = trace.outcome == Outcome::CopWin;
    let mut note = String::new();
    let mut outcome = if won { RecordOutcome::CopWin } else { RecordOutcome::RobberSurvived };
    if let Some(d) = c.as_density() {
        if !won {
            match d.status() {
                TrapStatus::TrapFailed => outcome = RecordOutcome::TrapFailed,
                TrapStatus::AuxiliaryShort => outcome = RecordOutcome::TrapFailedAuxiliary,
                _ => {}
            }
        }
        if d.q_capped() {
            note = "q capped at 1".into();
        }
    }
    if let Some(e) = r.as_evasion() {
        if e.safety_lost() > 0 {
            outcome = if won { RecordOutcome::SafetyLostThenCopWin } else { RecordOutcome::SafetyLostThenSurvived };
        }
    }
    (outcome, trace.rounds, total, note)
}

fn run_trial(spec: &SweepSpec, cell: usize, alpha: f64, trial: usize) -> Vec<ExperimentRecord> {
    let n = spec.n;
    let p = edge_probability(n, alpha);
    let seed = substream_path(spec.seed, &[cell as u64, trial as u64]);
    let cop_json = spec_json(&spec.cops);
    let robber_json = spec_json(&spec.robber);
    let base = |k: usize| ExperimentRecord {
        n,
        p,
        alpha: alpha_of(n, p),
        trial,
        seed,
        cop_strategy: cop_json.clone(),
        robber_strategy: robber_json.clone(),
        k,
        cops_total: k,
        outcome: RecordOutcome::Error,
        rounds: 0,
        wall_time_ms: None,
        note: String::new(),
    };
    let g = match GnpParams::new(n, p, substream(seed, 0)) {
        Ok(params) => gen_gnp(&params),
        Err(e) => return vec![ExperimentRecord { note: e.to_string(), ..base(0) }],
    };
    let strategy_seed = substream(seed, 1);
    spec.k
        .values(n, p, g.m())
        .into_iter()
        .map(|k| {
            let started = Instant::now();
            let (outcome, rounds, total, note) =
                play_one(&g, &spec.cops, &spec.robber, k, strategy_seed, spec.max_rounds);
            let wall = spec.wall_time.then(|| started.elapsed().as_millis() as u64);
            ExperimentRecord { cops_total: total, outcome, rounds, wall_time_ms: wall, note, ..base(k) }
        })
        .collect()
}

pub fn run_sweep(spec: &SweepSpec) -> SweepResult {
    let jobs: Vec<(usize, f64, usize)> =
        spec.alphas.iter().enumerate().flat_map(|(c, &a)| (0..spec.trials).map(move |t| (c, a, t))).collect();
    let records: Vec<ExperimentRecord> =
        jobs.par_iter().map(|&(c, a, t)| run_trial(spec, c, a, t)).collect::<Vec<_>>().into_iter().flatten().collect();
    let cells = spec
        .alphas
        .iter()
        .enumerate()
        .map(|(cell, &alpha)| CellSeed { cell, alpha, p: edge_probability(spec.n, alpha) })
        .collect();
    let summary = summarize(spec, &records);
    SweepResult { records, summary, cells }
}

pub fn summarize(spec: &SweepSpec, records: &[ExperimentRecord]) -> Vec<SummaryRow> {
    let mut out = Vec::new();
    for &alpha in &spec.alphas {
        let p = edge_probability(spec.n, alpha);
        let mut by_k: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for r in records.iter().filter(|r| r.p == p && r.outcome != RecordOutcome::Error) {
            let e = by_k.entry(r.k).or_default();
            e.0 += 1;
            e.1 += r.outcome.is_cop_win() as usize;
        }
        let rate = |(t, w): (usize, usize)| w as f64 / t as f64;
        let threshold_k = by_k.iter().find(|(_, &tw)| rate(tw) >= spec.threshold).map(|(&k, _)| k);
        for (k, (trials, wins)) in by_k {
            out.push(SummaryRow {
                n: spec.n,
                alpha,
                p,
                k,
                trials,
                cop_wins: wins,
                win_rate: rate((trials, wins)),
                threshold_k,
            });
        }
    }
    out
}

/// Trials where a team of `k` won but a larger team on the same graph lost.
pub fn paired_violations(records: &[ExperimentRecord]) -> Vec<PairedViolation> {
    let mut groups: BTreeMap<(u64, usize), Vec<&ExperimentRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.outcome != RecordOutcome::Error) {
        groups.entry((r.seed, r.trial)).or_default().push(r);
    }
    let mut out = Vec::new();
    for rs in groups.values_mut() {
        rs.sort_by_key(|r| r.k);
        for (i, a) in rs.iter().enumerate() {
            if !a.outcome.is_cop_win() {
                continue;
            }
            if let Some(b) = rs[i + 1..].iter().find(|b| !b.outcome.is_cop_win()) {
                out.push(PairedViolation { alpha: a.alpha, trial: a.trial, won_with: a.k, lost_with: b.k });
            }
        }
    }
    out
}

fn to_csv<T: Serialize>(rows: &[T]) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(w.into_inner()?)
}

pub fn records_csv(records: &[ExperimentRecord]) -> anyhow::Result<Vec<u8>> {
    to_csv(records)
}

pub fn summary_csv(rows: &[SummaryRow]) -> anyhow::Result<Vec<u8>> {
    to_csv(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::config::{KSchedule, DEFAULT_SEED};
    use containment_core::strategies::StartRule;

    fn spec(cops: CopSpec, k: KSchedule, trials: usize) -> SweepSpec {
        SweepSpec {
            n: 60,
            alphas: vec![0.5],
            trials,
            k,
            cops,
            robber: RobberSpec::GreedyRobber { start: StartRule::Farthest },
            seed: DEFAULT_SEED,
            max_rounds: 100,
            threshold: 0.5,
            wall_time: false,
        }
    }

    #[test]
    fn everywhere_with_m_cops_wins_at_once() {
        let s = spec(CopSpec::Everywhere {}, KSchedule::EdgeCount, 1);
        let res = run_sweep(&s);
        assert_eq!(res.records.len(), 1);
        let r = &res.records[0];
        assert_eq!((r.outcome, r.rounds), (RecordOutcome::CopWin, 0));
        assert!((r.alpha - 0.5).abs() < 1e-9);
    }

    #[test]
    fn sweep_is_reproducible_and_ordered() {
        let s = spec(CopSpec::RandomCops {}, KSchedule::Explicit { values: vec![1, 4, 16] }, 4);
        let a = records_csv(&run_sweep(&s).records).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| records_csv(&run_sweep(&s).records).unwrap());
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(
            "n,p,alpha,trial,seed,cop_strategy,robber_strategy,k,cops_total,outcome,rounds,wall_time_ms,note\n"
        ));
        let ks: Vec<usize> = run_sweep(&s).records.iter().map(|r| r.k).collect();
        assert_eq!(&ks[..6], &[1, 4, 16, 1, 4, 16]);
    }

    #[test]
    fn violations_are_detected() {
        let mk = |k, outcome| ExperimentRecord {
            n: 1,
            p: 0.0,
            alpha: 0.0,
            trial: 0,
            seed: 1,
            cop_strategy: String::new(),
            robber_strategy: String::new(),
            k,
            cops_total: k,
            outcome,
            rounds: 0,
            wall_time_ms: None,
            note: String::new(),
        };
        let rs =
            vec![mk(1, RecordOutcome::RobberSurvived), mk(2, RecordOutcome::CopWin), mk(3, RecordOutcome::TrapFailed)];
        let v = paired_violations(&rs);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].won_with, v[0].lost_with), (2, 3));
    }
}
