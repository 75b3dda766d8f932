//! Instance checks for properties that random graphs have with high
//! probability: ball growth, few back edges from one layer to the previous
//! one, and few short paths between any two vertices.
//!
//! These measure one concrete graph; they prove nothing about the model.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::neighborhood::{layers, path_counts_from};
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypicalConfig {
    /// Expected average degree `p (n - 1)`.
    pub d: f64,
    /// Radius for the ball-growth check.
    pub r: usize,
    pub sample: usize,
    pub seed: u64,
    /// Accepted range for `|N_r[v]| / min(d^r, n)`.
    pub band: (f64, f64),
    /// Share of sampled vertices that must fall inside `band`.
    pub min_fraction: f64,
    /// Longest path length to check; defaults to the largest `l < 1/alpha`.
    pub max_path_len: Option<usize>,
}

impl TypicalConfig {
    pub fn new(d: f64, r: usize, sample: usize, seed: u64) -> Self {
        TypicalConfig { d, r, sample, seed, band: (0.5, 1.5), min_fraction: 0.95, max_path_len: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypicalError {
    #[error("radius must be at least 1")]
    Radius,
    #[error("sample size {sample} must be between 1 and n = {n}")]
    Sample { sample: usize, n: usize },
    #[error("expected degree must be larger than 1 and below n")]
    Degree,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionCheck {
    pub r: usize,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub within_band: usize,
    pub fraction: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackDegreeCheck {
    /// Largest `r` with `d^r <= sqrt(n ln n)`.
    pub r: usize,
    pub cap: f64,
    pub max: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathCheck {
    pub len: usize,
    /// `3 / (1 - len * alpha)`.
    pub ceiling: f64,
    pub max: u64,
    pub pairs: usize,
    pub violations: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypicalReport {
    pub n: usize,
    pub d: f64,
    pub alpha: f64,
    pub sampled: Vec<Vertex>,
    pub expansion: ExpansionCheck,
    pub back_degree: BackDegreeCheck,
    pub paths: Vec<PathCheck>,
    pub passed: bool,
}

/// Measures the three properties on `sample` seeded vertices of `g`.
pub fn verify_typical_properties(g: &Graph, cfg: &TypicalConfig) -> Result<TypicalReport, TypicalError> {
    let n = g.n();
    if cfg.r == 0 {
        return Err(TypicalError::Radius);
    }
    if cfg.sample == 0 || cfg.sample > n {
        return Err(TypicalError::Sample { sample: cfg.sample, n });
    }
    if !(cfg.d > 1.0 && cfg.d < n as f64) {
        return Err(TypicalError::Degree);
    }
    let nf = n as f64;
    let d = cfg.d;
    let alpha = libm::log(d) / libm::log(nf);

    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng::stream(cfg.seed));
    let mut sampled: Vec<Vertex> = order[..cfg.sample].to_vec();
    sampled.sort_unstable();

    let log_n = libm::log(nf);
    let mut r_back = 0;
    while libm::pow(d, (r_back + 1) as f64) <= libm::sqrt(nf * log_n) {
        r_back += 1;
    }
    let r_back = r_back.max(1);
    let cap = if d <= libm::pow(nf, 0.49) { 250.0 } else { 3.0 * log_n / libm::log(log_n) };

    let ell = {
        let mut l = libm::floor(1.0 / alpha) as usize;
        if l as f64 >= 1.0 / alpha {
            l -= 1;
        }
        l
    };
    let max_len = cfg.max_path_len.unwrap_or(ell);
    let mut paths: Vec<PathCheck> = (2..=max_len)
        .map(|i| PathCheck {
            len: i,
            ceiling: if (i as f64) * alpha < 1.0 { 3.0 / (1.0 - i as f64 * alpha) } else { f64::INFINITY },
            max: 0,
            pairs: 0,
            violations: 0,
            passed: true,
        })
        .collect();

    let target = libm::fmin(libm::pow(d, cfg.r as f64), nf);
    let (mut lo, mut hi, mut within) = (f64::INFINITY, 0.0f64, 0usize);
    let mut back_max = 0;
    let depth = cfg.r.max(r_back + 1).max(max_len);
    for &v in &sampled {
        let lay = layers(g, v, depth).expect("sampled vertex in range");
        let ratio = lay.ball_size(cfg.r) as f64 / target;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
        if ratio >= cfg.band.0 && ratio <= cfg.band.1 {
            within += 1;
        }

        let mut in_prev = alloc::vec![false; n];
        for &w in lay.layer(r_back) {
            in_prev[w] = true;
        }
        for &w in lay.layer(r_back + 1) {
            let b = g.neighbors(w).filter(|&x| in_prev[x]).count();
            back_max = back_max.max(b);
        }

        for check in &mut paths {
            let counts = path_counts_from(g, v, check.len);
            for w in lay.ball(check.len) {
                let p = counts.get(&w).copied().unwrap_or(0);
                check.pairs += 1;
                check.max = check.max.max(p);
                if p as f64 > check.ceiling {
                    check.violations += 1;
                }
            }
        }
    }
    for check in &mut paths {
        check.passed = check.violations == 0;
    }
    let fraction = within as f64 / sampled.len() as f64;
    let expansion = ExpansionCheck {
        r: cfg.r,
        min_ratio: lo,
        max_ratio: hi,
        within_band: within,
        fraction,
        passed: fraction >= cfg.min_fraction,
    };
    let back_degree = BackDegreeCheck { r: r_back, cap, max: back_max, passed: back_max as f64 <= cap };
    let passed = expansion.passed && back_degree.passed && paths.iter().all(|p| p.passed);
    Ok(TypicalReport { n, d, alpha, sampled, expansion, back_degree, paths, passed })
}
