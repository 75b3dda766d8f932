//! TOML experiment configs with line-precise validation errors.

use containment_core::strategies::DensityCopConfig;
use containment_core::strategies::{CopSpec, EvasionConfig, RobberSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use toml::Spanned;

/// Seed used whenever a config or flag does not give one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn at<T>(text: &str, s: &Spanned<T>, message: impl Into<String>) -> ConfigError {
    let (line, column) = position(text, s.span().start);
    ConfigError { line, column, message: message.into() }
}

fn from_toml_error(text: &str, e: toml::de::Error) -> ConfigError {
    let (line, column) = e.span().map_or((1, 1), |s| position(text, s.start));
    ConfigError { line, column, message: e.message().to_string() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaCase {
    /// `d^{j+1}`.
    DegreePower,
    /// `n / d^{j-1}`.
    OrderOverDegree,
}

/// Which cop counts to play in each cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KSchedule {
    Explicit {
        values: Vec<usize>,
    },
    /// `max(1, round(multiplier * base))` for each multiplier, with the base
    /// taken from the cell's expected degree `d = p (n - 1)`.
    Formula {
        case: FormulaCase,
        j: usize,
        multipliers: Vec<f64>,
    },
    /// One cop per edge of the sampled graph.
    EdgeCount,
}

impl KSchedule {
    pub fn values(&self, n: usize, p: f64, m: usize) -> Vec<usize> {
        let mut out: Vec<usize> = match self {
            KSchedule::Explicit { values } => values.clone(),
            KSchedule::Formula { case, j, multipliers } => {
                let d = p * (n as f64 - 1.0);
                let base = match case {
                    FormulaCase::DegreePower => d.powi(*j as i32 + 1),
                    FormulaCase::OrderOverDegree => n as f64 / d.powi(*j as i32 - 1),
                };
                multipliers.iter().map(|c| ((c * base).round() as usize).max(1)).collect()
            }
            KSchedule::EdgeCount => vec![m.max(1)],
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n: usize,
    pub alphas: Vec<f64>,
    pub trials: usize,
    pub k: KSchedule,
    pub cops: CopSpec,
    pub robber: RobberSpec,
    pub seed: u64,
    pub max_rounds: u32,
    /// Win rate that defines the empirical threshold in the summary.
    pub threshold: f64,
    /// Record wall time per game (makes the records non-reproducible).
    pub wall_time: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    n: Spanned<usize>,
    alphas: Spanned<Vec<f64>>,
    trials: Spanned<usize>,
    k: Spanned<KSchedule>,
    cops: Spanned<CopSpec>,
    robber: Spanned<RobberSpec>,
    seed: Option<u64>,
    max_rounds: Option<Spanned<u32>>,
    threshold: Option<Spanned<f64>>,
    #[serde(default)]
    wall_time: bool,
}

fn check_cops(text: &str, cops: &Spanned<CopSpec>) -> Result<(), ConfigError> {
    if let CopSpec::Density(cfg) = cops.get_ref() {
        cfg.validate().map_err(|e| at(text, cops, e.to_string()))?;
    }
    Ok(())
}

fn check_robber(text: &str, robber: &Spanned<RobberSpec>) -> Result<(), ConfigError> {
    if let RobberSpec::Evasion(cfg) = robber.get_ref() {
        if cfg.j == 0 {
            return Err(at(text, robber, "evasion j must be at least 1"));
        }
    }
    Ok(())
}

pub fn parse_sweep(text: &str) -> Result<SweepSpec, ConfigError> {
    let f: SweepFile = toml::from_str(text).map_err(|e| from_toml_error(text, e))?;
    if *f.n.get_ref() < 2 {
        return Err(at(text, &f.n, "n must be at least 2"));
    }
    let alphas = f.alphas.get_ref();
    if alphas.is_empty() {
        return Err(at(text, &f.alphas, "alphas must not be empty"));
    }
    if let Some(a) = alphas.iter().find(|a| !(**a > 0.0 && **a < 1.0)) {
        return Err(at(text, &f.alphas, format!("alpha {a} outside (0, 1)")));
    }
    if *f.trials.get_ref() == 0 {
        return Err(at(text, &f.trials, "trials must be at least 1"));
    }
    match f.k.get_ref() {
        KSchedule::Explicit { values } if values.is_empty() || values.contains(&0) => {
            return Err(at(text, &f.k, "explicit k values must be non-empty and positive"));
        }
        KSchedule::Formula { j, multipliers, .. }
            if *j == 0 || multipliers.is_empty() || multipliers.iter().any(|c| !c.is_finite() || *c <= 0.0) =>
        {
            return Err(at(text, &f.k, "formula needs j >= 1 and positive multipliers"));
        }
        _ => {}
    }
    check_cops(text, &f.cops)?;
    check_robber(text, &f.robber)?;
    let max_rounds = match &f.max_rounds {
        Some(s) if *s.get_ref() == 0 => return Err(at(text, s, "max_rounds must be at least 1")),
        Some(s) => *s.get_ref(),
        None => 1000,
    };
    let threshold = match &f.threshold {
        Some(s) if !(*s.get_ref() > 0.0 && *s.get_ref() <= 1.0) => {
            return Err(at(text, s, "threshold must lie in (0, 1]"))
        }
        Some(s) => *s.get_ref(),
        None => 0.5,
    };
    Ok(SweepSpec {
        n: f.n.into_inner(),
        alphas: f.alphas.into_inner(),
        trials: f.trials.into_inner(),
        k: f.k.into_inner(),
        cops: f.cops.into_inner(),
        robber: f.robber.into_inner(),
        seed: f.seed.unwrap_or(DEFAULT_SEED),
        max_rounds,
        threshold,
        wall_time: f.wall_time,
    })
}

/// Strategy-bound settings for random audits beyond exact reach.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BoundSpec {
    /// Team sizes to try, ascending.
    pub ks: Vec<usize>,
    pub density: DensityCopConfig,
    pub evasion: EvasionConfig,
    pub max_rounds: u32,
}

impl Default for BoundSpec {
    fn default() -> Self {
        BoundSpec {
            ks: vec![1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096],
            density: DensityCopConfig::default(),
            evasion: EvasionConfig::default(),
            max_rounds: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomAuditSpec {
    pub n: usize,
    pub ps: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub budget: u64,
    pub bound: BoundSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RandomAuditFile {
    n: Spanned<usize>,
    ps: Spanned<Vec<f64>>,
    trials: Spanned<usize>,
    seed: Option<u64>,
    budget: Option<u64>,
    bound: Option<Spanned<BoundSpec>>,
}

pub fn parse_random_audit(text: &str) -> Result<RandomAuditSpec, ConfigError> {
    let f: RandomAuditFile = toml::from_str(text).map_err(|e| from_toml_error(text, e))?;
    if *f.n.get_ref() == 0 {
        return Err(at(text, &f.n, "n must be at least 1"));
    }
    if f.ps.get_ref().is_empty() {
        return Err(at(text, &f.ps, "ps must not be empty"));
    }
    if let Some(p) = f.ps.get_ref().iter().find(|p| !(**p >= 0.0 && **p <= 1.0)) {
        return Err(at(text, &f.ps, format!("p = {p} outside [0, 1]")));
    }
    if *f.trials.get_ref() == 0 {
        return Err(at(text, &f.trials, "trials must be at least 1"));
    }
    let bound = match f.bound {
        Some(b) => {
            if b.get_ref().ks.is_empty() || b.get_ref().ks.contains(&0) {
                return Err(at(text, &b, "bound.ks must be non-empty and positive"));
            }
            b.get_ref().density.validate().map_err(|e| at(text, &b, e.to_string()))?;
            let mut b = b.into_inner();
            b.ks.sort_unstable();
            b.ks.dedup();
            b
        }
        None => BoundSpec::default(),
    };
    Ok(RandomAuditSpec {
        n: f.n.into_inner(),
        ps: f.ps.into_inner(),
        trials: f.trials.into_inner(),
        seed: f.seed.unwrap_or(DEFAULT_SEED),
        budget: f.budget.unwrap_or(containment_core::solver::DEFAULT_STATE_BUDGET),
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
n = 50
alphas = [0.5]
trials = 2
k = { kind = "explicit", values = [3, 1] }
cops = { strategy = "random_cops", params = {} }
robber = { strategy = "greedy_robber", params = {} }
"#;

    #[test]
    fn minimal_config_gets_defaults() {
        let s = parse_sweep(MINIMAL).unwrap();
        assert_eq!(s.seed, DEFAULT_SEED);
        assert_eq!(s.max_rounds, 1000);
        assert_eq!(s.k.values(50, 0.1, 10), vec![1, 3]);
    }

    #[test]
    fn zero_trials_points_at_its_line() {
        let text = MINIMAL.replace("trials = 2", "trials = 0");
        let e = parse_sweep(&text).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("trials"));
    }

    #[test]
    fn bad_alpha_and_syntax() {
        let e = parse_sweep(&MINIMAL.replace("[0.5]", "[0.5, 1.5]")).unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_sweep(&MINIMAL.replace("trials = 2", "trials = ")).unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_sweep(&format!("{MINIMAL}\nbogus = 1\n")).unwrap_err();
        assert!(e.message.contains("bogus"), "{e}");
    }

    #[test]
    fn formula_schedule() {
        let k = KSchedule::Formula { case: FormulaCase::DegreePower, j: 1, multipliers: vec![0.5, 1.0] };
        // d = 0.01 * 999 = 9.99, d^2 = 99.8.
        assert_eq!(k.values(1000, 0.01, 0), vec![50, 100]);
        let k = KSchedule::Formula { case: FormulaCase::OrderOverDegree, j: 2, multipliers: vec![1.0] };
        assert_eq!(k.values(1000, 0.01, 0), vec![100]);
    }

    #[test]
    fn random_audit_config() {
        let s = parse_random_audit("n = 6\nps = [0.5]\ntrials = 3\n").unwrap();
        assert_eq!(s.bound, BoundSpec::default());
        let e = parse_random_audit("n = 6\nps = [0.5]\ntrials = 0\n").unwrap_err();
        assert_eq!(e.line, 3);
    }
}
