//! Exact synthesis of state-minimal transducers.
//!
//! Two engines share the same contract: [`table::synthesize_at`] branches on
//! transition-table cells, [`traj::synthesize_at_traj`] on trajectory
//! positions. Both restrict new successors to `0..=max_used + 1`, so every
//! solution is visited up to a relabeling that fixes the initial state, and an
//! exhausted search is a proof that no solution with `n` states exists.

pub mod table;
pub mod traj;

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::task::{Pair, TaskSpec};
use crate::transducer::Transducer;

pub use table::synthesize_at;
pub use traj::{synthesize_at_traj, trajectory_variable_count};

/// Order in which task pairs are fed to the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordOrder {
    #[default]
    AsGiven,
    ShortestFirst,
    LongestFirst,
}

impl std::str::FromStr for WordOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-given" => Ok(WordOrder::AsGiven),
            "shortest-first" => Ok(WordOrder::ShortestFirst),
            "longest-first" => Ok(WordOrder::LongestFirst),
            other => Err(Error::InvalidParameter(format!("unknown word order {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_states: usize,
    pub word_order: WordOrder,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_states: 16,
            word_order: WordOrder::AsGiven,
            node_budget: None,
            time_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn with_max_states(max_states: usize) -> Self {
        SearchConfig {
            max_states,
            ..Default::default()
        }
    }

    /// Task pairs in the configured order. Sorting is stable.
    pub fn ordered_pairs<'a>(&self, task: &'a TaskSpec) -> Vec<&'a Pair> {
        let mut pairs: Vec<&Pair> = task.pairs().iter().collect();
        match self.word_order {
            WordOrder::AsGiven => {}
            WordOrder::ShortestFirst => pairs.sort_by_key(|p| p.word.len()),
            WordOrder::LongestFirst => pairs.sort_by_key(|p| std::cmp::Reverse(p.word.len())),
        }
        pairs
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidate values tried.
    pub nodes: u64,
    /// Candidate values abandoned after their subtree failed.
    pub backtracks: u64,
    pub elapsed: Duration,
}

/// Certificate that the canonical search space at `n` states was exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unsat {
    pub n: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Witness(Transducer),
    Unsat(Unsat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Transducer> {
        match &self.result {
            SearchResult::Witness(t) => Some(t),
            SearchResult::Unsat(_) => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        self.witness().is_some()
    }
}

/// Which encoding drives the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Table,
    Trajectory,
}

impl Engine {
    pub fn synthesize_at(self, task: &TaskSpec, n: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
        match self {
            Engine::Table => table::synthesize_at(task, n, cfg),
            Engine::Trajectory => traj::synthesize_at_traj(task, n, cfg),
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Engine::Table),
            "trajectory" => Ok(Engine::Trajectory),
            other => Err(Error::InvalidParameter(format!("unknown engine {other:?}"))),
        }
    }
}

/// Result of iterative deepening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimal {
    pub n_min: usize,
    pub transducer: Transducer,
    /// One certificate per state count below `n_min`, ascending.
    pub unsat_trail: Vec<Unsat>,
    pub stats: SearchStats,
}

/// No transducer with fewer states than distinct outputs used can verify the task.
pub fn lower_bound(task: &TaskSpec) -> usize {
    task.used_outputs().len().max(1)
}

/// Number of decision variables in the table encoding: one per transition cell
/// plus one output per state.
pub fn variable_count(n: usize, alphabet_size: usize) -> usize {
    n * (alphabet_size + 1)
}

/// `n^(n * alphabet_size) * output_size^n`, the size of the raw table cube.
pub fn search_space_size(n: usize, alphabet_size: usize, output_size: usize) -> BigUint {
    let cells = u32::try_from(n * alphabet_size).expect("exponent fits in u32");
    let states = u32::try_from(n).expect("exponent fits in u32");
    BigUint::from(n).pow(cells) * BigUint::from(output_size).pow(states)
}

/// Probes `lower_bound(task)..=cfg.max_states` in ascending order with the
/// table engine and returns the first witness.
pub fn synthesize_minimal(task: &TaskSpec, cfg: &SearchConfig) -> Result<Minimal> {
    synthesize_minimal_with(Engine::Table, task, cfg)
}

pub fn synthesize_minimal_with(engine: Engine, task: &TaskSpec, cfg: &SearchConfig) -> Result<Minimal> {
    let start = Instant::now();
    let mut trail = Vec::new();
    let mut total = SearchStats::default();
    for n in lower_bound(task)..=cfg.max_states {
        // the time budget covers the whole deepening run
        let mut probe_cfg = cfg.clone();
        if let Some(limit) = cfg.time_budget {
            probe_cfg.time_budget = Some(limit.saturating_sub(start.elapsed()));
        }
        let outcome = engine.synthesize_at(task, n, &probe_cfg)?;
        total.nodes += outcome.stats.nodes;
        total.backtracks += outcome.stats.backtracks;
        match outcome.result {
            SearchResult::Witness(t) => {
                total.elapsed = start.elapsed();
                return Ok(Minimal {
                    n_min: n,
                    transducer: t,
                    unsat_trail: trail,
                    stats: total,
                });
            }
            SearchResult::Unsat(u) => trail.push(u),
        }
    }
    Err(Error::NoSolutionWithin(cfg.max_states))
}

/// Shared node/time accounting for both engines.
pub(crate) struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    pub(crate) start: Instant,
    pub(crate) stats: SearchStats,
}

impl Budget {
    pub(crate) fn new(cfg: &SearchConfig) -> Self {
        let start = Instant::now();
        Budget {
            node_limit: cfg.node_budget,
            deadline: cfg.time_budget.map(|d| start + d),
            start,
            stats: SearchStats::default(),
        }
    }

    /// Counts one node; `Err` once a budget is exhausted.
    #[inline]
    pub(crate) fn tick(&mut self) -> std::result::Result<(), Interrupted> {
        self.stats.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.stats.nodes > limit {
                return Err(Interrupted);
            }
        }
        if let Some(deadline) = self.deadline {
            if self.stats.nodes.is_multiple_of(4096) && Instant::now() >= deadline {
                return Err(Interrupted);
            }
        }
        Ok(())
    }

    pub(crate) fn finish(mut self) -> SearchStats {
        self.stats.elapsed = self.start.elapsed();
        self.stats
    }
}

#[derive(Debug)]
pub(crate) struct Interrupted;

pub(crate) fn validate_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("state count must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Converts a raw search result into an outcome, enforcing soundness.
pub(crate) fn conclude(
    task: &TaskSpec,
    n: usize,
    budget: Budget,
    found: std::result::Result<Option<Transducer>, Interrupted>,
) -> Result<SearchOutcome> {
    let stats = budget.finish();
    match found {
        Err(Interrupted) => Err(Error::BudgetExhausted { n, stats }),
        Ok(Some(t)) => {
            let report = t.verify(task);
            assert!(report.ok, "search produced a non-verifying witness: {:?}", report.failures);
            Ok(SearchOutcome {
                result: SearchResult::Witness(t),
                stats,
            })
        }
        Ok(None) => Ok(SearchOutcome {
            result: SearchResult::Unsat(Unsat {
                n,
                nodes_explored: stats.nodes,
            }),
            stats,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_counts() {
        assert_eq!(variable_count(5, 2), 15);
        assert_eq!(variable_count(1, 1), 2);
        assert_eq!(variable_count(3, 17), 54);
    }

    #[test]
    fn search_space_sizes() {
        let pow = |b: u32, e: u32| BigUint::from(b).pow(e);
        assert_eq!(search_space_size(5, 2, 3), pow(5, 10) * pow(3, 5));
        assert_eq!(search_space_size(5, 2, 2), pow(5, 10) * pow(2, 5));
        assert_eq!(search_space_size(1, 1, 1), BigUint::from(1u32));
    }

    #[test]
    fn lower_bounds() {
        let parity =
            TaskSpec::from_char_pairs(&[("00", "0"), ("01", "1"), ("10", "1"), ("11", "0")]).unwrap();
        assert_eq!(lower_bound(&parity), 2);
        assert_eq!(lower_bound(&TaskSpec::from_char_pairs(&[("0", "r")]).unwrap()), 1);
    }

    #[test]
    fn word_order_is_stable() {
        let task = TaskSpec::from_char_pairs(&[("000", "a"), ("1", "b"), ("01", "a"), ("0", "b")])
            .unwrap();
        let render = |order| {
            let cfg = SearchConfig {
                word_order: order,
                ..Default::default()
            };
            cfg.ordered_pairs(&task)
                .iter()
                .map(|p| task.render_word(&p.word))
                .collect::<Vec<_>>()
        };
        assert_eq!(render(WordOrder::AsGiven), ["000", "1", "01", "0"]);
        assert_eq!(render(WordOrder::ShortestFirst), ["1", "0", "01", "000"]);
        assert_eq!(render(WordOrder::LongestFirst), ["000", "01", "1", "0"]);
    }
}
