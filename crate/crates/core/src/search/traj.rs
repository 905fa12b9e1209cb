//! Search over trajectory positions.
//!
//! Every position `t_i` (i >= 1) of every word's trajectory is a variable
//! ranging over states; position 0 is the initial state. Variables are filled
//! pair by pair, position by position. An assignment is consistent when all
//! transitions read off the trajectories form a function and all trajectories
//! ending in one state demand the same output. Entries are reference counted
//! so they can be retracted on backtrack.

use crate::error::Result;
use crate::search::{conclude, validate_n, Budget, SearchConfig, SearchOutcome};
use crate::task::TaskSpec;
use crate::transducer::Transducer;

const NONE: u32 = u32::MAX;

/// Number of trajectory variables: one per symbol over all words.
pub fn trajectory_variable_count(task: &TaskSpec) -> usize {
    task.total_length()
}

#[derive(Clone, Copy)]
struct Var {
    /// Variable holding the previous trajectory position; `None` for the initial state.
    prev: Option<usize>,
    symbol: usize,
    /// Required output if this is the last position of its word.
    output: Option<u32>,
}

#[derive(Clone, Copy)]
struct Entry {
    value: u32,
    refs: u32,
}

const EMPTY: Entry = Entry { value: NONE, refs: 0 };

impl Entry {
    fn admits(&self, v: u32) -> bool {
        self.value == NONE || self.value == v
    }

    fn acquire(&mut self, v: u32) {
        self.value = v;
        self.refs += 1;
    }

    fn release(&mut self) {
        self.refs -= 1;
        if self.refs == 0 {
            self.value = NONE;
        }
    }
}

/// Searches for an `n`-state assignment of all trajectory variables.
///
/// The witness is partial: exactly the transitions and outputs read off the
/// trajectories are defined.
pub fn synthesize_at_traj(task: &TaskSpec, n: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    validate_n(n)?;
    let k = task.inputs().len();
    let mut vars = Vec::with_capacity(task.total_length());
    for pair in cfg.ordered_pairs(task) {
        for (i, &a) in pair.word.iter().enumerate() {
            vars.push(Var {
                prev: (i > 0).then(|| vars.len() - 1),
                symbol: a,
                output: (i + 1 == pair.word.len()).then_some(pair.output as u32),
            });
        }
    }

    let n32 = n as u32;
    let m = vars.len();
    let mut delta = vec![EMPTY; n * k];
    let mut omega = vec![EMPTY; n];
    let mut values = vec![NONE; m];
    let mut next_cand = vec![0u32; m + 1];
    // highest state in use before each level was entered
    let mut max_before = vec![0u32; m + 1];
    let mut budget = Budget::new(cfg);

    let cell_of = |values: &[u32], v: &Var| {
        let prev = v.prev.map_or(0, |p| values[p]);
        prev as usize * k + v.symbol
    };

    let mut level = 0usize;
    let found = 'search: loop {
        if level == m {
            break 'search Ok(true);
        }
        let var = vars[level];
        let cell = cell_of(&values, &var);
        let hi = (max_before[level] + 1).min(n32 - 1);
        let mut chosen = None;
        let mut cand = next_cand[level];
        while cand <= hi {
            if let Err(e) = budget.tick() {
                break 'search Err(e);
            }
            let fits = delta[cell].admits(cand)
                && var.output.is_none_or(|o| omega[cand as usize].admits(o));
            if fits {
                chosen = Some(cand);
                break;
            }
            cand += 1;
        }
        match chosen {
            Some(v) => {
                delta[cell].acquire(v);
                if let Some(o) = var.output {
                    omega[v as usize].acquire(o);
                }
                values[level] = v;
                next_cand[level] = v + 1;
                max_before[level + 1] = max_before[level].max(v);
                next_cand[level + 1] = 0;
                level += 1;
            }
            None => {
                if level == 0 {
                    break 'search Ok(false);
                }
                level -= 1;
                let var = vars[level];
                let v = values[level];
                delta[cell_of(&values, &var)].release();
                if var.output.is_some() {
                    omega[v as usize].release();
                }
                values[level] = NONE;
                budget.stats.backtracks += 1;
            }
        }
    };

    let found = found.map(|sat| {
        sat.then(|| {
            let conv = |e: &Entry| (e.value != NONE).then_some(e.value as usize);
            Transducer::from_tables(
                task.inputs().clone(),
                task.outputs().clone(),
                delta.iter().map(conv).collect(),
                omega.iter().map(conv).collect(),
            )
            .expect("search tables are in range")
        })
    });
    conclude(task, n, budget, found)
}
