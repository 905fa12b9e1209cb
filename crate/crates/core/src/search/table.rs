//! Search over transition-table cells.
//!
//! Pairs are simulated in order. Whenever a word reaches a cell that has no
//! successor yet, the search branches on that cell; when a word ends, the
//! output of its final state is bound (first visit) or checked (later visits).

use crate::error::Result;
use crate::search::{conclude, validate_n, Budget, Interrupted, SearchConfig, SearchOutcome};
use crate::task::TaskSpec;
use crate::transducer::{FillPolicy, Transducer, INITIAL};

const NONE: u32 = u32::MAX;

struct TableSearch<'a> {
    n: u32,
    k: usize,
    words: Vec<(&'a [usize], u32)>,
    delta: Vec<u32>,
    omega: Vec<u32>,
    /// Output bindings made so far, for undo.
    omega_trail: Vec<usize>,
    max_used: u32,
    budget: Budget,
}

impl TableSearch<'_> {
    /// Continues simulation from `state` at `pos` of pair `pair`.
    fn solve(&mut self, mut pair: usize, mut pos: usize, mut state: u32) -> Result<bool, Interrupted> {
        loop {
            let Some(&(word, out)) = self.words.get(pair) else {
                return Ok(true);
            };
            if pos == word.len() {
                let bound = self.omega[state as usize];
                if bound == NONE {
                    self.omega[state as usize] = out;
                    self.omega_trail.push(state as usize);
                } else if bound != out {
                    return Ok(false);
                }
                pair += 1;
                pos = 0;
                state = INITIAL as u32;
                continue;
            }
            let cell = state as usize * self.k + word[pos];
            let next = self.delta[cell];
            if next != NONE {
                state = next;
                pos += 1;
                continue;
            }
            return self.branch(cell, pair, pos + 1);
        }
    }

    fn branch(&mut self, cell: usize, pair: usize, pos: usize) -> Result<bool, Interrupted> {
        let saved_max = self.max_used;
        let mark = self.omega_trail.len();
        let hi = (saved_max + 1).min(self.n - 1);
        for cand in 0..=hi {
            self.budget.tick()?;
            self.delta[cell] = cand;
            self.max_used = saved_max.max(cand);
            if self.solve(pair, pos, cand)? {
                return Ok(true);
            }
            for q in self.omega_trail.drain(mark..) {
                self.omega[q] = NONE;
            }
            self.budget.stats.backtracks += 1;
        }
        self.delta[cell] = NONE;
        self.max_used = saved_max;
        Ok(false)
    }

    fn into_transducer(self, task: &TaskSpec) -> Transducer {
        let conv = |v: u32| (v != NONE).then_some(v as usize);
        let t = Transducer::from_tables(
            task.inputs().clone(),
            task.outputs().clone(),
            self.delta.iter().copied().map(conv).collect(),
            self.omega.iter().copied().map(conv).collect(),
        )
        .expect("search tables are in range");
        t.totalize(FillPolicy::SelfLoop)
    }
}

/// Searches for a total `n`-state transducer verifying `task`.
///
/// Returns a witness or an exhaustiveness certificate; running out of budget
/// is reported as [`crate::Error::BudgetExhausted`], never as unsat.
pub fn synthesize_at(task: &TaskSpec, n: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    validate_n(n)?;
    let k = task.inputs().len();
    let words = cfg
        .ordered_pairs(task)
        .into_iter()
        .map(|p| (p.word.as_slice(), p.output as u32))
        .collect();
    let mut search = TableSearch {
        n: n as u32,
        k,
        words,
        delta: vec![NONE; n * k],
        omega: vec![NONE; n],
        omega_trail: Vec::new(),
        max_used: 0,
        budget: Budget::new(cfg),
    };
    let found = search.solve(0, 0, INITIAL as u32);
    let found = match found {
        Ok(true) => {
            let budget = std::mem::replace(&mut search.budget, Budget::new(cfg));
            let t = search.into_transducer(task);
            return conclude(task, n, budget, Ok(Some(t)));
        }
        Ok(false) => Ok(None),
        Err(e) => Err(e),
    };
    conclude(task, n, search.budget, found)
}
