//! Single-output transducers: a deterministic automaton whose output for a
//! word is the output of the last state on the word's trajectory.
//!
//! States are dense indices `0..n` with the initial state fixed at `0`.
//! Transition and output tables are partial; `None` marks an undefined entry.

use crate::error::{Error, Result};
use crate::symbol::{Alphabet, Symbol};
use crate::task::TaskSpec;

pub type State = usize;

/// The initial state of every transducer.
pub const INITIAL: State = 0;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transducer {
    n_states: usize,
    inputs: Alphabet,
    outputs: Alphabet,
    /// Row-major `n_states x inputs.len()`.
    delta: Vec<Option<State>>,
    omega: Vec<Option<usize>>,
}

/// State sequence visited while reading a word, starting at the initial state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<State>,
}

impl Trajectory {
    pub fn last(&self) -> State {
        *self.states.last().expect("trajectory is never empty")
    }
}

/// How [`Transducer::totalize`] fills undefined transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillPolicy {
    /// `(q, a) -> q`
    #[default]
    SelfLoop,
    /// `(q, a) -> 0`
    Initial,
    /// `(q, a) -> s` for a fixed state `s`.
    Constant(State),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    WrongOutput { expected: Symbol, actual: Symbol },
    UndefinedTransition { state: State, position: usize },
    UndefinedOutput { state: State },
    UnknownSymbol(Symbol),
}

/// A task pair the transducer does not reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub pair_index: usize,
    pub word: String,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
}

impl Transducer {
    /// A transducer with every transition and output undefined.
    pub fn empty(n_states: usize, inputs: Alphabet, outputs: Alphabet) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::InvalidTransducer("at least one state is required".into()));
        }
        Ok(Transducer {
            n_states,
            delta: vec![None; n_states * inputs.len()],
            omega: vec![None; n_states],
            inputs,
            outputs,
        })
    }

    /// Builds a transducer from explicit tables, checking every entry.
    pub fn from_tables(
        inputs: Alphabet,
        outputs: Alphabet,
        delta: Vec<Option<State>>,
        omega: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = omega.len();
        if n == 0 {
            return Err(Error::InvalidTransducer("at least one state is required".into()));
        }
        if delta.len() != n * inputs.len() {
            return Err(Error::InvalidTransducer(format!(
                "transition table has {} cells, expected {}",
                delta.len(),
                n * inputs.len()
            )));
        }
        if let Some(bad) = delta.iter().flatten().find(|&&s| s >= n) {
            return Err(Error::InvalidTransducer(format!("successor {bad} out of range")));
        }
        if let Some(bad) = omega.iter().flatten().find(|&&o| o >= outputs.len()) {
            return Err(Error::InvalidTransducer(format!("output index {bad} out of range")));
        }
        Ok(Transducer {
            n_states: n,
            inputs,
            outputs,
            delta,
            omega,
        })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn inputs(&self) -> &Alphabet {
        &self.inputs
    }

    pub fn outputs(&self) -> &Alphabet {
        &self.outputs
    }

    pub fn delta_table(&self) -> &[Option<State>] {
        &self.delta
    }

    pub fn omega_table(&self) -> &[Option<usize>] {
        &self.omega
    }

    pub fn successor(&self, state: State, symbol: usize) -> Option<State> {
        self.delta[state * self.inputs.len() + symbol]
    }

    pub fn output(&self, state: State) -> Option<usize> {
        self.omega[state]
    }

    pub fn output_symbol(&self, state: State) -> Option<&Symbol> {
        self.omega[state].map(|o| &self.outputs[o])
    }

    pub fn set_transition(&mut self, state: State, symbol: usize, target: Option<State>) {
        assert!(state < self.n_states && symbol < self.inputs.len());
        assert!(target.is_none_or(|t| t < self.n_states), "successor out of range");
        self.delta[state * self.inputs.len() + symbol] = target;
    }

    pub fn set_output(&mut self, state: State, output: Option<usize>) {
        assert!(state < self.n_states);
        assert!(output.is_none_or(|o| o < self.outputs.len()), "output out of range");
        self.omega[state] = output;
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().all(Option::is_some) && self.omega.iter().all(Option::is_some)
    }

    /// Translates symbol tokens into input indices.
    pub fn encode_word<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Vec<usize>> {
        if tokens.is_empty() {
            return Err(Error::EmptyWord);
        }
        tokens
            .iter()
            .map(|t| {
                self.inputs
                    .index_of(t.as_ref())
                    .ok_or_else(|| Error::UnknownSymbol(t.as_ref().to_string()))
            })
            .collect()
    }

    pub fn trajectory(&self, word: &[usize]) -> Result<Trajectory> {
        let mut states = Vec::with_capacity(word.len() + 1);
        let mut q = INITIAL;
        states.push(q);
        for (i, &a) in word.iter().enumerate() {
            if a >= self.inputs.len() {
                return Err(Error::UnknownSymbol(format!("#{a}")));
            }
            q = self.successor(q, a).ok_or_else(|| Error::UndefinedTransition {
                state: q,
                symbol: self.inputs[a].to_string(),
                position: i + 1,
            })?;
            states.push(q);
        }
        Ok(Trajectory { states })
    }

    /// Output index produced for `word`.
    pub fn run(&self, word: &[usize]) -> Result<usize> {
        let last = self.trajectory(word)?.last();
        self.omega[last].ok_or(Error::UndefinedOutput(last))
    }

    pub fn run_symbol(&self, word: &[usize]) -> Result<&Symbol> {
        self.run(word).map(|o| &self.outputs[o])
    }

    /// Checks every pair of `task`. Symbols are matched by token, so the two
    /// alphabets may list them in different orders.
    pub fn verify(&self, task: &TaskSpec) -> VerifyReport {
        let input_map: Vec<Option<usize>> = task
            .inputs()
            .iter()
            .map(|s| self.inputs.index_of(s.as_str()))
            .collect();
        let mut failures = Vec::new();
        for (pair_index, pair) in task.pairs().iter().enumerate() {
            let expected = task.output_symbol(pair);
            let fail = |kind| Failure {
                pair_index,
                word: task.render_word(&pair.word),
                kind,
            };
            let word: Option<Vec<usize>> = pair.word.iter().map(|&a| input_map[a]).collect();
            let Some(word) = word else {
                let missing = pair
                    .word
                    .iter()
                    .find(|&&a| input_map[a].is_none())
                    .map(|&a| task.inputs()[a].clone())
                    .expect("some symbol is unmapped");
                failures.push(fail(FailureKind::UnknownSymbol(missing)));
                continue;
            };
            match self.run(&word) {
                Ok(o) if &self.outputs[o] == expected => {}
                Ok(o) => failures.push(fail(FailureKind::WrongOutput {
                    expected: expected.clone(),
                    actual: self.outputs[o].clone(),
                })),
                Err(Error::UndefinedTransition { state, position, .. }) => {
                    failures.push(fail(FailureKind::UndefinedTransition { state, position }))
                }
                Err(Error::UndefinedOutput(state)) => {
                    failures.push(fail(FailureKind::UndefinedOutput { state }))
                }
                Err(e) => unreachable!("encoded word cannot fail with {e}"),
            }
        }
        VerifyReport {
            ok: failures.is_empty(),
            failures,
        }
    }

    /// Drops every transition and output that no task word uses.
    pub fn prune(&self, task: &TaskSpec) -> Result<Transducer> {
        let report = self.verify(task);
        if !report.ok {
            return Err(Error::PreconditionViolated(format!(
                "transducer fails {} of {} pairs",
                report.failures.len(),
                task.len()
            )));
        }
        let k = self.inputs.len();
        let mut delta_used = vec![false; self.delta.len()];
        let mut omega_used = vec![false; self.n_states];
        for pair in task.pairs() {
            let mut q = INITIAL;
            for &a in &pair.word {
                let a = self.inputs.index_of(task.inputs()[a].as_str()).expect("verified");
                delta_used[q * k + a] = true;
                q = self.delta[q * k + a].expect("verified");
            }
            omega_used[q] = true;
        }
        let mut pruned = self.clone();
        for (cell, used) in pruned.delta.iter_mut().zip(&delta_used) {
            if !used {
                *cell = None;
            }
        }
        for (out, used) in pruned.omega.iter_mut().zip(&omega_used) {
            if !used {
                *out = None;
            }
        }
        Ok(pruned)
    }

    /// Fills every undefined entry: transitions per `policy`, outputs with the
    /// first output symbol.
    pub fn totalize(&self, policy: FillPolicy) -> Transducer {
        let k = self.inputs.len();
        let mut total = self.clone();
        for (cell, entry) in total.delta.iter_mut().enumerate() {
            if entry.is_none() {
                let q = cell / k;
                *entry = Some(match policy {
                    FillPolicy::SelfLoop => q,
                    FillPolicy::Initial => INITIAL,
                    FillPolicy::Constant(s) => s.min(self.n_states - 1),
                });
            }
        }
        if !self.outputs.is_empty() {
            for out in total.omega.iter_mut().filter(|o| o.is_none()) {
                *out = Some(0);
            }
        }
        total
    }

    /// Number of defined transitions and defined outputs.
    pub fn defined_map_count(&self) -> (usize, usize) {
        (
            self.delta.iter().filter(|c| c.is_some()).count(),
            self.omega.iter().filter(|o| o.is_some()).count(),
        )
    }

    /// Renames state `q` to `perm[q]`. The initial state must stay fixed.
    pub fn relabel(&self, perm: &[State]) -> Result<Transducer> {
        let n = self.n_states;
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "length {} for {} states",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation("not a bijection".into()));
            }
        }
        if perm[INITIAL] != INITIAL {
            return Err(Error::InvalidPermutation("must fix the initial state".into()));
        }
        let k = self.inputs.len();
        let mut out = Transducer::empty(n, self.inputs.clone(), self.outputs.clone())?;
        for q in 0..n {
            for a in 0..k {
                out.delta[perm[q] * k + a] = self.delta[q * k + a].map(|s| perm[s]);
            }
            out.omega[perm[q]] = self.omega[q];
        }
        Ok(out)
    }

    /// Re-expresses the machine over reordered (but equal-as-set) alphabets.
    pub fn with_alphabets(&self, inputs: Alphabet, outputs: Alphabet) -> Result<Transducer> {
        if !self.inputs.same_set(&inputs) || !self.outputs.is_subset_of(&outputs) {
            return Err(Error::AlphabetMismatch);
        }
        let k = inputs.len();
        let mut out = Transducer::empty(self.n_states, inputs, outputs)?;
        for q in 0..self.n_states {
            for (a, sym) in out.inputs.symbols().to_vec().iter().enumerate() {
                let old = self.inputs.index_of(sym.as_str()).expect("same set");
                out.delta[q * k + a] = self.successor(q, old);
            }
            out.omega[q] = self.omega[q]
                .map(|o| out.outputs.index_of(self.outputs[o].as_str()).expect("subset"));
        }
        Ok(out)
    }
}
