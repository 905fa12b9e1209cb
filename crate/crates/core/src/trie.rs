//! Prefix-trie construction and Moore-style partition refinement.
//!
//! The refinement is the classical don't-care-free one: two states are merged
//! only if they have the same (possibly undefined) output and, for every input
//! symbol, successors in the same class, where an undefined successor is its
//! own class.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::task::TaskSpec;
use crate::transducer::{State, Transducer, INITIAL};

/// One state per distinct prefix of the task words, the empty prefix being
/// state 0. States are numbered in order of creation.
pub fn build_trie(task: &TaskSpec) -> Transducer {
    let k = task.inputs().len();
    let mut delta: Vec<Option<State>> = vec![None; k];
    let mut omega: Vec<Option<usize>> = vec![None];
    for pair in task.pairs() {
        let mut q = INITIAL;
        for &a in &pair.word {
            q = match delta[q * k + a] {
                Some(next) => next,
                None => {
                    let next = omega.len();
                    omega.push(None);
                    delta.extend(std::iter::repeat_n(None, k));
                    delta[q * k + a] = Some(next);
                    next
                }
            };
        }
        omega[q] = Some(pair.output);
    }
    Transducer::from_tables(task.inputs().clone(), task.outputs().clone(), delta, omega)
        .expect("trie tables are in range")
}

/// A partition of a transducer's states into candidate-equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriePartition {
    class_of: Vec<usize>,
    members: Vec<Vec<State>>,
    worklist: VecDeque<usize>,
    queued: Vec<bool>,
}

impl TriePartition {
    /// States grouped by output, with all output-undefined states in one class.
    pub fn by_output(t: &Transducer) -> Self {
        let mut ids: HashMap<Option<usize>, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(t.n_states());
        let mut members: Vec<Vec<State>> = Vec::new();
        for q in 0..t.n_states() {
            let next = ids.len();
            let c = *ids.entry(t.output(q)).or_insert(next);
            if c == members.len() {
                members.push(Vec::new());
            }
            members[c].push(q);
            class_of.push(c);
        }
        let n = members.len();
        TriePartition {
            class_of,
            members,
            worklist: (0..n).collect(),
            queued: vec![true; n],
        }
    }

    pub fn class_of(&self, q: State) -> usize {
        self.class_of[q]
    }

    pub fn n_classes(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self, class: usize) -> &[State] {
        &self.members[class]
    }

    fn signature(&self, t: &Transducer, q: State) -> Vec<Option<usize>> {
        (0..t.inputs().len())
            .map(|a| t.successor(q, a).map(|s| self.class_of[s]))
            .collect()
    }

    fn enqueue(&mut self, class: usize) {
        if !self.queued[class] {
            self.queued[class] = true;
            self.worklist.push_back(class);
        }
    }

    /// Splits classes until every class is stable. Classes are only ever split.
    pub fn refine(&mut self, t: &Transducer) {
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); t.n_states()];
        for p in 0..t.n_states() {
            for a in 0..t.inputs().len() {
                if let Some(s) = t.successor(p, a) {
                    preds[s].push(p);
                }
            }
        }
        while let Some(c) = self.worklist.pop_front() {
            self.queued[c] = false;
            let mut groups: Vec<(Vec<Option<usize>>, Vec<State>)> = Vec::new();
            for &q in &self.members[c] {
                let sig = self.signature(t, q);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, g)) => g.push(q),
                    None => groups.push((sig, vec![q])),
                }
            }
            if groups.len() == 1 {
                continue;
            }
            let old = std::mem::take(&mut self.members[c]);
            let mut groups = groups.into_iter().map(|(_, g)| g);
            self.members[c] = groups.next().expect("at least two groups");
            for g in groups {
                let id = self.members.len();
                for &q in &g {
                    self.class_of[q] = id;
                }
                self.members.push(g);
                self.queued.push(false);
            }
            let touched: Vec<usize> = old
                .iter()
                .flat_map(|&q| preds[q].iter().map(|&p| self.class_of[p]))
                .collect();
            for class in touched {
                self.enqueue(class);
            }
        }
    }
}

/// Quotient of `t` by its coarsest stable partition. Unreachable classes are
/// dropped; the rest are numbered breadth-first from the initial class.
pub fn minimize(t: &Transducer, task: &TaskSpec) -> Result<Transducer> {
    let report = t.verify(task);
    if !report.ok {
        return Err(Error::PreconditionViolated(format!(
            "transducer fails {} of {} pairs",
            report.failures.len(),
            task.len()
        )));
    }
    let mut partition = TriePartition::by_output(t);
    partition.refine(t);
    Ok(quotient(t, &partition))
}

fn quotient(t: &Transducer, partition: &TriePartition) -> Transducer {
    let k = t.inputs().len();
    let mut number: Vec<Option<usize>> = vec![None; partition.n_classes()];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let start = partition.class_of(INITIAL);
    number[start] = Some(0);
    order.push(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        let rep = partition.members(c)[0];
        for a in 0..k {
            if let Some(s) = t.successor(rep, a) {
                let d = partition.class_of(s);
                if number[d].is_none() {
                    number[d] = Some(order.len());
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
    }
    let mut delta = vec![None; order.len() * k];
    let mut omega = vec![None; order.len()];
    for (i, &c) in order.iter().enumerate() {
        let rep = partition.members(c)[0];
        for &q in partition.members(c) {
            assert_eq!(t.output(q), t.output(rep), "class mixes outputs");
            for a in 0..k {
                assert_eq!(
                    t.successor(q, a).map(|s| partition.class_of(s)),
                    t.successor(rep, a).map(|s| partition.class_of(s)),
                    "class is not stable"
                );
            }
        }
        for a in 0..k {
            delta[i * k + a] = t
                .successor(rep, a)
                .map(|s| number[partition.class_of(s)].expect("successor is reachable"));
        }
        omega[i] = t.output(rep);
    }
    Transducer::from_tables(t.inputs().clone(), t.outputs().clone(), delta, omega)
        .expect("quotient tables are in range")
}
