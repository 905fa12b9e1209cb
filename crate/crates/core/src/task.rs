use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::symbol::{Alphabet, Symbol};

/// One training example: a word over the input alphabet and its required output.
///
/// Both are stored as indices into the owning task's alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair {
    pub word: Vec<usize>,
    pub output: usize,
}

/// A finite list of (word, output) pairs describing a partial function from
/// non-empty input words to output symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskSpec {
    inputs: Alphabet,
    outputs: Alphabet,
    pairs: Vec<Pair>,
}

impl TaskSpec {
    /// Validates and builds a task. Identical duplicate pairs are dropped,
    /// keeping the first occurrence; conflicting outputs for one word fail.
    pub fn new<W, S>(inputs: Alphabet, outputs: Alphabet, pairs: W) -> Result<Self>
    where
        W: IntoIterator<Item = (Vec<S>, S)>,
        S: AsRef<str>,
    {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut kept = Vec::new();
        for (word, output) in pairs {
            if word.is_empty() {
                return Err(Error::EmptyWord);
            }
            let word = word
                .iter()
                .map(|s| {
                    inputs
                        .index_of(s.as_ref())
                        .ok_or_else(|| Error::UnknownSymbol(s.as_ref().to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let output = outputs
                .index_of(output.as_ref())
                .ok_or_else(|| Error::UnknownSymbol(output.as_ref().to_string()))?;
            match seen.get(&word) {
                Some(&prev) if prev == output => continue,
                Some(_) => return Err(Error::ContradictoryPair(render_word(&inputs, &word))),
                None => {
                    seen.insert(word.clone(), output);
                    kept.push(Pair { word, output });
                }
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyTask);
        }
        Ok(TaskSpec {
            inputs,
            outputs,
            pairs: kept,
        })
    }

    /// Character-mode convenience constructor: every character of a word is an
    /// input symbol. Alphabets are collected in order of first appearance.
    pub fn from_char_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut inputs: Vec<String> = Vec::new();
        let mut outputs: Vec<String> = Vec::new();
        let mut split = Vec::with_capacity(pairs.len());
        for (word, out) in pairs {
            let chars: Vec<String> = word.chars().map(String::from).collect();
            for c in &chars {
                if !inputs.contains(c) {
                    inputs.push(c.clone());
                }
            }
            if !outputs.iter().any(|o| o == out) {
                outputs.push(out.to_string());
            }
            split.push((chars, out.to_string()));
        }
        TaskSpec::new(
            Alphabet::from_tokens(&inputs)?,
            Alphabet::from_tokens(&outputs)?,
            split,
        )
    }

    pub fn inputs(&self) -> &Alphabet {
        &self.inputs
    }

    pub fn outputs(&self) -> &Alphabet {
        &self.outputs
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Output symbol index required for `word`, if the task lists it.
    pub fn lookup(&self, word: &[usize]) -> Option<usize> {
        self.pairs.iter().find(|p| p.word == word).map(|p| p.output)
    }

    /// Distinct output indices that actually occur in pairs.
    pub fn used_outputs(&self) -> Vec<usize> {
        let mut used: Vec<usize> = self.pairs.iter().map(|p| p.output).collect();
        used.sort_unstable();
        used.dedup();
        used
    }

    /// Distinct input indices that actually occur in words.
    pub fn used_inputs(&self) -> Vec<usize> {
        let mut used: Vec<usize> = self.pairs.iter().flat_map(|p| p.word.iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        used
    }

    /// Sum of word lengths over all pairs.
    pub fn total_length(&self) -> usize {
        self.pairs.iter().map(|p| p.word.len()).sum()
    }

    pub fn word_symbols(&self, pair: &Pair) -> Vec<&Symbol> {
        pair.word.iter().map(|&i| &self.inputs[i]).collect()
    }

    pub fn output_symbol(&self, pair: &Pair) -> &Symbol {
        &self.outputs[pair.output]
    }

    /// Word rendered by concatenating tokens, or comma-joined when any token
    /// is longer than one character.
    pub fn render_word(&self, word: &[usize]) -> String {
        render_word(&self.inputs, word)
    }

    /// Same pairs with the alphabets re-expressed in the given orders.
    /// The new alphabets must be supersets of the symbols used.
    pub fn with_alphabets(&self, inputs: Alphabet, outputs: Alphabet) -> Result<Self> {
        let pairs = self.pairs.iter().map(|p| {
            (
                p.word
                    .iter()
                    .map(|&i| self.inputs[i].as_str().to_string())
                    .collect::<Vec<_>>(),
                self.outputs[p.output].as_str().to_string(),
            )
        });
        TaskSpec::new(inputs, outputs, pairs)
    }
}

pub(crate) fn render_word(alphabet: &Alphabet, word: &[usize]) -> String {
    let single = word.iter().all(|&i| alphabet[i].as_str().chars().count() == 1);
    let parts: Vec<&str> = word.iter().map(|&i| alphabet[i].as_str()).collect();
    if single {
        parts.concat()
    } else {
        parts.join(",")
    }
}
