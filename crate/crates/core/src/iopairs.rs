//! The IOPAIRS/1 task file format.
//!
//! ```text
//! # comment
//! @mode chars            (or: @mode tokens)
//! @inputs 0 1            (optional; superset of the symbols used)
//! @outputs 0 1           (optional)
//! 00 0
//! 01 1
//! ```
//!
//! In chars mode each character of a word is a symbol; in tokens mode a word
//! is a comma-separated token list.

use crate::error::{Error, Result};
use crate::symbol::Alphabet;
use crate::task::TaskSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordMode {
    #[default]
    Chars,
    Tokens,
}

impl WordMode {
    /// Splits a word into symbol tokens.
    pub fn split(self, word: &str) -> Vec<String> {
        match self {
            WordMode::Chars => word.chars().map(String::from).collect(),
            WordMode::Tokens => word.split(',').map(String::from).collect(),
        }
    }

    /// Mode needed to write words over `alphabet` unambiguously.
    pub fn for_alphabet(alphabet: &Alphabet) -> Self {
        if alphabet.iter().all(|s| s.as_str().chars().count() == 1) {
            WordMode::Chars
        } else {
            WordMode::Tokens
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_task(text: &str) -> Result<TaskSpec> {
    let mut mode = WordMode::Chars;
    let mut declared_inputs: Option<Alphabet> = None;
    let mut declared_outputs: Option<Alphabet> = None;
    let mut pair_lines = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(directive) = line.strip_prefix('@') {
            let mut fields = directive.split_whitespace();
            let name = fields.next().unwrap_or_default();
            let args: Vec<&str> = fields.collect();
            match name {
                "mode" => {
                    mode = match args.as_slice() {
                        ["chars"] => WordMode::Chars,
                        ["tokens"] => WordMode::Tokens,
                        _ => return Err(syntax(line_no, "expected \"@mode chars\" or \"@mode tokens\"")),
                    }
                }
                "inputs" => {
                    declared_inputs =
                        Some(Alphabet::from_tokens(&args).map_err(|e| syntax(line_no, e.to_string()))?)
                }
                "outputs" => {
                    declared_outputs =
                        Some(Alphabet::from_tokens(&args).map_err(|e| syntax(line_no, e.to_string()))?)
                }
                other => return Err(syntax(line_no, format!("unknown directive @{other}"))),
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [word, output] => pair_lines.push((line_no, *word, *output)),
            _ => return Err(syntax(line_no, "expected \"<word> <output>\"")),
        }
    }

    let mut inputs: Vec<String> = Vec::new();
    let mut outputs: Vec<String> = Vec::new();
    let mut pairs = Vec::with_capacity(pair_lines.len());
    for (line_no, word, output) in pair_lines {
        let tokens = mode.split(word);
        if tokens.iter().any(String::is_empty) {
            return Err(syntax(line_no, format!("empty token in word {word:?}")));
        }
        for t in &tokens {
            if !inputs.contains(t) {
                inputs.push(t.clone());
            }
        }
        if !outputs.iter().any(|o| o == output) {
            outputs.push(output.to_string());
        }
        pairs.push((tokens, output.to_string()));
    }

    let inputs = match declared_inputs {
        Some(a) => a,
        None => Alphabet::from_tokens(&inputs)?,
    };
    let outputs = match declared_outputs {
        Some(a) => a,
        None => Alphabet::from_tokens(&outputs)?,
    };
    TaskSpec::new(inputs, outputs, pairs)
}

/// Writes a task with explicit alphabets, so that parsing restores it exactly.
pub fn write_task(task: &TaskSpec) -> String {
    let mode = WordMode::for_alphabet(task.inputs());
    let join = |a: &Alphabet| a.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" ");
    let mut out = String::from("# IOPAIRS/1\n");
    out.push_str(match mode {
        WordMode::Chars => "@mode chars\n",
        WordMode::Tokens => "@mode tokens\n",
    });
    out.push_str(&format!("@inputs {}\n", join(task.inputs())));
    out.push_str(&format!("@outputs {}\n", join(task.outputs())));
    for pair in task.pairs() {
        let symbols: Vec<&str> = pair.word.iter().map(|&a| task.inputs()[a].as_str()).collect();
        let word = match mode {
            WordMode::Chars => symbols.concat(),
            WordMode::Tokens => symbols.join(","),
        };
        out.push_str(&format!("{} {}\n", word, task.output_symbol(pair)));
    }
    out
}
