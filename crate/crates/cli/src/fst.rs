//! FST/1: a line-oriented text format for transducers.
//!
//! ```text
//! # FST/1
//! @states 2
//! @initial 0
//! @inputs 0 1
//! @outputs 0 1
//! 0 0 0 1
//! 1 1 1 0
//! ```
//!
//! Each body line is `state output successor...` with one successor per input
//! symbol, in `@inputs` order; `-` marks an undefined entry.

use transynth::{Alphabet, Error, Result, Transducer, UNDEFINED_MARKER};

pub fn write_fst(t: &Transducer) -> String {
    let join = |a: &Alphabet| {
        a.iter()
            .map(|s| format!(" {s}"))
            .collect::<String>()
    };
    let mut out = format!(
        "# FST/1\n@states {}\n@initial 0\n@inputs{}\n@outputs{}\n",
        t.n_states(),
        join(t.inputs()),
        join(t.outputs())
    );
    for q in 0..t.n_states() {
        out.push_str(&q.to_string());
        out.push(' ');
        out.push_str(t.output_symbol(q).map_or(UNDEFINED_MARKER, |s| s.as_str()));
        for a in 0..t.inputs().len() {
            out.push(' ');
            match t.successor(q, a) {
                Some(s) => out.push_str(&s.to_string()),
                None => out.push_str(UNDEFINED_MARKER),
            }
        }
        out.push('\n');
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_fst(text: &str) -> Result<Transducer> {
    let mut n_states: Option<usize> = None;
    let mut inputs: Option<Alphabet> = None;
    let mut outputs: Option<Alphabet> = None;
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "@states" => match fields[1..] {
                [n] => {
                    let n = n.parse().map_err(|_| syntax(line_no, "bad state count"))?;
                    if n == 0 {
                        return Err(syntax(line_no, "at least one state is required"));
                    }
                    n_states = Some(n);
                }
                _ => return Err(syntax(line_no, "expected \"@states N\"")),
            },
            "@initial" => {
                if fields[1..] != ["0"] {
                    return Err(syntax(line_no, "initial state must be 0"));
                }
            }
            "@inputs" => {
                inputs = Some(Alphabet::from_tokens(&fields[1..]).map_err(|e| syntax(line_no, e.to_string()))?)
            }
            "@outputs" => {
                outputs = Some(Alphabet::from_tokens(&fields[1..]).map_err(|e| syntax(line_no, e.to_string()))?)
            }
            d if d.starts_with('@') => return Err(syntax(line_no, format!("unknown directive {d}"))),
            _ => rows.push((line_no, fields)),
        }
    }

    let n = n_states.ok_or_else(|| syntax(0, "missing @states"))?;
    let inputs = inputs.ok_or_else(|| syntax(0, "missing @inputs"))?;
    let outputs = outputs.ok_or_else(|| syntax(0, "missing @outputs"))?;
    let k = inputs.len();
    if rows.len() != n {
        return Err(syntax(0, format!("expected {n} state lines, found {}", rows.len())));
    }

    let mut t = Transducer::empty(n, inputs, outputs.clone())?;
    let mut seen = vec![false; n];
    for (line_no, fields) in rows {
        if fields.len() != k + 2 {
            return Err(syntax(line_no, format!("expected {} fields", k + 2)));
        }
        let q: usize = fields[0].parse().map_err(|_| syntax(line_no, "bad state index"))?;
        if q >= n || std::mem::replace(&mut seen[q], true) {
            return Err(syntax(line_no, format!("state {q} out of range or repeated")));
        }
        let out = match fields[1] {
            UNDEFINED_MARKER => None,
            tok => Some(outputs.index_of(tok).ok_or_else(|| Error::UnknownSymbol(tok.to_string()))?),
        };
        t.set_output(q, out);
        for (a, tok) in fields[2..].iter().enumerate() {
            let succ = match *tok {
                UNDEFINED_MARKER => None,
                s => {
                    let s: usize = s.parse().map_err(|_| syntax(line_no, format!("bad successor {s:?}")))?;
                    if s >= n {
                        return Err(syntax(line_no, format!("successor {s} out of range")));
                    }
                    Some(s)
                }
            };
            t.set_transition(q, a, succ);
        }
    }
    Ok(t)
}
