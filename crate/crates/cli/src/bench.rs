//! The comparison table: exact minimum vs. trie vs. minimized trie.

use std::fmt::Write;
use std::time::{Duration, Instant};

use transynth::{build_trie, minimize, synthesize_minimal, tasks, SearchConfig, TaskSpec};

/// Reference values for one row: minimal, trie and minimized-trie state counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reference {
    pub minimal: usize,
    pub trie: usize,
    pub minimized: usize,
}

#[derive(Debug, Clone)]
pub struct BenchCase {
    pub name: &'static str,
    pub task: TaskSpec,
    pub reference: Reference,
}

pub fn bench_cases() -> Vec<BenchCase> {
    let case = |name, task, (minimal, trie, minimized)| BenchCase {
        name,
        task,
        reference: Reference {
            minimal,
            trie,
            minimized,
        },
    };
    vec![
        case("Signal Locator 9-3", tasks::gen_signal_locator(9, 3).unwrap(), (5, 45, 24)),
        case("Signal Locator 8-4", tasks::gen_signal_locator(8, 4).unwrap(), (6, 36, 23)),
        case("Zeroes and ones 4", tasks::gen_zeroes_or_ones_upto(4).unwrap(), (5, 31, 13)),
        case("Palindrome 4", tasks::gen_palindrome(4).unwrap(), (5, 31, 12)),
        case("Word Classification", tasks::word_classification(), (3, 68, 57)),
    ]
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub task: String,
    /// Minimal state count, or the search error message.
    pub minimal: Result<usize, String>,
    pub trie: usize,
    pub minimized: usize,
    pub reference: Reference,
    pub synth_time: Duration,
    pub trie_time: Duration,
    pub minimize_time: Duration,
}

impl BenchRow {
    /// `Minimal <= Minimized <= Trie`; `None` if the search failed.
    pub fn sandwich(&self) -> Option<bool> {
        let m = *self.minimal.as_ref().ok()?;
        Some(m <= self.minimized && self.minimized <= self.trie)
    }
}

pub fn run_case(case: &BenchCase, cfg: &SearchConfig) -> BenchRow {
    let start = Instant::now();
    let minimal = synthesize_minimal(&case.task, cfg)
        .map(|m| m.n_min)
        .map_err(|e| e.to_string());
    let synth_time = start.elapsed();

    let start = Instant::now();
    let trie = build_trie(&case.task);
    let trie_time = start.elapsed();

    let start = Instant::now();
    let minimized = minimize(&trie, &case.task).expect("a trie verifies its own task");
    let minimize_time = start.elapsed();

    BenchRow {
        task: case.name.to_string(),
        minimal,
        trie: trie.n_states(),
        minimized: minimized.n_states(),
        reference: case.reference,
        synth_time,
        trie_time,
        minimize_time,
    }
}

/// Rows are computed concurrently but always returned in case order.
pub fn run_bench(cases: &[BenchCase], cfg: &SearchConfig) -> Vec<BenchRow> {
    std::thread::scope(|s| {
        let handles: Vec<_> = cases.iter().map(|c| s.spawn(move || run_case(c, cfg))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .collect()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
}

fn cells(row: &BenchRow, timings: bool) -> Vec<String> {
    let ms = |d: Duration| format!("{:.3}", d.as_secs_f64() * 1e3);
    let mut c = vec![
        row.task.clone(),
        match &row.minimal {
            Ok(n) => n.to_string(),
            Err(e) => format!("error: {e}"),
        },
        row.trie.to_string(),
        row.minimized.to_string(),
        row.reference.minimal.to_string(),
        row.reference.trie.to_string(),
        row.reference.minimized.to_string(),
        match row.sandwich() {
            Some(true) => "ok".into(),
            Some(false) => "VIOLATED".into(),
            None => "n/a".into(),
        },
    ];
    if timings {
        c.extend([ms(row.synth_time), ms(row.trie_time), ms(row.minimize_time)]);
    }
    c
}

pub fn render_table(rows: &[BenchRow], format: TableFormat, timings: bool) -> String {
    let mut header: Vec<String> = [
        "Task",
        "Minimal",
        "Trie",
        "Minimized",
        "Ref Minimal",
        "Ref Trie",
        "Ref Minimized",
        "Sandwich",
    ]
    .map(String::from)
    .to_vec();
    if timings {
        header.extend(["Synth ms", "Trie ms", "Minimize ms"].map(String::from));
    }
    let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, timings)).collect();

    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let line = |c: &[String]| {
                c.iter()
                    .map(|s| if s.contains(',') { format!("\"{s}\"") } else { s.clone() })
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(out, "{}", line(&header)).unwrap();
            for r in &body {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        TableFormat::Text => {
            let widths: Vec<usize> = (0..header.len())
                .map(|i| body.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap())
                .collect();
            let line = |c: &[String]| {
                c.iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(i, (s, w))| if i == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
                    .collect::<Vec<_>>()
                    .join(" | ")
            };
            writeln!(out, "{}", line(&header)).unwrap();
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            writeln!(out, "{}", rule.join("-+-")).unwrap();
            for r in &body {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
    }
    out
}
