//! Command-line front end: synthesis, trie baseline, simulation, task
//! generation, DOT export and the comparison table.

pub mod bench;
pub mod dot;
pub mod fst;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use transynth::{
    build_trie, minimize, parse_task, search_space_size, synthesize_minimal_with, tasks,
    trajectory_variable_count, variable_count, write_task, Engine, Error as CoreError,
    SearchConfig, TaskSpec, Transducer, WordMode, WordOrder,
};

use crate::bench::TableFormat;
use crate::dot::DotOptions;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 0 success, 1 unsatisfied or out of budget, 2 invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoreError::NoSolutionWithin(_)
                | CoreError::BudgetExhausted { .. }
                | CoreError::UndefinedTransition { .. }
                | CoreError::UndefinedOutput(_)
                | CoreError::CapExceeded { .. },
            ) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "transynth", version, about = "Minimal single-output transducers from word/output pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EngineArg {
    Table,
    Trajectory,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    AsGiven,
    ShortestFirst,
    LongestFirst,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    Parity,
    SignalLocator,
    ZeroesOrOnes,
    Palindrome,
    Words,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a state-minimal transducer for a task file.
    Synth {
        task: PathBuf,
        /// FST/1 output path (default: the task path with extension .fst).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        max_states: usize,
        #[arg(long, value_enum, default_value = "table")]
        engine: EngineArg,
        /// Drop transitions and outputs the task never uses (default).
        #[arg(long, overrides_with = "no_prune")]
        prune: bool,
        /// Keep the total machine found by the search.
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "as-given")]
        word_order: OrderArg,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Wall-clock budget; the trajectory engine defaults to 60 seconds.
        #[arg(long)]
        budget_seconds: Option<f64>,
    },
    /// Build the prefix trie of a task, optionally minimized.
    Trie {
        task: PathBuf,
        #[arg(long)]
        minimize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the comparison table over the built-in tasks.
    Bench {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Omit the timing columns.
        #[arg(long)]
        no_timings: bool,
        #[arg(long, default_value_t = 10)]
        max_states: usize,
    },
    /// Feed a word to a transducer and print its output.
    Run {
        transducer: PathBuf,
        word: String,
        /// Also print the trajectory.
        #[arg(long)]
        trace: bool,
        /// Read the word as comma-separated tokens.
        #[arg(long)]
        tokens: bool,
    },
    /// Write a built-in task in IOPAIRS/1 format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
        /// zeroes-or-ones only: include every length from 1 up to LEN.
        #[arg(long)]
        cumulative: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render an FST/1 file as a DOT graph.
    Dot {
        transducer: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn out_err(out: &mut dyn Write, text: std::fmt::Arguments) -> CliResult {
    out.write_fmt(text).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        out_err($out, format_args!("{}\n", format_args!($($arg)*)))?
    };
}

pub fn load_task(path: &Path) -> CliResult<TaskSpec> {
    Ok(parse_task(&read(path)?)?)
}

pub fn load_transducer(path: &Path) -> CliResult<Transducer> {
    Ok(fst::parse_fst(&read(path)?)?)
}

fn dot_options() -> DotOptions {
    DotOptions { show_nil_sink: true }
}

pub fn generate(family: Family, params: &[usize], cumulative: bool) -> CliResult<TaskSpec> {
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{family:?} takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    if cumulative && !matches!(family, Family::ZeroesOrOnes) {
        return Err(CliError::Usage("--cumulative applies to zeroes-or-ones only".into()));
    }
    let task = match family {
        Family::Parity => {
            arity(1)?;
            tasks::gen_parity(params[0])?
        }
        Family::SignalLocator => {
            arity(2)?;
            tasks::gen_signal_locator(params[0], params[1])?
        }
        Family::ZeroesOrOnes => {
            arity(1)?;
            if cumulative {
                tasks::gen_zeroes_or_ones_upto(params[0])?
            } else {
                tasks::gen_zeroes_or_ones(params[0])?
            }
        }
        Family::Palindrome => {
            arity(1)?;
            tasks::gen_palindrome(params[0])?
        }
        Family::Words => {
            arity(0)?;
            tasks::word_classification()
        }
    };
    Ok(task)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Synth {
            task,
            output,
            max_states,
            engine,
            prune: _,
            no_prune,
            dot,
            word_order,
            budget_nodes,
            budget_seconds,
        } => {
            let spec = load_task(&task)?;
            let engine = match engine {
                EngineArg::Table => Engine::Table,
                EngineArg::Trajectory => Engine::Trajectory,
            };
            let time_budget = match (budget_seconds, engine) {
                (Some(s), _) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
                (Some(s), _) => return Err(CliError::Usage(format!("invalid budget {s}"))),
                (None, Engine::Trajectory) => Some(Duration::from_secs(60)),
                (None, Engine::Table) => None,
            };
            let cfg = SearchConfig {
                max_states,
                word_order: match word_order {
                    OrderArg::AsGiven => WordOrder::AsGiven,
                    OrderArg::ShortestFirst => WordOrder::ShortestFirst,
                    OrderArg::LongestFirst => WordOrder::LongestFirst,
                },
                node_budget: budget_nodes,
                time_budget,
            };
            let found = synthesize_minimal_with(engine, &spec, &cfg)?;
            let machine = if no_prune {
                found.transducer.clone()
            } else {
                found.transducer.prune(&spec)?
            };
            let k = spec.inputs().len();
            let n = found.n_min;
            let (d, o) = machine.defined_map_count();
            say!(out, "n_min: {n}");
            let trail: Vec<String> = found.unsat_trail.iter().map(|u| u.n.to_string()).collect();
            if !trail.is_empty() {
                say!(out, "unsat: {}", trail.join(" "));
            }
            say!(out, "defined maps: delta {d}/{}, omega {o}/{n}", n * k);
            match engine {
                Engine::Table => say!(out, "variables: {}", variable_count(n, k)),
                Engine::Trajectory => say!(out, "variables: {}", trajectory_variable_count(&spec)),
            }
            say!(
                out,
                "search space: {} (= {n}^{} * {}^{n})",
                search_space_size(n, k, spec.outputs().len()),
                n * k,
                spec.outputs().len()
            );
            say!(
                out,
                "nodes: {}, backtracks: {}, time: {:.3} ms",
                found.stats.nodes,
                found.stats.backtracks,
                found.stats.elapsed.as_secs_f64() * 1e3
            );
            let path = output.unwrap_or_else(|| task.with_extension("fst"));
            write(&path, &fst::write_fst(&machine))?;
            say!(out, "wrote {}", path.display());
            if let Some(dot) = dot {
                write(&dot, &dot::to_dot(&machine, dot_options()))?;
            }
        }
        Command::Trie {
            task,
            minimize: do_minimize,
            output,
            dot,
        } => {
            let spec = load_task(&task)?;
            let trie = build_trie(&spec);
            say!(out, "trie states: {}", trie.n_states());
            let machine = if do_minimize {
                let min = minimize(&trie, &spec)?;
                say!(out, "minimized states: {}", min.n_states());
                min
            } else {
                trie
            };
            if let Some(path) = output {
                write(&path, &fst::write_fst(&machine))?;
            }
            if let Some(dot) = dot {
                write(&dot, &dot::to_dot(&machine, dot_options()))?;
            }
        }
        Command::Bench {
            format,
            no_timings,
            max_states,
        } => {
            let cases = bench::bench_cases();
            let rows = bench::run_bench(&cases, &SearchConfig::with_max_states(max_states));
            let format = match format {
                FormatArg::Text => TableFormat::Text,
                FormatArg::Csv => TableFormat::Csv,
            };
            out_err(out, format_args!("{}", bench::render_table(&rows, format, !no_timings)))?;
        }
        Command::Run {
            transducer,
            word,
            trace,
            tokens,
        } => {
            let t = load_transducer(&transducer)?;
            let mode = if tokens { WordMode::Tokens } else { WordMode::for_alphabet(t.inputs()) };
            if word.is_empty() {
                return Err(CoreError::EmptyWord.into());
            }
            let word = t.encode_word(&mode.split(&word))?;
            if trace {
                let states: Vec<String> =
                    t.trajectory(&word)?.states.iter().map(|q| q.to_string()).collect();
                say!(out, "trajectory: {}", states.join(" "));
            }
            say!(out, "{}", t.run_symbol(&word)?);
        }
        Command::Gen {
            family,
            params,
            cumulative,
            output,
        } => {
            let text = write_task(&generate(family, &params, cumulative)?);
            match output {
                Some(path) => write(&path, &text)?,
                None => out_err(out, format_args!("{text}"))?,
            }
        }
        Command::Dot { transducer, output } => {
            let text = dot::to_dot(&load_transducer(&transducer)?, dot_options());
            match output {
                Some(path) => write(&path, &text)?,
                None => out_err(out, format_args!("{text}"))?,
            }
        }
    }
    Ok(())
}
