//! Exact synthesis of state-minimal single-output transducers from
//! (word, output) pairs, and the trie + partition-refinement baseline it is
//! compared against.

pub mod error;
pub mod iopairs;
pub mod oracle;
pub mod search;
pub mod symbol;
pub mod task;
pub mod tasks;
pub mod transducer;
pub mod trie;

pub use error::{Error, Result};
pub use iopairs::{parse_task, write_task, WordMode};
pub use search::{
    lower_bound, search_space_size, synthesize_at, synthesize_at_traj, synthesize_minimal,
    synthesize_minimal_with, trajectory_variable_count, variable_count, Engine, Minimal,
    SearchConfig, SearchOutcome, SearchResult, SearchStats, Unsat, WordOrder,
};
pub use symbol::{Alphabet, Symbol, UNDEFINED_MARKER};
pub use task::{Pair, TaskSpec};
pub use transducer::{
    Failure, FailureKind, FillPolicy, State, Trajectory, Transducer, VerifyReport, INITIAL,
};
pub use trie::{build_trie, minimize, TriePartition};
