//! Brute-force ground truth for tiny instances.
//!
//! Enumerates every total transition table in lexicographic order (cell 0
//! most significant, row-major). For each table the lexicographically first
//! output map is chosen directly: forced outputs where some word ends, the
//! first output symbol elsewhere. That equals enumerating the output map last,
//! without iterating over it.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::search::search_space_size;
use crate::task::TaskSpec;
use crate::transducer::Transducer;

pub const DEFAULT_CAP: u64 = 100_000_000;

/// Some verifying total `n`-state transducer, or `None` if none exists.
pub fn oracle_sat(task: &TaskSpec, n: usize, cap: u64) -> Result<Option<Transducer>> {
    if n == 0 {
        return Err(Error::InvalidParameter("state count must be at least 1".into()));
    }
    let k = task.inputs().len();
    let size = search_space_size(n, k, task.outputs().len());
    if size > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            size: size.to_string(),
            cap,
        });
    }
    let cells = n * k;
    let mut delta = vec![0usize; cells];
    let mut omega: Vec<Option<usize>> = vec![None; n];
    loop {
        omega.fill(None);
        let consistent = task.pairs().iter().all(|pair| {
            let last = pair.word.iter().fold(0, |q, &a| delta[q * k + a]);
            match omega[last] {
                None => {
                    omega[last] = Some(pair.output);
                    true
                }
                Some(o) => o == pair.output,
            }
        });
        if consistent {
            let t = Transducer::from_tables(
                task.inputs().clone(),
                task.outputs().clone(),
                delta.iter().map(|&s| Some(s)).collect(),
                omega.iter().map(|o| Some(o.unwrap_or(0))).collect(),
            )?;
            return Ok(Some(t));
        }
        // odometer step, last cell least significant
        let mut i = cells;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            delta[i] += 1;
            if delta[i] < n {
                break;
            }
            delta[i] = 0;
        }
    }
}

/// Least `n` in `1..=max_n` for which [`oracle_sat`] finds a witness.
pub fn oracle_min(task: &TaskSpec, max_n: usize, cap: u64) -> Result<usize> {
    for n in 1..=max_n {
        if oracle_sat(task, n, cap)?.is_some() {
            return Ok(n);
        }
    }
    Err(Error::NoSolutionWithin(max_n))
}
