//! Workloads shared by the criterion benches.

use transynth::{tasks, TaskSpec};

/// The five comparison tasks, by name.
pub fn comparison_tasks() -> Vec<(&'static str, TaskSpec)> {
    vec![
        ("signal-locator-9-3", tasks::gen_signal_locator(9, 3).unwrap()),
        ("signal-locator-8-4", tasks::gen_signal_locator(8, 4).unwrap()),
        ("zeroes-or-ones-4", tasks::gen_zeroes_or_ones_upto(4).unwrap()),
        ("palindrome-4", tasks::gen_palindrome(4).unwrap()),
        ("word-classification", tasks::word_classification()),
    ]
}

/// Tasks small enough for the trajectory engine and the exhaustive oracle.
pub fn small_tasks() -> Vec<(&'static str, TaskSpec)> {
    vec![
        ("parity-2", tasks::gen_parity(2).unwrap()),
        ("parity-4", tasks::gen_parity(4).unwrap()),
        ("signal-locator-6-2", tasks::gen_signal_locator(6, 2).unwrap()),
        ("palindrome-3", tasks::gen_palindrome(3).unwrap()),
    ]
}
