//! Built-in task families.
//!
//! The binary families enumerate all `2^len` words in lexicographic order.

use crate::error::{Error, Result};
use crate::symbol::Alphabet;
use crate::task::TaskSpec;

fn check_len(len: usize) -> Result<()> {
    if len == 0 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    if len > 24 {
        return Err(Error::InvalidParameter(format!("length {len} is too large")));
    }
    Ok(())
}

fn binary_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << len).map(move |i| (0..len).rev().map(|b| ((i >> b) & 1) as u8).collect())
}

fn bits_alphabet() -> Alphabet {
    Alphabet::from_tokens(&["0", "1"]).expect("valid tokens")
}

fn binary_task(len: usize, outputs: &[&str], label: impl Fn(&[u8]) -> &'static str) -> Result<TaskSpec> {
    check_len(len)?;
    let pairs = binary_words(len).map(|w| {
        let out = label(&w);
        (w.iter().map(|b| if *b == 1 { "1" } else { "0" }).collect::<Vec<_>>(), out)
    });
    TaskSpec::new(bits_alphabet(), Alphabet::from_tokens(outputs)?, pairs)
}

/// All binary words of length `len`, labelled `1` when the number of ones is odd.
pub fn gen_parity(len: usize) -> Result<TaskSpec> {
    binary_task(len, &["0", "1"], |w| {
        if w.iter().filter(|&&b| b == 1).count() % 2 == 1 {
            "1"
        } else {
            "0"
        }
    })
}

/// Words `0^n` with a single `1` at position `i` (1-indexed), labelled by the
/// 1-indexed block of `n / k` positions containing it.
pub fn gen_signal_locator(n: usize, k: usize) -> Result<TaskSpec> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter("n and k must be at least 1".into()));
    }
    if !n.is_multiple_of(k) {
        return Err(Error::NonDivisible { n, k });
    }
    let outputs: Vec<String> = (1..=k).map(|b| b.to_string()).collect();
    let pairs = (1..=n).map(|i| {
        let word = (1..=n).map(|j| if j == i { "1".to_string() } else { "0".to_string() }).collect();
        (word, (1 + (i - 1) * k / n).to_string())
    });
    TaskSpec::new(bits_alphabet(), Alphabet::from_tokens(&outputs)?, pairs)
}

/// All binary words of length `len`, labelled by which symbol is in the majority.
pub fn gen_zeroes_or_ones(len: usize) -> Result<TaskSpec> {
    binary_task(len, &["zeros", "equal", "ones"], |w| {
        let ones = w.iter().filter(|&&b| b == 1).count();
        match (2 * ones).cmp(&w.len()) {
            std::cmp::Ordering::Less => "zeros",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "ones",
        }
    })
}

/// All binary words of every length `1..=len`, labelled as in
/// [`gen_zeroes_or_ones`]. This is the variant whose minimal machine needs
/// 5 states at `len = 4`; the exact-length family needs only 4.
pub fn gen_zeroes_or_ones_upto(len: usize) -> Result<TaskSpec> {
    check_len(len)?;
    let mut pairs = Vec::new();
    for l in 1..=len {
        let task = gen_zeroes_or_ones(l)?;
        pairs.extend(task.pairs().iter().map(|p| {
            let word: Vec<String> = task.word_symbols(p).iter().map(|s| s.to_string()).collect();
            (word, task.output_symbol(p).to_string())
        }));
    }
    TaskSpec::new(bits_alphabet(), Alphabet::from_tokens(&["zeros", "equal", "ones"])?, pairs)
}

/// All binary words of length `len`, labelled `1` for palindromes.
pub fn gen_palindrome(len: usize) -> Result<TaskSpec> {
    binary_task(len, &["0", "1"], |w| {
        if w.iter().eq(w.iter().rev()) {
            "1"
        } else {
            "0"
        }
    })
}

pub const CLASSIFIED_WORDS: [(&str, &str); 10] = [
    ("eruption", "en"),
    ("erudite", "en"),
    ("oriental", "en"),
    ("topology", "en"),
    ("serendipity", "en"),
    ("eki", "jp"),
    ("origami", "jp"),
    ("arigato", "jp"),
    ("asztal", "hu"),
    ("mester", "hu"),
];

/// Ten words sorted into English, Japanese and Hungarian. The input alphabet
/// is the sorted set of letters that occur in them.
pub fn word_classification() -> TaskSpec {
    let mut letters: Vec<String> = CLASSIFIED_WORDS
        .iter()
        .flat_map(|(w, _)| w.chars().map(String::from))
        .collect();
    letters.sort();
    letters.dedup();
    let pairs = CLASSIFIED_WORDS
        .iter()
        .map(|(w, o)| (w.chars().map(String::from).collect(), o.to_string()));
    TaskSpec::new(
        Alphabet::from_tokens(&letters).expect("letters are valid tokens"),
        Alphabet::from_tokens(&["en", "jp", "hu"]).expect("valid tokens"),
        pairs,
    )
    .expect("corpus is consistent")
}
