//! Finite Fibonacci words `f1 = b`, `f2 = a`, `fn = f(n-1) f(n-2)`, and
//! checks of their square factors and conjugate tries.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::circular::CircularWord;
use crate::error::{Error, Result};
use crate::trie::{build_trie, ConjugateTrie};
use crate::word::Word;

pub const MAX_WORD_LEN: usize = 1_000_000;
pub const MAX_SQUARE_SCAN_LEN: usize = 10_000;
/// Largest index accepted by the trie checks (`|f12| = 144`).
pub const MAX_TRIE_INDEX: usize = 12;
/// Largest index accepted by [`check_seebold`] (`|f14| = 377`).
pub const MAX_SEEBOLD_INDEX: usize = 14;

/// 1-based index into the sequence of finite Fibonacci words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibIndex(usize);

impl FibIndex {
    pub fn new(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::OutOfRange {
                index: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(FibIndex(i))
    }

    pub fn get(self) -> usize {
        self.0
    }

    fn within(self, min: usize, max: usize) -> Result<usize> {
        if (min..=max).contains(&self.0) {
            Ok(self.0)
        } else {
            Err(Error::OutOfRange {
                index: self.0,
                min,
                max,
            })
        }
    }
}

/// `Fib(i)` with `Fib(1) = Fib(2) = 1`; the length of `fi`.
pub fn fib_number(i: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for _ in 2..i {
        (a, b) = (b, a.saturating_add(b));
    }
    if i <= 2 {
        1
    } else {
        b
    }
}

pub fn fib_word(i: FibIndex) -> Result<Word> {
    let len = fib_number(i.get());
    if len > MAX_WORD_LEN {
        return Err(Error::OutOfRange {
            index: i.get(),
            min: 1,
            max: 30,
        });
    }
    let (mut prev, mut cur) = (vec!['b'], vec!['a']);
    if i.get() == 1 {
        return Ok(Word::from_symbols(prev));
    }
    for _ in 2..i.get() {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(Word::from_symbols(cur))
}

pub fn is_fib_number(n: usize) -> bool {
    let (mut a, mut b) = (1usize, 2usize);
    while a < n {
        (a, b) = (b, a + b);
    }
    a == n
}

/// Every `v` such that `vv` is a factor of `w`.
pub fn squares_in(w: &Word) -> Result<BTreeSet<Word>> {
    let s = w.symbols();
    if s.len() > MAX_SQUARE_SCAN_LEN {
        return Err(Error::OutOfRange {
            index: s.len(),
            min: 0,
            max: MAX_SQUARE_SCAN_LEN,
        });
    }
    let mut found: HashSet<&[char]> = HashSet::new();
    for half in 1..=s.len() / 2 {
        // `run` counts consecutive positions i with s[i] == s[i + half]; a
        // run of length `half` ending at i marks a square starting at
        // i + 1 - half.
        let mut run = 0;
        for i in 0..s.len() - half {
            if s[i] == s[i + half] {
                run += 1;
                if run >= half {
                    let start = i + 1 - half;
                    found.insert(&s[start..start + half]);
                }
            } else {
                run = 0;
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|v| Word::from_symbols(v.to_vec()))
        .collect())
}

/// A square factor of `fi` whose root is not a conjugate of a Fibonacci
/// word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeeboldViolation {
    pub index: usize,
    pub root: Word,
    pub reason: &'static str,
}

pub fn check_seebold(i: FibIndex) -> Result<Vec<SeeboldViolation>> {
    let idx = i.within(1, MAX_SEEBOLD_INDEX)?;
    let f = fib_word(i)?;
    let mut out = Vec::new();
    for v in squares_in(&f)? {
        if !is_fib_number(v.len()) {
            out.push(SeeboldViolation {
                index: idx,
                root: v,
                reason: "square root length is not a Fibonacci number",
            });
            continue;
        }
        let conjugate = (1..=idx + 1)
            .filter(|&j| fib_number(j) == v.len())
            .any(|j| {
                let fj = fib_word(FibIndex(j)).expect("small index");
                CircularWord::new(&fj).expect("non-empty").contains(&v)
            });
        if !conjugate {
            out.push(SeeboldViolation {
                index: idx,
                root: v,
                reason: "square root is not a conjugate of a Fibonacci word",
            });
        }
    }
    Ok(out)
}

/// The trie of the circular word of `fi`.
pub fn fib_trie(i: FibIndex) -> Result<ConjugateTrie> {
    let f = fib_word(i)?;
    Ok(build_trie(&CircularWord::new(&f)?))
}

/// One branching node on each level `0 … |fi|-2`, none on `|fi|-1`.
pub fn check_fib_branching(i: FibIndex) -> Result<bool> {
    i.within(2, MAX_TRIE_INDEX)?;
    let t = fib_trie(i)?;
    let p = t.branching_profile();
    let n = t.depth();
    Ok((0..n.saturating_sub(1)).all(|k| p.at(k) == 1) && p.at(n - 1) == 0)
}

/// Level `k` of the trie holds `min(k + 1, |fi|)` nodes.
pub fn check_fib_factor_count(i: FibIndex) -> Result<bool> {
    i.within(2, MAX_TRIE_INDEX)?;
    let t = fib_trie(i)?;
    let n = t.depth();
    Ok(t
        .level_counts()
        .iter()
        .enumerate()
        .all(|(k, &c)| c == (k + 1).min(n)))
}

/// Every gap between consecutive branching nodes on a path is a Fibonacci
/// number.
pub fn check_fib_gaps(i: FibIndex) -> Result<bool> {
    i.within(2, MAX_TRIE_INDEX)?;
    Ok(fib_trie(i)?.branching_gaps().into_iter().all(is_fib_number))
}

pub fn check_fib_subtrees(i: FibIndex, j: FibIndex) -> Result<bool> {
    if i >= j {
        return Err(Error::PreconditionViolated("subtree check needs i < j"));
    }
    i.within(1, MAX_TRIE_INDEX)?;
    j.within(2, MAX_TRIE_INDEX)?;
    Ok(fib_trie(i)?.is_subtree_of(&fib_trie(j)?))
}
