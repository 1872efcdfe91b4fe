//! Exhaustive sweeps over small inputs, one per claim. Every sweep returns
//! its violations as data; an empty list means the claim held on the whole
//! range.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circular::{border_reduce, longest_proper_border, CircularWord};
use crate::error::{Error, Result};
use crate::fibonacci::{self, FibIndex};
use crate::iterative::{self, greedy_encode};
use crate::trie::{self, build_trie};
use crate::word::{self, all_words, Word};

pub const DEFAULT_MAX_LEN: usize = 12;
pub const DEFAULT_FIB_MAX: usize = 12;
pub const ROUNDTRIP_RANDOM_SAMPLES: usize = 200;
pub const ROUNDTRIP_RANDOM_MAX_LEN: usize = 20;
const ROUNDTRIP_SEED: u64 = 0x00c1_2c01;
const LS_MAX_X: usize = 5;
const LS_MAX_B: usize = 8;
const BINARY: [char; 2] = ['a', 'b'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    Theorem1,
    Theorem2,
    Prop1,
    Cascade,
    Roundtrip,
    FibBranching,
    FibFactorCount,
    FibGaps,
    FibSubtree,
    Seebold,
    LsLemma,
    FactorSet,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Theorem1,
        SuiteId::Theorem2,
        SuiteId::Prop1,
        SuiteId::Cascade,
        SuiteId::Roundtrip,
        SuiteId::FibBranching,
        SuiteId::FibFactorCount,
        SuiteId::FibGaps,
        SuiteId::FibSubtree,
        SuiteId::Seebold,
        SuiteId::LsLemma,
        SuiteId::FactorSet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Theorem1 => "theorem1",
            SuiteId::Theorem2 => "theorem2",
            SuiteId::Prop1 => "prop1",
            SuiteId::Cascade => "cascade",
            SuiteId::Roundtrip => "roundtrip",
            SuiteId::FibBranching => "fib-branching",
            SuiteId::FibFactorCount => "fib-factor-count",
            SuiteId::FibGaps => "fib-gaps",
            SuiteId::FibSubtree => "fib-subtree",
            SuiteId::Seebold => "seebold",
            SuiteId::LsLemma => "ls-lemma",
            SuiteId::FactorSet => "factor-set",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub suite: String,
    pub input: String,
    pub detail: String,
}

impl Violation {
    fn new(suite: SuiteId, input: impl ToString, detail: impl Into<String>) -> Self {
        Violation {
            suite: suite.name().to_string(),
            input: input.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_len: usize,
    pub fib_max: usize,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_len: DEFAULT_MAX_LEN,
            fib_max: DEFAULT_FIB_MAX,
            jobs: 0,
        }
    }
}

/// Runs one suite. Violations come back sorted by input so the output does
/// not depend on scheduling.
pub fn run_suite(id: SuiteId, cfg: &VerifyConfig) -> Result<Vec<Violation>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool");
    let mut out = pool.install(|| dispatch(id, cfg))?;
    out.sort_by(|a, b| {
        (a.input.len(), &a.input, &a.detail).cmp(&(b.input.len(), &b.input, &b.detail))
    });
    Ok(out)
}

fn dispatch(id: SuiteId, cfg: &VerifyConfig) -> Result<Vec<Violation>> {
    match id {
        SuiteId::Theorem1 => Ok(theorem1(cfg.max_len)),
        SuiteId::Theorem2 => theorem2(cfg.max_len),
        SuiteId::Prop1 => prop1(cfg.max_len),
        SuiteId::Cascade => Ok(cascade(cfg.max_len, cfg.max_len)),
        SuiteId::Roundtrip => roundtrip(cfg.max_len),
        SuiteId::FibBranching => fib_check(id, cfg.fib_max, fibonacci::check_fib_branching),
        SuiteId::FibFactorCount => {
            fib_check(id, cfg.fib_max, fibonacci::check_fib_factor_count)
        }
        SuiteId::FibGaps => fib_check(id, cfg.fib_max, fibonacci::check_fib_gaps),
        SuiteId::FibSubtree => fib_subtree(cfg.fib_max),
        SuiteId::Seebold => seebold(cfg.fib_max),
        SuiteId::LsLemma => ls_lemma(cfg.max_len.min(LS_MAX_X), cfg.max_len.min(LS_MAX_B)),
        SuiteId::FactorSet => Ok(factor_set(cfg.max_len)),
    }
}

fn binary_words(min_len: usize, max_len: usize) -> Vec<Word> {
    (min_len..=max_len)
        .flat_map(|n| all_words(&BINARY, n))
        .collect()
}

fn circ(w: &Word) -> CircularWord {
    CircularWord::new(w).expect("non-empty")
}

/// Border reduction: `(y, 2|u| - |s|)` represents the circular word of
/// `uy`, and is minimal when `s` is the longest proper border.
pub fn theorem1(max_len: usize) -> Vec<Violation> {
    const ID: SuiteId = SuiteId::Theorem1;
    binary_words(2, max_len)
        .par_iter()
        .flat_map_iter(|u| {
            let mut out = Vec::new();
            let longest = longest_proper_border(u).expect("non-empty");
            for s in word::borders(u).expect("non-empty") {
                if s == 0 || s == u.len() {
                    continue;
                }
                let rep = border_reduce(u, s).expect("s is a border");
                let target = circ(&u.concat(&rep.root));
                if !rep.represents(&target) {
                    out.push(Violation::new(ID, u, format!("border {s}: {rep} does not represent {target}")));
                }
                if s == longest && rep.root.len() != target.min_weak_period() {
                    out.push(Violation::new(
                        ID,
                        u,
                        format!(
                            "longest border {s}: |y| = {} but least weak period of {target} is {}",
                            rep.root.len(),
                            target.min_weak_period()
                        ),
                    ));
                }
            }
            out
        })
        .collect()
}

pub fn theorem2(max_len: usize) -> Result<Vec<Violation>> {
    const ID: SuiteId = SuiteId::Theorem2;
    let report = iterative::minimal_root_length_bound_check(max_len)?;
    let mut out: Vec<Violation> = report
        .long_roots
        .iter()
        .map(|w| {
            let rep = greedy_encode(&circ(w));
            Violation::new(ID, w, format!("greedy root {} longer than 2 ({rep})", rep.root))
        })
        .collect();
    out.extend(
        report
            .unbordered_classes
            .iter()
            .map(|w| Violation::new(ID, w, "no conjugate has a non-trivial border")),
    );
    Ok(out)
}

pub fn prop1(max_len: usize) -> Result<Vec<Violation>> {
    const ID: SuiteId = SuiteId::Prop1;
    let words: Vec<Word> = binary_words(1, max_len)
        .into_iter()
        .filter(|w| word::is_primitive(w).expect("non-empty"))
        .collect();
    words
        .par_iter()
        .map(|w| {
            let t = build_trie(&circ(w));
            Ok((!trie::check_level_n_minus_2(&t)?).then(|| {
                Violation::new(ID, w, format!("profile {:?}", t.branching_profile().counts))
            }))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

/// Branching cascade on words up to `max_len`, plus the profile/lcp-witness
/// equivalence on words up to `lcp_max_len`.
pub fn cascade(max_len: usize, lcp_max_len: usize) -> Vec<Violation> {
    const ID: SuiteId = SuiteId::Cascade;
    binary_words(1, max_len.max(lcp_max_len))
        .par_iter()
        .flat_map_iter(|w| {
            let mut out = Vec::new();
            let cw = circ(w);
            let t = build_trie(&cw);
            let profile = t.branching_profile();
            if w.len() <= max_len && !trie::check_branching_cascade(&t) {
                out.push(Violation::new(ID, w, format!("gap in profile {:?}", profile.counts)));
            }
            if w.len() <= lcp_max_len {
                for level in 0..w.len() {
                    let witness = trie::lcp_branching_witness(&cw, level).is_some();
                    if witness != (profile.at(level) >= 1) {
                        out.push(Violation::new(
                            ID,
                            w,
                            format!(
                                "level {level}: {} branching nodes but witness present = {witness}",
                                profile.at(level)
                            ),
                        ));
                    }
                }
            }
            out
        })
        .collect()
}

fn roundtrip_one(w: &Word) -> Option<Violation> {
    let cw = circ(w);
    let rep = greedy_encode(&cw);
    match rep.decode() {
        Ok(back) if back == cw && rep.is_strictly_monotone() => None,
        Ok(back) => Some(Violation::new(
            SuiteId::Roundtrip,
            w,
            format!("{rep} decodes to {back}, expected {cw}"),
        )),
        Err(e) => Some(Violation::new(SuiteId::Roundtrip, w, format!("{rep}: {e}"))),
    }
}

/// Fixed-seed sample of ternary words used by the round-trip suite.
pub fn roundtrip_random_words() -> Vec<Word> {
    let mut rng = StdRng::seed_from_u64(ROUNDTRIP_SEED);
    (0..ROUNDTRIP_RANDOM_SAMPLES)
        .map(|_| {
            let len = rng.random_range(1..=ROUNDTRIP_RANDOM_MAX_LEN);
            Word::from_symbols((0..len).map(|_| ['a', 'b', 'c'][rng.random_range(0..3)]).collect())
        })
        .collect()
}

pub fn roundtrip(max_len: usize) -> Result<Vec<Violation>> {
    let mut words = binary_words(1, max_len);
    words.extend(roundtrip_random_words());
    Ok(words.par_iter().filter_map(roundtrip_one).collect())
}

fn fib_check(
    id: SuiteId,
    fib_max: usize,
    check: fn(FibIndex) -> Result<bool>,
) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for i in 2..=fib_max {
        let idx = FibIndex::new(i)?;
        if !check(idx)? {
            let t = fibonacci::fib_trie(idx)?;
            out.push(Violation::new(
                id,
                format!("f{i}"),
                format!(
                    "profile {:?}, level counts {:?}, gaps {:?}",
                    t.branching_profile().counts,
                    t.level_counts(),
                    t.branching_gaps()
                ),
            ));
        }
    }
    Ok(out)
}

fn fib_subtree(fib_max: usize) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for j in 2..=fib_max {
        for i in 1..j {
            if !fibonacci::check_fib_subtrees(FibIndex::new(i)?, FibIndex::new(j)?)? {
                out.push(Violation::new(
                    SuiteId::FibSubtree,
                    format!("f{i}<f{j}"),
                    "not a root-anchored subtree",
                ));
            }
        }
    }
    Ok(out)
}

fn seebold(fib_max: usize) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for i in 3..=fib_max {
        for v in fibonacci::check_seebold(FibIndex::new(i)?)? {
            out.push(Violation::new(
                SuiteId::Seebold,
                format!("f{i}"),
                format!("square root {}: {}", v.root, v.reason),
            ));
        }
    }
    Ok(out)
}

/// Compares `ls_check` against direct evaluation of `xb = by` on binary
/// triples.
pub fn ls_lemma(max_x: usize, max_b: usize) -> Result<Vec<Violation>> {
    const ID: SuiteId = SuiteId::LsLemma;
    let xs = binary_words(1, max_x);
    let bs = binary_words(0, max_b);
    xs.par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for y in all_words(&BINARY, x.len()) {
                for b in &bs {
                    let direct = x.concat(b) == b.concat(&y);
                    let input = format!("{x},{b},{y}");
                    match word::ls_check(x, b, &y)? {
                        Some(wit) if !direct => {
                            out.push(Violation::new(ID, input, format!("witness {wit:?} but xb != by")))
                        }
                        Some(wit) if !wit.holds_for(x, b, &y) => {
                            out.push(Violation::new(ID, input, format!("witness {wit:?} fails")))
                        }
                        None if direct => out.push(Violation::new(ID, input, "missed xb = by")),
                        _ => {}
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn factors(w: &Word, k: usize) -> BTreeSet<Vec<char>> {
    w.symbols().windows(k.max(1)).map(|f| f[..k].to_vec()).collect()
}

/// Members are the length-`|w|` factors of `ww`, and trie level `k` has one
/// node per distinct length-`k` factor of `ww`.
pub fn factor_set(max_len: usize) -> Vec<Violation> {
    const ID: SuiteId = SuiteId::FactorSet;
    binary_words(1, max_len)
        .par_iter()
        .flat_map_iter(|w| {
            let mut out = Vec::new();
            let ww = w.concat(w);
            let n = w.len();
            let members: BTreeSet<Vec<char>> = word::conjugates(w)
                .expect("non-empty")
                .into_iter()
                .map(|c| c.symbols().to_vec())
                .collect();
            // `ww` minus its last symbol has exactly the n rotations as
            // its length-n windows.
            let wrapped = ww.prefix(2 * n - 1);
            if members != factors(&wrapped, n) {
                out.push(Violation::new(ID, w, "conjugates differ from length-|w| factors of ww"));
            }
            let counts = build_trie(&circ(w)).level_counts();
            for (k, &c) in counts.iter().enumerate() {
                let expected = if k == 0 { 1 } else { factors(&ww, k).len() };
                if c != expected {
                    out.push(Violation::new(
                        ID,
                        w,
                        format!("level {k}: {c} nodes, {expected} distinct factors"),
                    ));
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert!("theorem3".parse::<SuiteId>().is_err());
    }

    #[test]
    fn small_sweeps_are_clean() {
        let cfg = VerifyConfig {
            max_len: 7,
            fib_max: 8,
            jobs: 2,
        };
        for id in SuiteId::ALL {
            let found = run_suite(id, &cfg).unwrap();
            if id == SuiteId::FibSubtree {
                // The one-letter words f1 = b and f2 = a share no edge.
                let inputs: Vec<&str> = found.iter().map(|v| v.input.as_str()).collect();
                assert_eq!(inputs, ["f1<f2"]);
            } else {
                assert_eq!(found, vec![], "{id}");
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let cfg = VerifyConfig {
            max_len: 17,
            ..Default::default()
        };
        assert!(run_suite(SuiteId::Theorem2, &cfg).is_err());
        let cfg = VerifyConfig {
            fib_max: 13,
            ..Default::default()
        };
        assert!(run_suite(SuiteId::FibGaps, &cfg).is_err());
    }

    #[test]
    fn random_sample_is_fixed() {
        let a = roundtrip_random_words();
        assert_eq!(a.len(), ROUNDTRIP_RANDOM_SAMPLES);
        assert_eq!(a, roundtrip_random_words());
        assert!(a.iter().all(|w| (1..=20).contains(&w.len())));
    }
}
