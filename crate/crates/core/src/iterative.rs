//! Iterative representations `(u, l1, k1, …, l(m-1), k(m-1), lm)`.
//!
//! Decoding starts from `u0 = u` and repeats `ui = shift(u(i-1)^(li/|u(i-1)|), ki)`;
//! the circular word is that of `u(m-1)^(lm/l(m-1))`. Encoding runs the same
//! chain backwards, replacing a word by a shorter root of one of its
//! conjugates.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circular::CircularWord;
use crate::error::{Error, Result};
use crate::word::{self, Word};

/// Default bound on the length accepted by [`optimal_encode`].
pub const DEFAULT_GUARD: usize = 24;

/// Largest word length [`minimal_root_length_bound_check`] will sweep.
pub const BOUND_CHECK_MAX: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IterativeRepresentation {
    pub root: Word,
    /// `(li, ki)` for levels `1 … m-1`.
    pub steps: Vec<(usize, usize)>,
    pub final_len: usize,
}

impl IterativeRepresentation {
    pub fn new(root: Word, steps: Vec<(usize, usize)>, final_len: usize) -> Self {
        IterativeRepresentation {
            root,
            steps,
            final_len,
        }
    }

    /// Number of fractional-power applications.
    pub fn m(&self) -> usize {
        self.steps.len() + 1
    }

    /// The words `u0 … u(m-1)`.
    pub fn intermediates(&self) -> Result<Vec<Word>> {
        if self.root.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut words = vec![self.root.clone()];
        for &(len, k) in &self.steps {
            let current = words.last().unwrap();
            if len < current.len() {
                return Err(Error::NonMonotoneChain {
                    len,
                    current: current.len(),
                });
            }
            let grown = word::fractional_power(current, len)?;
            words.push(word::rotate(&grown, k % len));
        }
        Ok(words)
    }

    /// `u(m-1)^(lm/l(m-1))` as a linear word of length `final_len`.
    pub fn expand(&self) -> Result<Word> {
        let words = self.intermediates()?;
        let last = words.last().unwrap();
        if self.final_len < last.len() || self.final_len == 0 {
            return Err(Error::NonMonotoneChain {
                len: self.final_len,
                current: last.len(),
            });
        }
        word::fractional_power(last, self.final_len)
    }

    pub fn decode(&self) -> Result<CircularWord> {
        CircularWord::new(&self.expand()?)
    }

    /// Decodes to a linear word, applying one last shift.
    pub fn decode_linear(&self, final_shift: usize) -> Result<Word> {
        let w = self.expand()?;
        Ok(word::rotate(&w, final_shift % w.len()))
    }

    /// `|root| < l1 < … < lm` (for `m = 1` only `|root| <= lm` is required).
    pub fn is_strictly_monotone(&self) -> bool {
        let mut lens = vec![self.root.len()];
        lens.extend(self.steps.iter().map(|s| s.0));
        if self.steps.is_empty() {
            return self.root.len() <= self.final_len;
        }
        lens.push(self.final_len);
        lens.windows(2).all(|w| w[0] < w[1])
            && self.steps.iter().all(|&(l, k)| k < l)
    }

    /// Serialized integer fields after the root.
    pub fn fields(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.steps.iter().flat_map(|&(l, k)| [l, k]).collect();
        out.push(self.final_len);
        out
    }

    fn from_fields(root: Word, fields: &[usize]) -> Self {
        let (last, rest) = fields.split_last().expect("at least final_len");
        IterativeRepresentation {
            root,
            steps: rest.chunks(2).map(|c| (c[0], c[1])).collect(),
            final_len: *last,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for IterativeRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)?;
        for x in self.fields() {
            write!(f, ",{x}")?;
        }
        Ok(())
    }
}

impl FromStr for IterativeRepresentation {
    type Err = Error;

    /// Parses `root,l1,k1,…,lm`. Field numbers in errors are 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(',').collect();
        if parts.len() < 2 {
            return Err(Error::Tuple("expected at least a root and a final length"));
        }
        if !parts.len().is_multiple_of(2) {
            return Err(Error::Tuple("expected an even number of fields"));
        }
        let root: Word = parts[0].parse().map_err(|_| Error::TupleField {
            field: 1,
            text: parts[0].to_string(),
            reason: "invalid symbol in root",
        })?;
        if root.is_empty() {
            return Err(Error::TupleField {
                field: 1,
                text: String::new(),
                reason: "root must be non-empty",
            });
        }
        let fields = parts[1..]
            .iter()
            .enumerate()
            .map(|(i, t)| {
                t.trim().parse::<usize>().map_err(|_| Error::TupleField {
                    field: i + 2,
                    text: t.to_string(),
                    reason: "expected a non-negative integer",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_fields(root, &fields))
    }
}

/// One greedy reduction of a linear word `u`: the least weak period `p` of
/// its circular word, the first conjugate `shift(u, j)` whose least period
/// is `p`, and its length-`p` prefix `v`. Returns `(v, k)` with
/// `u = shift(v^(|u|/p), k)`, or `None` when no conjugate has a shorter
/// period.
pub fn reduce_step(u: &Word) -> Option<(Word, usize)> {
    let n = u.len();
    if n == 0 {
        return None;
    }
    let mut best: Option<(usize, usize)> = None;
    for j in 0..n {
        let c = word::rotate(u, j);
        let p = word::min_period(&c).expect("non-empty");
        if best.is_none_or(|(bp, _)| p < bp) {
            best = Some((p, j));
        }
    }
    let (p, j) = best.unwrap();
    if p == n {
        return None;
    }
    let v = word::rotate(u, j).prefix(p);
    Some((v, (n - j) % n))
}

/// Greedy encoder: reduce the canonical member until a minimal root is
/// reached. The outermost level records only the total length.
pub fn greedy_encode(cw: &CircularWord) -> IterativeRepresentation {
    let rep = IterativeRepresentation::new(cw.canonical().clone(), Vec::new(), cw.len());
    match reduce_step(&rep.root) {
        Some((v, _)) => greedy_refine(&IterativeRepresentation::new(v, Vec::new(), cw.len())),
        None => rep,
    }
}

/// Continues greedy reduction from the root of an existing representation,
/// keeping its outer steps.
pub fn greedy_refine(rep: &IterativeRepresentation) -> IterativeRepresentation {
    let mut u = rep.root.clone();
    let mut inner = Vec::new();
    while let Some((v, k)) = reduce_step(&u) {
        inner.push((u.len(), k));
        u = v;
    }
    inner.reverse();
    inner.extend_from_slice(&rep.steps);
    IterativeRepresentation::new(u, inner, rep.final_len)
}

/// Exhaustive encoder. Minimizes root length, then `m`, then the tuple
/// (root first, then the integer fields).
///
/// Breadth-first search backwards from the members of `cw`: layer `d` holds
/// every word that can serve as `u0` of a `d`-level representation, each
/// with the least field suffix reaching it.
pub fn optimal_encode(cw: &CircularWord, guard: usize) -> Result<IterativeRepresentation> {
    let n = cw.len();
    if n > guard {
        return Err(Error::GuardExceeded { len: n, guard });
    }
    let mut layer: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
    for c in cw.members() {
        for p in word::periods(&c)? {
            layer.entry(c.prefix(p)).or_insert_with(|| vec![n]);
        }
    }
    let mut seen: HashSet<Word> = layer.keys().cloned().collect();
    let mut best: Option<(usize, Word, Vec<usize>)> = None;

    while !layer.is_empty() {
        for (x, suffix) in &layer {
            // Layers are visited in increasing m, and the BTreeMap yields
            // roots in order, so only a strictly shorter root can win.
            if best.as_ref().is_none_or(|(len, _, _)| x.len() < *len) {
                best = Some((x.len(), x.clone(), suffix.clone()));
            }
        }
        let mut next: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
        for (x, suffix) in &layer {
            // A full-length member is never worth growing from: its own
            // reductions already sit in the first layer.
            if x.len() == n {
                continue;
            }
            for j in 0..x.len() {
                let c = word::rotate(x, j);
                let k = (x.len() - j) % x.len();
                for p in word::periods(&c)? {
                    if p == x.len() {
                        continue;
                    }
                    let v = c.prefix(p);
                    if seen.contains(&v) {
                        continue;
                    }
                    let mut cand = vec![x.len(), k];
                    cand.extend_from_slice(suffix);
                    next.entry(v)
                        .and_modify(|s| {
                            if cand < *s {
                                *s = cand.clone();
                            }
                        })
                        .or_insert(cand);
                }
            }
        }
        seen.extend(next.keys().cloned());
        layer = next;
    }
    let (_, root, fields) = best.expect("the canonical member is always a candidate");
    Ok(IterativeRepresentation::from_fields(root, &fields))
}

/// Outcome of the root-length sweep over binary words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Binary words whose greedy root is longer than 2.
    pub long_roots: Vec<Word>,
    /// Binary words of length at least 3 with no bordered conjugate.
    pub unbordered_classes: Vec<Word>,
}

impl BoundReport {
    pub fn is_clean(&self) -> bool {
        self.long_roots.is_empty() && self.unbordered_classes.is_empty()
    }
}

/// Sweeps every binary word of length `2..=max_n`: the greedy root must have
/// length at most 2, and every word of length at least 3 must have a
/// conjugate with a non-trivial border.
pub fn minimal_root_length_bound_check(max_n: usize) -> Result<BoundReport> {
    if max_n > BOUND_CHECK_MAX {
        return Err(Error::OutOfRange {
            index: max_n,
            min: 2,
            max: BOUND_CHECK_MAX,
        });
    }
    let mut report = BoundReport::default();
    for len in 2..=max_n {
        let words: Vec<Word> = word::all_words(&['a', 'b'], len).collect();
        let found: Vec<(Option<Word>, Option<Word>)> = words
            .par_iter()
            .map(|w| {
                let cw = CircularWord::new(w).expect("non-empty");
                let long = (greedy_encode(&cw).root.len() > 2).then(|| w.clone());
                let unbordered = (len >= 3 && cw.min_weak_period() == len).then(|| w.clone());
                (long, unbordered)
            })
            .collect();
        for (long, unbordered) in found {
            report.long_roots.extend(long);
            report.unbordered_classes.extend(unbordered);
        }
    }
    Ok(report)
}

/// First conjugate of `u` with a non-trivial border, if any.
pub fn bordered_conjugate(u: &Word) -> Option<Word> {
    (0..u.len())
        .map(|j| word::rotate(u, j))
        .find(|c| word::min_period(c).is_ok_and(|p| p < c.len()))
}
