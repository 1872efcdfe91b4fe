//! Circular words and representations `(u, n)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{self, Word};

/// Marker used when a circular word is written out as text.
pub const CIRCULAR_PREFIX: &str = "o:";

/// The conjugacy class of a word, stored as its least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularWord {
    canonical: Word,
}

impl CircularWord {
    pub fn new(w: &Word) -> Result<Self> {
        let (canonical, _) = word::canonical_rotation(w)?;
        Ok(CircularWord { canonical })
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct conjugates, starting from the canonical one.
    pub fn members(&self) -> Vec<Word> {
        word::conjugates(&self.canonical).expect("canonical word is non-empty")
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.len()
            && word::canonical_rotation(w).is_ok_and(|(c, _)| c == self.canonical)
    }

    /// Periods of at least one member.
    pub fn weak_periods(&self) -> Vec<usize> {
        let mut all = BTreeSet::new();
        for m in self.members() {
            all.extend(word::periods(&m).expect("non-empty"));
        }
        all.into_iter().collect()
    }

    /// Periods of every member.
    pub fn strong_periods(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| self.members().iter().all(|m| word::has_period(m, p)))
            .collect()
    }

    pub fn min_weak_period(&self) -> usize {
        self.members()
            .iter()
            .map(|m| word::min_period(m).expect("non-empty"))
            .min()
            .expect("at least one member")
    }

    /// All representations whose root length is the least weak period,
    /// sorted by root.
    pub fn minimal_representations(&self) -> Vec<Representation> {
        let p = self.min_weak_period();
        let roots: BTreeSet<Word> = self
            .members()
            .into_iter()
            .filter(|m| word::has_period(m, p))
            .map(|m| m.prefix(p))
            .collect();
        roots
            .into_iter()
            .map(|root| Representation { root, n: self.len() })
            .collect()
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{CIRCULAR_PREFIX}{}", self.canonical)
    }
}

impl fmt::Debug for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircularWord({self})")
    }
}

impl FromStr for CircularWord {
    type Err = Error;

    /// Accepts any member, with or without the `o:` marker.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.strip_prefix(CIRCULAR_PREFIX).unwrap_or(s);
        CircularWord::new(&body.parse()?)
    }
}

impl Serialize for CircularWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CircularWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root word and a total length: stands for `root^(n/|root|)` read
/// circularly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub root: Word,
    pub n: usize,
}

impl Representation {
    pub fn new(root: Word, n: usize) -> Self {
        Representation { root, n }
    }

    pub fn expand(&self) -> Result<Word> {
        word::fractional_power(&self.root, self.n)
    }

    pub fn circular(&self) -> Result<CircularWord> {
        CircularWord::new(&self.expand()?)
    }

    pub fn represents(&self, cw: &CircularWord) -> bool {
        !self.root.is_empty()
            && self.root.len() <= self.n
            && self.n == cw.len()
            && self.expand().is_ok_and(|w| cw.contains(&w))
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.root, self.n)
    }
}

pub fn is_representation(rep: &Representation, cw: &CircularWord) -> bool {
    rep.represents(cw)
}

/// Drops the border `s` of length `border_len` from the end of `u = ys` and
/// returns `(y, 2|u| - |s|)`, a representation of the circular word of `uy`.
pub fn border_reduce(u: &Word, border_len: usize) -> Result<Representation> {
    let bs = word::borders(u)?;
    if border_len >= u.len() || !bs.contains(&border_len) {
        return Err(Error::NotABorder {
            word: u.to_string(),
            border_len,
        });
    }
    let y = u.prefix(u.len() - border_len);
    let rep = Representation {
        n: 2 * u.len() - border_len,
        root: y,
    };
    debug_assert!(rep.represents(&CircularWord::new(&u.concat(&rep.root)).unwrap()));
    Ok(rep)
}

/// Length of the longest border other than `u` itself (`0` if unbordered).
pub fn longest_proper_border(u: &Word) -> Result<usize> {
    let bs = word::borders(u)?;
    Ok(bs[bs.len() - 2])
}
