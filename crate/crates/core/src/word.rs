//! Linear words and the primitives every other module is built on.
//!
//! Symbols are `char`s ordered by code point. Positions are 0-based in code
//! even though the usual notation for a word is `w1 … wn`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of printable, non-whitespace symbols.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw symbols without validation.
    pub fn from_symbols(symbols: Vec<char>) -> Self {
        Word(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.len())].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Distinct symbols in code-point order.
    pub fn alphabet(&self) -> Vec<char> {
        let mut a = self.0.clone();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet().len() <= 2
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                if c.is_whitespace() || c.is_control() {
                    Err(Error::InvalidSymbol(c))
                } else {
                    Ok(c)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<&str> for Word {
    /// Panics on whitespace or control characters; use `str::parse` for
    /// untrusted input.
    fn from(s: &str) -> Self {
        s.parse().expect("invalid word literal")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cyclic shift by `l` positions: `w(1+r) … wn w1 … wr` with `r = l mod |w|`.
/// Negative amounts shift the other way.
pub fn shift(w: &Word, l: i64) -> Result<Word> {
    w.require_nonempty()?;
    let n = w.len() as i64;
    let r = l.rem_euclid(n) as usize;
    Ok(rotate(w, r))
}

pub(crate) fn rotate(w: &Word, r: usize) -> Word {
    let mut v = Vec::with_capacity(w.len());
    v.extend_from_slice(&w.0[r..]);
    v.extend_from_slice(&w.0[..r]);
    Word(v)
}

/// `w^(p/|w|)`: `floor(p/|w|)` copies of `w` followed by the prefix of
/// length `p mod |w|`. The result always has length `p`.
pub fn fractional_power(w: &Word, p: usize) -> Result<Word> {
    w.require_nonempty()?;
    Ok(Word(w.0.iter().copied().cycle().take(p).collect()))
}

/// Failure function: entry `i` is the length of the longest proper border
/// of `w[..=i]`.
pub fn border_table(w: &Word) -> Vec<usize> {
    let s = w.symbols();
    let mut table = vec![0; s.len()];
    for i in 1..s.len() {
        let mut b = table[i - 1];
        while b > 0 && s[i] != s[b] {
            b = table[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        table[i] = b;
    }
    table
}

/// All border lengths in ascending order, including the trivial ones `0`
/// and `|w|`.
pub fn borders(w: &Word) -> Result<Vec<usize>> {
    w.require_nonempty()?;
    let table = border_table(w);
    let mut out = vec![w.len()];
    let mut b = table[w.len() - 1];
    while b > 0 {
        out.push(b);
        b = table[b - 1];
    }
    out.push(0);
    out.reverse();
    Ok(out)
}

/// All periods in ascending order. `|w|` is always included.
pub fn periods(w: &Word) -> Result<Vec<usize>> {
    let n = w.len();
    Ok(borders(w)?
        .into_iter()
        .rev()
        .filter(|&b| b < n)
        .map(|b| n - b)
        .collect())
}

pub fn min_period(w: &Word) -> Result<usize> {
    w.require_nonempty()?;
    Ok(w.len() - border_table(w)[w.len() - 1])
}

pub fn has_period(w: &Word, p: usize) -> bool {
    p > 0 && w.0.iter().zip(w.0.iter().skip(p)).all(|(a, b)| a == b)
}

/// Prefix of length `min_period(w)`; its fractional power of length `|w|`
/// reproduces `w`.
pub fn primitive_root(w: &Word) -> Result<Word> {
    Ok(w.prefix(min_period(w)?))
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(rotation_order(w)? == w.len())
}

/// Number of distinct rotations: the smallest `d > 0` with `shift(w, d) = w`.
fn rotation_order(w: &Word) -> Result<usize> {
    let n = w.len();
    let p = min_period(w)?;
    Ok(if n.is_multiple_of(p) { p } else { n })
}

/// Distinct rotations in rotation-index order.
pub fn conjugates(w: &Word) -> Result<Vec<Word>> {
    let order = rotation_order(w)?;
    Ok((0..order).map(|j| rotate(w, j)).collect())
}

/// Lexicographically least rotation and the smallest index `j` such that
/// `shift(w, j)` equals it.
pub fn canonical_rotation(w: &Word) -> Result<(Word, usize)> {
    let order = rotation_order(w)?;
    let j = least_rotation_index(w.symbols()) % order;
    Ok((rotate(w, j), j))
}

fn least_rotation_index(s: &[char]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Witness for `xb = by`: `x = uv`, `y = vu`, `b = (uv)^k u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsWitness {
    pub u: Word,
    pub v: Word,
    pub k: usize,
}

impl LsWitness {
    /// Checks the three defining equations directly.
    pub fn holds_for(&self, x: &Word, b: &Word, y: &Word) -> bool {
        let uv = self.u.concat(&self.v);
        let mut rebuilt = Vec::new();
        for _ in 0..self.k {
            rebuilt.extend_from_slice(uv.symbols());
        }
        rebuilt.extend_from_slice(self.u.symbols());
        &uv == x && &self.v.concat(&self.u) == y && rebuilt == b.symbols()
    }
}

/// Decides `xb = by` and, when it holds, returns a decomposition witness.
///
/// `u` is non-empty whenever `b` is; for `b = ε` the witness is
/// `(ε, x, 0)`, since no non-empty `u` can satisfy `b = (uv)^k u`.
pub fn ls_check(x: &Word, b: &Word, y: &Word) -> Result<Option<LsWitness>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    x.require_nonempty()?;
    if x.concat(b) != b.concat(y) {
        return Ok(None);
    }
    let n = x.len();
    let witness = if b.is_empty() {
        LsWitness {
            u: Word::empty(),
            v: x.clone(),
            k: 0,
        }
    } else {
        let (q, r) = (b.len() / n, b.len() % n);
        if r == 0 {
            LsWitness {
                u: x.clone(),
                v: Word::empty(),
                k: q - 1,
            }
        } else {
            LsWitness {
                u: Word(x.0[..r].to_vec()),
                v: Word(x.0[r..].to_vec()),
                k: q,
            }
        }
    };
    debug_assert!(witness.holds_for(x, b, y));
    Ok(Some(witness))
}

/// Every word of length `len` over `alphabet`, in lexicographic order.
pub fn all_words(alphabet: &[char], len: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    let total = if k == 0 && len > 0 { 0 } else { k.pow(len as u32) };
    (0..total).map(move |mut idx| {
        let mut v = vec![alphabet[0]; len];
        for slot in v.iter_mut().rev() {
            *slot = alphabet[idx % k];
            idx /= k;
        }
        Word(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn brute_borders(w: &Word) -> Vec<usize> {
        let s = w.symbols();
        (0..=s.len())
            .filter(|&b| s[..b] == s[s.len() - b..])
            .collect()
    }

    fn brute_periods(w: &Word) -> Vec<usize> {
        let s = w.symbols();
        (1..=s.len())
            .filter(|&p| (0..s.len() - p).all(|i| s[i] == s[i + p]))
            .collect()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&w("abaab"), 1).unwrap(), w("baaba"));
        assert_eq!(shift(&w("abaab"), 0).unwrap(), w("abaab"));
        assert_eq!(shift(&w("abaab"), 5).unwrap(), w("abaab"));
        assert_eq!(shift(&w("baabba"), 4).unwrap(), w("babaab"));
        assert_eq!(shift(&w("abc"), -1).unwrap(), w("cab"));
        assert_eq!(shift(&Word::empty(), 1), Err(Error::EmptyWord));
        assert_eq!(Error::EmptyWord.to_string(), "empty word has no shift");
    }

    #[test]
    fn fractional_power_examples() {
        assert_eq!(fractional_power(&w("ab"), 5).unwrap(), w("ababa"));
        assert_eq!(fractional_power(&w("baa"), 4).unwrap(), w("baab"));
        assert_eq!(fractional_power(&w("abc"), 3).unwrap(), w("abc"));
        assert_eq!(fractional_power(&w("abc"), 0).unwrap(), Word::empty());
        assert_eq!(fractional_power(&w("abc"), 2).unwrap(), w("ab"));
        assert!(fractional_power(&Word::empty(), 3).is_err());
    }

    #[test]
    fn border_examples() {
        assert_eq!(borders(&w("abaab")).unwrap(), vec![0, 2, 5]);
        assert_eq!(borders(&w("aaa")).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(borders(&w("ab")).unwrap(), vec![0, 2]);
        assert!(borders(&Word::empty()).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(min_period(&w("ababa")).unwrap(), 2);
        assert_eq!(periods(&w("abaaab")).unwrap(), brute_periods(&w("abaaab")));
        assert_eq!(periods(&w("abaaab")).unwrap()[0], 4);
        assert_eq!(min_period(&w("baa")).unwrap(), 3);
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(&w("ababa")).unwrap(), w("ab"));
        assert_eq!(primitive_root(&w("baab")).unwrap(), w("baa"));
        assert_eq!(fractional_power(&w("baa"), 4).unwrap(), w("baab"));
        assert_eq!(primitive_root(&w("abc")).unwrap(), w("abc"));
    }

    #[test]
    fn primitivity_examples() {
        assert!(!is_primitive(&w("abab")).unwrap());
        assert!(is_primitive(&w("abaab")).unwrap());
        assert!(is_primitive(&w("a")).unwrap());
        assert!(!is_primitive(&w("aa")).unwrap());
        // Period 2 does not divide 5, so this is primitive.
        assert!(is_primitive(&w("ababa")).unwrap());
    }

    #[test]
    fn conjugate_examples() {
        let got: Vec<String> = conjugates(&w("abaab"))
            .unwrap()
            .iter()
            .map(Word::to_string)
            .collect();
        assert_eq!(got, ["abaab", "baaba", "aabab", "ababa", "babaa"]);
        let got: Vec<String> = conjugates(&w("aabbcac"))
            .unwrap()
            .iter()
            .map(Word::to_string)
            .collect();
        let mut expected = vec![
            "aabbcac", "abbcaca", "bbcacaa", "bcacaab", "cacaabb", "acaabbc", "caabbca",
        ];
        let mut sorted = got.clone();
        sorted.sort();
        expected.sort();
        assert_eq!(sorted, expected);
        assert_eq!(conjugates(&w("aa")).unwrap(), vec![w("aa")]);
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&w("baaba")).unwrap(), (w("aabab"), 1));
        assert_eq!(canonical_rotation(&w("abaab")).unwrap(), (w("aabab"), 2));
        assert_eq!(canonical_rotation(&w("aaa")).unwrap(), (w("aaa"), 0));
        assert_eq!(canonical_rotation(&w("ba")).unwrap(), (w("ab"), 1));
        assert_eq!(canonical_rotation(&w("baba")).unwrap(), (w("abab"), 1));
    }

    #[test]
    fn ls_check_examples() {
        let wit = ls_check(&w("ab"), &w("a"), &w("ba")).unwrap().unwrap();
        assert_eq!(
            wit,
            LsWitness {
                u: w("a"),
                v: w("b"),
                k: 0
            }
        );
        assert!(ls_check(&w("ab"), &Word::empty(), &w("ab")).unwrap().is_some());
        assert!(ls_check(&w("ab"), &Word::empty(), &w("ba")).unwrap().is_none());
        assert!(ls_check(&w("ab"), &w("b"), &w("ab")).unwrap().is_none());
        assert_eq!(
            ls_check(&w("ab"), &w("a"), &w("abc")),
            Err(Error::LengthMismatch { x: 2, y: 3 })
        );
        let wit = ls_check(&w("ab"), &w("abab"), &w("ab")).unwrap().unwrap();
        assert!(!wit.u.is_empty());
        assert!(wit.holds_for(&w("ab"), &w("abab"), &w("ab")));
    }

    #[test]
    fn symbols_are_validated() {
        assert_eq!("a b".parse::<Word>(), Err(Error::InvalidSymbol(' ')));
        assert_eq!("".parse::<Word>(), Ok(Word::empty()));
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(all_words(&['a', 'b'], 3).count(), 8);
        assert_eq!(all_words(&['a', 'b'], 0).collect::<Vec<_>>(), vec![Word::empty()]);
        assert_eq!(all_words(&['a', 'b'], 2).last(), Some(w("bb")));
    }

    fn binary_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::sample::select(vec!['a', 'b']), 1..=max)
            .prop_map(Word::from_symbols)
    }

    proptest! {
        #[test]
        fn border_table_matches_brute_force(w in binary_word(24)) {
            prop_assert_eq!(borders(&w).unwrap(), brute_borders(&w));
            prop_assert_eq!(periods(&w).unwrap(), brute_periods(&w));
        }

        #[test]
        fn canonical_rotation_is_least(w in prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 1..16).prop_map(Word::from_symbols)) {
            let (c, j) = canonical_rotation(&w).unwrap();
            let rots: Vec<Word> = (0..w.len()).map(|r| rotate(&w, r)).collect();
            let least = rots.iter().min().unwrap();
            prop_assert_eq!(&c, least);
            prop_assert_eq!(j, rots.iter().position(|r| r == least).unwrap());
        }
    }
}
