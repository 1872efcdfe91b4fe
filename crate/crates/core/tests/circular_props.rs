use std::collections::BTreeSet;

use circword_core::circular::{border_reduce, longest_proper_border};
use circword_core::word::{all_words, borders, fractional_power, shift};
use circword_core::{CircularWord, Representation, Word};

fn binary(min: usize, max: usize) -> impl Iterator<Item = Word> {
    (min..=max).flat_map(|n| all_words(&['a', 'b'], n).collect::<Vec<_>>())
}

fn circ(w: &Word) -> CircularWord {
    CircularWord::new(w).unwrap()
}

/// All rotations, by brute force.
fn rotations(w: &Word) -> BTreeSet<Word> {
    (0..w.len() as i64).map(|j| shift(w, j).unwrap()).collect()
}

/// Every representation of `cw` with the shortest possible root, found by
/// trying every root over the alphabet.
fn brute_minimal_roots(cw: &CircularWord) -> BTreeSet<Word> {
    let members = rotations(cw.canonical());
    let alphabet = cw.canonical().alphabet();
    for len in 1..=cw.len() {
        let roots: BTreeSet<Word> = all_words(&alphabet, len)
            .filter(|u| members.contains(&fractional_power(u, cw.len()).unwrap()))
            .collect();
        if !roots.is_empty() {
            return roots;
        }
    }
    unreachable!("the word itself is a root")
}

#[test]
fn minimal_representations_match_brute_force() {
    for w in binary(1, 10) {
        let cw = circ(&w);
        let got: BTreeSet<Word> = cw.minimal_representations().into_iter().map(|r| r.root).collect();
        assert_eq!(got, brute_minimal_roots(&cw), "{w}");
    }
}

#[test]
fn minimal_roots_have_least_weak_period_length() {
    for w in binary(1, 12) {
        let cw = circ(&w);
        let p = *cw.weak_periods().first().unwrap();
        let reps = cw.minimal_representations();
        assert!(!reps.is_empty());
        for r in &reps {
            assert_eq!(r.root.len(), p, "{w}");
            assert_eq!(r.n, w.len());
            assert!(r.represents(&cw));
        }
    }
}

#[test]
fn strong_periods_within_weak() {
    for w in binary(1, 10) {
        let cw = circ(&w);
        let weak: BTreeSet<usize> = cw.weak_periods().into_iter().collect();
        let strong = cw.strong_periods();
        assert!(strong.iter().all(|p| weak.contains(p)), "{w}");
        assert!(weak.contains(&w.len()) && strong.contains(&w.len()));
    }
}

#[test]
fn suffix_extension_keeps_root() {
    for u in binary(1, 4) {
        for m in 1..=2 {
            for cut in 1..=u.len() {
                let w = fractional_power(&u, m * u.len() + cut).unwrap();
                for k in 0..=3 {
                    let extended = w.concat(&fractional_power(&u, k * u.len()).unwrap());
                    let rep = Representation::new(u.clone(), w.len() + k * u.len());
                    assert!(rep.represents(&circ(&extended)), "{u} {m} {cut} {k}");
                }
            }
        }
    }
}

#[test]
fn rotations_of_dividing_minimal_roots_are_minimal() {
    for w in binary(1, 12) {
        let cw = circ(&w);
        let reps = cw.minimal_representations();
        let roots: BTreeSet<Word> = reps.iter().map(|r| r.root.clone()).collect();
        for r in reps.iter().filter(|r| r.n % r.root.len() == 0) {
            for rot in rotations(&r.root) {
                assert!(roots.contains(&rot), "{w}: {rot} missing");
            }
        }
    }
}

#[test]
fn border_reduction_sweep() {
    for u in binary(2, 10) {
        let longest = longest_proper_border(&u).unwrap();
        for s in borders(&u).unwrap().into_iter().filter(|&s| s > 0 && s < u.len()) {
            let rep = border_reduce(&u, s).unwrap();
            assert_eq!(rep.n, 2 * u.len() - s);
            assert_eq!(u.prefix(rep.root.len()), rep.root);
            let target = circ(&u.concat(&rep.root));
            assert!(rep.represents(&target), "{u} {s}");
            if s == longest {
                assert_eq!(rep.root.len(), target.min_weak_period(), "{u}");
            }
        }
    }
}

#[test]
fn json_uses_circular_marker() {
    let cw = circ(&Word::from("baaba"));
    let json = serde_json::to_string(&cw).unwrap();
    assert_eq!(json, "\"o:aabab\"");
    let back: CircularWord = serde_json::from_str(&json).unwrap();
    assert_eq!(back, cw);
}
