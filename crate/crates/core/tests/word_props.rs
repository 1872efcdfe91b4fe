use std::collections::BTreeSet;

use circword_core::word::*;

fn binary(min: usize, max: usize) -> impl Iterator<Item = Word> {
    (min..=max).flat_map(|n| all_words(&['a', 'b'], n).collect::<Vec<_>>())
}

/// Period check straight from the definition.
fn brute_periods(w: &Word) -> BTreeSet<usize> {
    let s = w.symbols();
    (1..=s.len())
        .filter(|&p| (0..s.len() - p).all(|i| s[i] == s[i + p]))
        .collect()
}

fn brute_borders(w: &Word) -> BTreeSet<usize> {
    let s = w.symbols();
    (0..=s.len()).filter(|&b| s[..b] == s[s.len() - b..]).collect()
}

#[test]
fn shift_composes() {
    for w in binary(1, 10) {
        let n = w.len() as i64;
        for i in 0..2 * n {
            let once = shift(&w, i).unwrap();
            for j in 0..2 * n {
                assert_eq!(
                    shift(&once, j).unwrap(),
                    shift(&w, (i + j) % n).unwrap(),
                    "{w} {i} {j}"
                );
            }
        }
    }
}

#[test]
fn border_period_duality() {
    for w in binary(1, 12) {
        let bs = brute_borders(&w);
        let ps = brute_periods(&w);
        assert_eq!(borders(&w).unwrap().into_iter().collect::<BTreeSet<_>>(), bs);
        for b in 0..=w.len() {
            let p = w.len() - b;
            assert_eq!(bs.contains(&b), p == 0 || ps.contains(&p), "{w} {b}");
        }
        assert_eq!(periods(&w).unwrap().into_iter().collect::<BTreeSet<_>>(), ps);
        assert_eq!(min_period(&w).unwrap(), *ps.iter().next().unwrap());
    }
}

#[test]
fn primitive_root_regenerates_word() {
    for w in binary(1, 14) {
        let root = primitive_root(&w).unwrap();
        assert_eq!(fractional_power(&root, w.len()).unwrap(), w);
    }
}

#[test]
fn primitivity_matches_conjugate_count() {
    for w in binary(1, 12) {
        // Primitive iff not a proper integer power of a shorter word.
        let power = (1..w.len())
            .filter(|d| w.len() % d == 0)
            .any(|d| fractional_power(&w.prefix(d), w.len()).unwrap() == w);
        assert_eq!(is_primitive(&w).unwrap(), !power, "{w}");
        assert_eq!(conjugates(&w).unwrap().len() == w.len(), !power, "{w}");
    }
}

#[test]
fn conjugates_are_factors_of_square() {
    for w in binary(1, 12) {
        let ww = w.concat(&w);
        let factors: BTreeSet<Vec<char>> = ww
            .symbols()
            .windows(w.len())
            .map(<[char]>::to_vec)
            .collect();
        let conj = conjugates(&w).unwrap();
        let as_set: BTreeSet<Vec<char>> = conj.iter().map(|c| c.symbols().to_vec()).collect();
        assert_eq!(as_set.len(), conj.len(), "duplicates for {w}");
        assert_eq!(as_set, factors, "{w}");
        assert_eq!(conj[0], w);
    }
}

#[test]
fn canonical_rotation_against_sorting() {
    for w in binary(1, 10) {
        let rots: Vec<Word> = (0..w.len() as i64).map(|j| shift(&w, j).unwrap()).collect();
        let least = rots.iter().min().unwrap().clone();
        let first = rots.iter().position(|r| *r == least).unwrap();
        assert_eq!(canonical_rotation(&w).unwrap(), (least, first));
    }
}

#[test]
fn ls_check_agrees_with_equality() {
    let bs: Vec<Word> = binary(0, 6).collect();
    for x in binary(1, 4) {
        for y in all_words(&['a', 'b'], x.len()) {
            for b in &bs {
                let direct = x.concat(b) == b.concat(&y);
                match ls_check(&x, b, &y).unwrap() {
                    Some(wit) => {
                        assert!(direct);
                        assert!(wit.holds_for(&x, b, &y));
                        assert!(!wit.u.is_empty() || b.is_empty());
                    }
                    None => assert!(!direct, "{x} {b} {y}"),
                }
            }
        }
    }
}
