"""Smoke test for the circword extension module."""

import circword


def main():
    cw = circword.CircularWord("baaba")
    assert str(cw) == "o:aabab"
    assert cw == circword.CircularWord("o:abaab")
    assert "abaab" in cw and len(cw) == 5
    assert cw.minimal_representations()[0] == ("ab", 5)
    assert circword.canonical_rotation("baaba") == ("aabab", 1)
    assert circword.periods("abaab") == [3, 5]

    rep = circword.encode("ababaa")
    assert str(rep) == "ab,3,0,4,0,6"
    assert str(circword.encode_optimal("ababaa")) == "ab,5,0,6"
    assert str(circword.decode("baa,4,0,6,4,14")) == "o:aabbabaabbabab"
    back = circword.IterativeRepresentation.from_json(rep.to_json())
    assert back == rep and back.to_json() == rep.to_json()

    t = circword.fib_trie(5)
    assert t.branching_profile() == [1, 1, 1, 1, 0]
    assert t.check_cascade() and t.check_level_n_minus_2()
    assert circword.fib_word(5) == "abaab"
    assert circword.check_fib_gaps(8)
    assert circword.verify("theorem2", max_len=10) == []

    for bad in (lambda: circword.decode("ab,3,x,5"), lambda: circword.fib_word(0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    print("smoke test ok")


if __name__ == "__main__":
    main()
