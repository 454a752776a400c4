from qheegaard.braid_core import parse_braid
from qheegaard.checks import (
    check_euler,
    check_gradings,
    check_maslov_cycles,
    check_oracles,
    check_word_problem,
    read_corpus,
    run_entry,
)


def test_corpus_file(corpus, knot_corpus):
    assert len(knot_corpus) >= 25
    assert all(e.n <= 5 and len(e.braid()) <= 14 for e in corpus)
    words = {(e.n, e.braid().letters) for e in corpus}
    for text, n in [("s1", 2), ("s1^3", 2), ("s1^-3", 2), ("s1 s2^-1 s1 s2^-1", 3), ("s1^5", 2)]:
        assert (n, parse_braid(text, n).letters) in words
    names = {e.name for e in corpus}
    assert {"5_2", "6_1", "6_2", "6_3"} <= names


def test_read_corpus_skips_comments(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("# header\n\nk;3;s1 s2;;\n")
    (e,) = read_corpus(p)
    assert (e.name, e.n, e.word, e.expected_jones) == ("k", 3, "s1 s2", None)


def test_individual_checks_on_figure_eight():
    w = parse_braid("s1 s2^-1 s1 s2^-1", 3)
    assert check_oracles(w, expected_alexander="-x + 3 - x^-1")["ok"]
    g = check_gradings(w)
    assert g["ok"] and g["generators"] == 23
    assert check_euler(w)["ok"]
    assert check_maslov_cycles(w)["ok"]
    assert check_word_problem(w, relations=10, conjugations=5, seed=1)["ok"]


def test_oracle_check_catches_wrong_expectation():
    r = check_oracles(parse_braid("s1^3", 2), expected_jones="x")
    assert not r["ok"] and r["jones_oracle"] and not r["jones_expected"]


def test_run_entry_on_a_link(corpus):
    from qheegaard.checks import CorpusEntry

    r = run_entry(CorpusEntry("hopf", 2, "s1^2"))
    assert r["ok"] and "gradings" not in r
