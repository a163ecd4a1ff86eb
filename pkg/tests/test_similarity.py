import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_lcs, brute_force_repeats
from rpaclone.errors import RpaCloneError
from rpaclone.model import MetaProcess
from rpaclone.similarity import (
    find_matches_pairwise,
    find_matches_repeats,
    histogram,
    pairwise_lcs,
)


def mp(pid, tokens):
    return MetaProcess(process_id=pid, tokens=list(tokens))


def random_corpus(rng, max_procs=6, max_len=25, alphabet=8):
    count = rng.randrange(2, max_procs + 1)
    return [
        mp(f"P{i}", [chr(97 + rng.randrange(alphabet)) for _ in range(rng.randrange(max_len + 1))])
        for i in range(count)
    ]


class TestPairwiseLcs:
    def test_identical_inputs(self):
        runs = pairwise_lcs(mp("a", "ABC"), mp("b", "ABC"))
        assert len(runs) == 1
        assert runs[0].tokens == ("A", "B", "C")
        assert runs[0].offsets_a == (0,)
        assert runs[0].offsets_b == (0,)

    def test_disjoint_alphabets(self):
        assert pairwise_lcs(mp("a", "AB"), mp("b", "CD")) == []

    def test_interior_match_with_offsets(self):
        runs = pairwise_lcs(mp("a", "XABCY"), mp("b", "ZABC"))
        assert len(runs) == 1
        assert runs[0].tokens == ("A", "B", "C")
        assert runs[0].offsets_a == (1,)
        assert runs[0].offsets_b == (1,)

    def test_all_tied_sequences_reported(self):
        runs = pairwise_lcs(mp("a", ["x", "y", "q", "u", "v"]), mp("b", ["x", "y", "w", "u", "v"]))
        assert {r.tokens for r in runs} == {("x", "y"), ("u", "v")}

    def test_empty_inputs_allowed(self):
        assert pairwise_lcs(mp("a", []), mp("b", "ABC")) == []

    def test_symmetric_length(self, kernel_backend):
        rng = random.Random(5)
        for _ in range(30):
            a = mp("a", [chr(97 + rng.randrange(5)) for _ in range(rng.randrange(30))])
            b = mp("b", [chr(97 + rng.randrange(5)) for _ in range(rng.randrange(30))])
            ra, rb = pairwise_lcs(a, b), pairwise_lcs(b, a)
            la = len(ra[0].tokens) if ra else 0
            lb = len(rb[0].tokens) if rb else 0
            assert la == lb

    def test_matches_dp_oracle(self, kernel_backend):
        rng = random.Random(11)
        for _ in range(60):
            a = [chr(97 + rng.randrange(6)) for _ in range(rng.randrange(40))]
            b = [chr(97 + rng.randrange(6)) for _ in range(rng.randrange(40))]
            runs = pairwise_lcs(mp("a", a), mp("b", b))
            got = {r.tokens: (frozenset(r.offsets_a), frozenset(r.offsets_b)) for r in runs}
            assert got == brute_force_lcs(a, b)


class TestFindMatchesPairwise:
    def test_spec_example(self):
        ms = find_matches_pairwise([mp("P1", "abcd"), mp("P2", "xabc")], 3)
        assert len(ms.matches) == 1
        m = ms.matches[0]
        assert m.tokens == ("a", "b", "c")
        assert [(o.process_id, o.offset) for o in m.occurrences] == [("P1", 0), ("P2", 1)]

    def test_below_threshold_dropped(self):
        ms = find_matches_pairwise([mp("P1", "ab"), mp("P2", "ab")], 3)
        assert ms.matches == []

    def test_single_process_is_error(self):
        with pytest.raises(RpaCloneError, match="at least two"):
            find_matches_pairwise([mp("P1", "abc")], 3)

    def test_identical_sequences_merged_across_pairs(self):
        metas = [mp("P1", "abcd"), mp("P2", "abcx"), mp("P3", "abcy")]
        ms = find_matches_pairwise(metas, 3)
        abc = [m for m in ms.matches if m.tokens == ("a", "b", "c")]
        assert len(abc) == 1
        assert abc[0].process_count == 3

    def test_subset_soundness_vs_repeats(self, kernel_backend):
        # every pairwise match is a substring of some repeats match
        rng = random.Random(21)
        for _ in range(25):
            metas = random_corpus(rng)
            pw = find_matches_pairwise(metas, 3)
            rp = find_matches_repeats(metas, 3)
            repeat_strings = ["\x00".join(m.tokens) for m in rp.matches]
            for m in pw.matches:
                needle = "\x00".join(m.tokens)
                assert any(needle in s for s in repeat_strings), m.tokens


class TestFindMatchesRepeats:
    def test_spec_example(self):
        metas = [mp("P1", "abcd"), mp("P2", "xabc"), mp("P3", "bcd")]
        ms = find_matches_repeats(metas, 3)
        got = {
            m.tokens: [(o.process_id, o.offset) for o in m.occurrences] for m in ms.matches
        }
        assert got == {
            ("a", "b", "c"): [("P1", 0), ("P2", 1)],
            ("b", "c", "d"): [("P1", 1), ("P3", 0)],
        }

    def test_two_identical_processes_yield_one_full_match(self):
        metas = [mp("P1", "abcde"), mp("P2", "abcde")]
        ms = find_matches_repeats(metas, 3)
        assert len(ms.matches) == 1
        assert ms.matches[0].tokens == ("a", "b", "c", "d", "e")

    def test_threshold_respected(self, kernel_backend):
        rng = random.Random(31)
        for _ in range(20):
            metas = random_corpus(rng)
            ms = find_matches_repeats(metas, 3)
            assert all(m.length >= 3 for m in ms.matches)

    def test_no_cross_boundary_matches(self):
        # shared content at a process boundary must not bridge processes
        metas = [mp("P1", "abc"), mp("P2", "def"), mp("P3", ["a", "b", "c", "d", "e", "f"])]
        ms = find_matches_repeats(metas, 3)
        tokens = {m.tokens for m in ms.matches}
        assert ("a", "b", "c", "d") not in tokens
        assert ("a", "b", "c") in tokens and ("d", "e", "f") in tokens

    def test_intra_process_repeats_excluded_by_default(self):
        metas = [mp("P1", "abcXabc"), mp("P2", "zzzz")]
        assert find_matches_repeats(metas, 3).matches == []
        ms = find_matches_repeats(metas, 3, allow_intra=True)
        assert {m.tokens for m in ms.matches} == {("a", "b", "c"), ("z", "z", "z")}

    def test_occurrences_verify_by_slice(self, kernel_backend):
        rng = random.Random(41)
        for _ in range(20):
            metas = random_corpus(rng)
            by_id = {m.process_id: m.tokens for m in metas}
            ms = find_matches_repeats(metas, 3)
            for m in ms.matches:
                for o in m.occurrences:
                    assert tuple(by_id[o.process_id][o.offset : o.offset + m.length]) == m.tokens

    def test_maximality(self, kernel_backend):
        rng = random.Random(51)
        for _ in range(20):
            metas = random_corpus(rng)
            by_id = {m.process_id: m.tokens for m in metas}
            ms = find_matches_repeats(metas, 3)
            for m in ms.matches:
                lefts = {
                    by_id[o.process_id][o.offset - 1] if o.offset > 0 else ("<start>", o.process_id)
                    for o in m.occurrences
                }
                rights = {
                    by_id[o.process_id][o.offset + m.length]
                    if o.offset + m.length < len(by_id[o.process_id])
                    else ("<end>", o.process_id)
                    for o in m.occurrences
                }
                assert len(lefts) >= 2 or any(isinstance(x, tuple) for x in lefts)
                assert len(rights) >= 2 or any(isinstance(x, tuple) for x in rights)

    def test_matches_brute_force_oracle(self, kernel_backend):
        rng = random.Random(61)
        for _ in range(60):
            metas = random_corpus(rng)
            ms = find_matches_repeats(metas, 3)
            got = {
                m.tokens: frozenset((o.process_id, o.offset) for o in m.occurrences)
                for m in ms.matches
            }
            expected = brute_force_repeats([(m.process_id, m.tokens) for m in metas], 3)
            assert got == expected

    def test_allow_intra_matches_oracle(self, kernel_backend):
        rng = random.Random(71)
        for _ in range(40):
            metas = random_corpus(rng)
            ms = find_matches_repeats(metas, 3, allow_intra=True)
            got = {
                m.tokens: frozenset((o.process_id, o.offset) for o in m.occurrences)
                for m in ms.matches
            }
            expected = brute_force_repeats(
                [(m.process_id, m.tokens) for m in metas], 3, allow_intra=True
            )
            assert got == expected

    def test_canonical_order_and_fingerprint_stable(self):
        metas = [mp("P1", "abcdef"), mp("P2", "abcxef"), mp("P3", "abc")]
        a = find_matches_repeats(metas, 3)
        b = find_matches_repeats(metas, 3)
        assert a == b
        assert a.corpus_fingerprint
        lengths = [m.length for m in a.matches]
        assert lengths == sorted(lengths, reverse=True)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.sampled_from("abcde"), max_size=15),
        min_size=2,
        max_size=4,
    ),
    st.integers(min_value=2, max_value=4),
)
def test_repeats_oracle_property(token_lists, min_length):
    metas = [mp(f"P{i}", toks) for i, toks in enumerate(token_lists)]
    ms = find_matches_repeats(metas, min_length)
    got = {
        m.tokens: frozenset((o.process_id, o.offset) for o in m.occurrences)
        for m in ms.matches
    }
    assert got == brute_force_repeats(
        [(m.process_id, m.tokens) for m in metas], min_length
    )


class TestHistogram:
    def test_counts_by_length(self):
        metas = [mp("P1", "abcdefg"), mp("P2", "abcXdefg")]
        ms = find_matches_repeats(metas, 3)
        hist = histogram(ms)
        assert sum(hist.values()) == len(ms.matches)
        assert all(k >= 3 for k in hist)

    def test_empty_matchset(self):
        ms = find_matches_repeats([mp("P1", "abc"), mp("P2", "xyz")], 3)
        assert histogram(ms) == {}

    def test_ascending_lengths(self):
        metas = [mp("P1", "abcde"), mp("P2", "abcde"), mp("P3", "fgh"), mp("P4", "fgh")]
        hist = histogram(find_matches_repeats(metas, 3))
        assert list(hist.keys()) == sorted(hist.keys())
