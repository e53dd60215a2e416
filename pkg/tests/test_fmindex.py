import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saii import oracle
from saii.alphabet import PackedSequence, decode, encode_text
from saii.errors import EmptyText, IndexOutOfRange, MissingSuffixArray
from saii.fmindex import (
    SearchRange,
    backward_extend,
    bracket,
    build_c_array,
    count,
    first_mismatch,
    initial_range,
    locate,
    occ_query,
    search,
)

texts = st.lists(st.integers(0, 3), min_size=1, max_size=64).map(PackedSequence.from_codes)


def test_c_array_examples():
    assert build_c_array(encode_text("ACGCTTG")).counts == [0, 1, 3, 5]
    assert build_c_array(encode_text("AAAA")).counts == [0, 4, 4, 4]
    assert build_c_array(encode_text("T")).counts == [0, 0, 0, 0]


def test_c_array_invariants():
    rng = random.Random(9)
    for _ in range(100):
        codes = [rng.randrange(4) for _ in range(rng.randint(1, 100))]
        c = build_c_array(PackedSequence.from_codes(codes)).counts
        assert c[0] == 0
        assert all(c[a] <= c[a + 1] for a in range(3))
        assert c[3] <= len(codes)


def test_occ_query_examples():
    index = oracle.full_index(encode_text("ACGCTTG"), k=4)
    C = 1
    assert occ_query(index, C, 5) == 1
    assert occ_query(index, C, 7) == 2
    for a in range(4):
        assert occ_query(index, a, -1) == 0
    with pytest.raises(IndexOutOfRange):
        occ_query(index, C, 8)


def test_occ_row_total_counts_every_position_once():
    rng = random.Random(10)
    for _ in range(50):
        codes = [rng.randrange(4) for _ in range(rng.randint(1, 80))]
        index = oracle.full_index(PackedSequence.from_codes(codes), k=4)
        total = sum(occ_query(index, a, index.n - 1) for a in range(4))
        assert total == index.n - 1


def test_backward_extend_worked_example():
    index = oracle.full_index(encode_text("ACGCTTG"), k=4)
    rng = backward_extend(index, initial_range(index), 3)  # T
    assert (rng.low, rng.high) == (6, 7)
    rng = backward_extend(index, rng, 1)  # C -> "CT"
    assert (rng.low, rng.high) == (3, 3)
    missed = backward_extend(index, SearchRange(6, 7), 0)  # A -> "AT"
    assert missed.low > missed.high


def test_count_examples():
    index = oracle.full_index(encode_text("ACGCTTG"), k=4)
    assert count(index, encode_text("CT")) == 1
    assert count(index, encode_text("TT")) == 1
    assert count(index, encode_text("GG")) == 0
    assert count(index, encode_text("ACGCTTG")) == 1


def test_search_empty_query_rejected():
    index = oracle.full_index(encode_text("ACGT"), k=4)
    with pytest.raises(EmptyText):
        search(index, PackedSequence(b"", 0))


def test_bracket_examples():
    index = oracle.full_index(encode_text("ACGCTTG"), k=4)
    low, hit = bracket(index, encode_text("CA"))
    assert not hit
    sufs = oracle.sorted_suffixes(encode_text("ACGCTTG"))
    assert sufs[low - 1] == "ACGCTTG$"
    assert sufs[low] == "CGCTTG$"
    low, hit = bracket(index, encode_text("TTT"))
    assert not hit and low == index.n
    assert sufs[low - 1] == "TTG$"
    _, hit = bracket(index, encode_text("CT"))
    assert hit


def test_bracket_needs_suffix_array():
    index = oracle.full_index(encode_text("ACGT"), k=4)
    index.sa = None
    with pytest.raises(MissingSuffixArray):
        bracket(index, encode_text("A"))


def test_locate():
    index = oracle.full_index(encode_text("ACGCTTG"), k=4)
    assert locate(index, encode_text("C")) == [1, 3]
    assert locate(index, encode_text("GG")) == []
    index.sa = None
    with pytest.raises(MissingSuffixArray):
        locate(index, encode_text("C"))


def exhaustive_pairs(max_text, max_query):
    for tlen in range(1, max_text + 1):
        for tcodes in itertools.product(range(4), repeat=tlen):
            yield tcodes


def test_count_exhaustive_small():
    # every text up to length 4, every query up to length 4
    queries = [
        PackedSequence.from_codes(list(q))
        for qlen in range(1, 5)
        for q in itertools.product(range(4), repeat=qlen)
    ]
    for tcodes in exhaustive_pairs(4, 4):
        text = PackedSequence.from_codes(list(tcodes))
        index = oracle.full_index(text, k=2)
        for query in queries:
            assert count(index, query) == oracle.naive_count(text, query)


@settings(max_examples=300, deadline=None)
@given(texts, st.lists(st.integers(0, 3), min_size=1, max_size=8).map(PackedSequence.from_codes))
def test_count_matches_naive_scan(text, query):
    index = oracle.full_index(text, k=4)
    assert count(index, query) == oracle.naive_count(text, query)


@settings(max_examples=300, deadline=None)
@given(texts, st.lists(st.integers(0, 3), min_size=1, max_size=6).map(PackedSequence.from_codes))
def test_bracket_property_on_misses(text, query):
    index = oracle.full_index(text, k=4)
    low, hit = bracket(index, query)
    if hit:
        return
    sufs = oracle.sorted_suffixes(text)
    q = decode(query)
    if low > 0:
        assert sufs[low - 1] < q
    if low < index.n:
        assert q < sufs[low]


def test_first_mismatch_reports_field():
    a = oracle.full_index(encode_text("ACGCTTG"), k=4)
    b = oracle.full_index(encode_text("ACGCTTG"), k=4)
    assert first_mismatch(a, b) is None
    b.c.counts[2] += 1
    assert first_mismatch(a, b) == "c"
    b2 = oracle.full_index(encode_text("ACGCTTT"), k=4)
    assert first_mismatch(a, b2) in {"bwt", "dollar_pos"}
