import random

import pytest

from saii import construct, oracle
from saii.alphabet import PackedSequence, decode, encode_text
from saii.errors import CapacityExceeded, EmptyText
from saii.fmindex import first_mismatch, search


def random_text(rng, max_len, min_len=1):
    return PackedSequence.from_codes(
        [rng.randrange(4) for _ in range(rng.randint(min_len, max_len))]
    )


def test_init_state():
    state = construct.init_state(k=4)
    assert state.bwt.decode_with_sentinel() == "$"
    assert state.q == 0
    assert state.c.counts == [0, 0, 0, 0]
    assert list(state.occ.checkpoint(0)) == [0, 0, 0, 0]
    assert state.occ.num_checkpoints == 1


def test_single_step_counts():
    for code in range(4):
        state = construct.init_state(k=4)
        construct.step(state, code)
        assert state.bwt.data.length == 2
        raw = state.bwt.data.count_range(0, 2)
        assert raw[code] >= 1 and sum(raw) == 2
        assert state.bwt.dollar_pos is not None


def test_build_worked_example():
    index = construct.build(encode_text("ACGCTTG"), k=4)
    assert index.bwt.decode_with_sentinel() == "G$AGTCTC"
    assert index.bwt.dollar_pos == 1
    assert index.c.counts == [0, 1, 3, 5]


def test_build_single_character():
    index = construct.build(encode_text("A"), k=4)
    assert index.bwt.decode_with_sentinel() == "A$"


def test_build_acgct_stepwise_matches_oracle_suffixes():
    # target ACGCT: every intermediate state must index the current suffix
    text = encode_text("ACGCT")
    codes = text.codes()
    state = construct.init_state(k=2)
    for i in range(len(codes) - 1, -1, -1):
        construct.step(state, codes[i])
        expected = oracle.full_index(text.suffix(i), k=2)
        assert first_mismatch(state.as_index(), expected) is None
        assert state.q == state.bwt.dollar_pos


def test_incremental_states_match_oracle_random():
    rng = random.Random(42)
    for _ in range(60):
        text = random_text(rng, 48)
        codes = text.codes()
        state = construct.init_state(k=4)
        for i in range(len(codes) - 1, -1, -1):
            construct.step(state, codes[i])
            expected = oracle.full_index(text.suffix(i), k=4)
            assert first_mismatch(state.as_index(), expected) is None


def test_extended_suffix_occurs_once():
    # the sentinel row is the unique row of the running suffix
    rng = random.Random(43)
    for _ in range(20):
        text = random_text(rng, 24)
        codes = text.codes()
        state = construct.init_state(k=1)
        for i in range(len(codes) - 1, -1, -1):
            construct.step(state, codes[i])
            rng_ = search(state.as_index(), text.suffix(i))
            assert rng_.low == rng_.high == state.q


def test_build_matches_oracle_many_k():
    rng = random.Random(44)
    for _ in range(40):
        text = random_text(rng, 80)
        for k in (1, 2, 3, 5, 16, 2048):
            built = construct.build(text, k=k)
            assert first_mismatch(built, oracle.full_index(text, k=k)) is None


def test_prefetch_q_sequence_and_final_state():
    rng = random.Random(45)
    for _ in range(200):
        text = random_text(rng, 64)
        codes = text.codes()
        std = construct.init_state(k=4)
        pre = construct.init_state(k=4)
        monitor = construct.PrefetchMonitor()
        q_std, q_pre = [], []
        for i in range(len(codes) - 1, -1, -1):
            q_std.append(construct.step(std, codes[i]))
            q_pre.append(construct.prefetch_step(pre, monitor, codes[i]))
        assert q_std == q_pre
        construct.prefetch_flush(pre, monitor)
        assert first_mismatch(std.as_index(), pre.as_index()) is None
        assert monitor.pending_pos is None


def test_prefetch_intermediate_states_lag_by_one():
    text = encode_text("ACGCT")
    codes = text.codes()
    pre = construct.init_state(k=4)
    monitor = construct.PrefetchMonitor()
    for i in range(len(codes) - 1, -1, -1):
        construct.prefetch_step(pre, monitor, codes[i])
        # physical buffer is one short: the sentinel is pending
        assert pre.bwt.data.length == len(codes) - i
        assert pre.bwt.dollar_pos is None
        assert monitor.pending_pos is not None
        assert monitor.pending_symbol == codes[i]


def test_prefetch_single_character_degenerates():
    text = encode_text("G")
    std = construct.build(text, k=4, schedule="standard")
    pre = construct.build(text, k=4, schedule="prefetch")
    assert first_mismatch(std, pre) is None
    assert pre.prefetch_built and not std.prefetch_built


def test_build_schedule_equivalence():
    rng = random.Random(46)
    for _ in range(100):
        text = random_text(rng, 48)
        a = construct.build(text, k=4, schedule="standard")
        b = construct.build(text, k=4, schedule="prefetch")
        assert first_mismatch(a, b) is None


def test_empty_text_rejected():
    with pytest.raises(EmptyText):
        construct.build(PackedSequence(b"", 0), k=4)


def test_unknown_schedule_rejected():
    with pytest.raises(ValueError):
        construct.build(encode_text("ACG"), k=4, schedule="eager")


def test_strict_capacity():
    state = construct.init_state(k=4, max_len=5)
    for code in [0, 1, 2, 3, 0]:
        construct.step(state, code)
    with pytest.raises(CapacityExceeded):
        construct.step(state, 1)


def test_build_strict_capacity_bound():
    text = PackedSequence.from_codes([0] * 10)
    old = construct.HARDWARE_MAX_LEN
    construct.HARDWARE_MAX_LEN = 8
    try:
        with pytest.raises(CapacityExceeded):
            construct.build(text, k=4, strict_capacity=True)
        construct.build(PackedSequence.from_codes([0] * 8), k=4, strict_capacity=True)
    finally:
        construct.HARDWARE_MAX_LEN = old
