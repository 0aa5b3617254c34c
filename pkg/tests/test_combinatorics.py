import random
from itertools import combinations

import pytest

from lrpuzzle.combinatorics import (
    EMPTY, GREEN, RED, VACUUM, Word, binary_words, complement_bar, concat,
    fits_in_box, partition_from_binary, partition_to_binary, partition_word,
    partitions_in_box, split, transpose, word_from_string, word_partition,
)


def test_paper_binary_word_example():
    assert partition_from_binary("+-++-+") == (3, 1)


def test_binary_word_corner_cases():
    assert partition_from_binary("--++") == ()
    assert partition_from_binary("++--") == (2, 2)
    assert partition_to_binary((), 2, 4) == "--++"


def test_binary_roundtrip_all_words():
    for n in range(1, 9):
        for k in range(n + 1):
            for w in binary_words(k, n):
                lam = partition_from_binary(w)
                assert fits_in_box(lam, k, n)
                assert partition_to_binary(lam, k, n) == w


def test_complement_bar():
    assert complement_bar((), 2, 4) == (2, 2)
    assert complement_bar((2, 2), 2, 4) == ()
    assert complement_bar((1,), 1, 3) == (1,)
    for lam in partitions_in_box(2, 5):
        assert complement_bar(complement_bar(lam, 2, 5), 2, 5) == lam


def test_transpose_involution():
    for lam in partitions_in_box(3, 7):
        assert transpose(transpose(lam)) == lam
        assert sum(transpose(lam)) == sum(lam)
    # bar of transpose = transpose of bar on the rotated rectangle
    for lam in partitions_in_box(2, 5):
        assert transpose(complement_bar(lam, 2, 5)) == complement_bar(transpose(lam), 3, 5)


def test_vacuum_invariants():
    assert VACUUM.charge() == 0
    assert VACUUM.emptiness() == 0
    assert VACUUM.n_plus() == 0 and VACUUM.n_minus() == 0
    assert word_partition(VACUUM) == ()


def test_partition_word_roundtrip():
    for lam in partitions_in_box(4, 9):
        w = partition_word(lam)
        assert w.is_fock() and w.charge() == 0
        assert word_partition(w) == lam
        assert w.n_plus() == (lam[0] if lam else 0)
        assert w.n_minus() == -len(lam)


def test_single_box_word():
    w = partition_word((1,))
    assert w.letter(-1) == RED and w.letter(1) == GREEN
    assert w.charge() == 0


def test_shift_charge():
    for lam in [(), (1,), (3, 1)]:
        w = partition_word(lam)
        assert w.shift(1).charge() == w.charge() - 2
        assert w.shift(-2).charge() == w.charge() + 4
        assert w.shift(3).emptiness() == w.emptiness()


def test_concat_vacuum():
    w = concat(VACUUM, VACUUM, 0)
    assert w == VACUUM
    w1 = concat(VACUUM, VACUUM, 1)
    assert w1.emptiness() == 2 and w1.charge() == 0
    assert w1.letter(-1) == EMPTY and w1.letter(1) == EMPTY
    assert w1.letter(-3) == GREEN and w1.letter(3) == RED


def test_concat_precondition():
    one = partition_word((1,))
    assert one.n_plus() == 1
    with pytest.raises(ValueError):
        concat(one, VACUUM, 0)


def test_concat_split_roundtrip_and_charge_formulas():
    rng = random.Random(424242)
    count = 0
    while count < 500:
        lam = tuple(sorted((rng.randrange(4) for _ in range(rng.randrange(4))), reverse=True))
        mu = tuple(sorted((rng.randrange(4) for _ in range(rng.randrange(4))), reverse=True))
        fm = partition_word([p for p in lam if p]).shift(rng.randrange(-2, 3))
        fp = partition_word([p for p in mu if p]).shift(rng.randrange(-2, 3))
        k = rng.randrange(-1, 5)
        if fm.n_plus() > k or fp.n_minus() < -k:
            continue
        count += 1
        w = concat(fm, fp, k)
        assert w.charge() * 2 == fm.charge() + fp.charge()
        assert w.emptiness() * 2 == fm.charge() - fp.charge() + 4 * k
        assert w.n_minus_zero() >= 0 and w.n_plus_zero() <= 0
        back_m, back_p = split(w, k)
        assert back_m == fm and back_p == fp


def test_split_rejects_bad_words():
    with pytest.raises(ValueError):
        split(word_from_string(-1, "+-"), 0)  # red left of zero


def test_window_markers():
    w = word_from_string(-3, "+0-")  # red at -3/2, empty at -1/2, green at 1/2
    assert w.n_minus_zero() == -2
    assert w.n_plus_zero() == 1
    assert w.n_minus() == -2
    assert w.n_plus() == 1
    assert w.emptiness() == 1
