import itertools
import time

import pytest

from braidtwist import halftwist
from braidtwist.bench import sample_half_twist
from braidtwist.garside import expand_to_word, normalize
from braidtwist.halftwist import (
    HalfTwistWitness,
    Reason,
    SkipTable,
    Verdict,
    is_half_twist,
    precheck,
    verify_witness,
)
from braidtwist.randomized import RandomSource
from braidtwist.word import BraidWord, concat, conjugate, degree, inverse
from conftest import STUBBORN, rand_word, w
from oracles import is_trivial_artin, surely_not_half_twist

OPTION_SETS = list(itertools.product((True, False), repeat=2))


def nf(x):
    return expand_to_word(normalize(x))


def mutate(rng, x):
    n = x.strands
    letters = list(x.letters)
    kind = rng.choice(("flip", "swap", "drop", "add"))
    j = rng.randrange(len(letters)) if letters else 0
    if kind == "flip" and letters:
        letters[j] = -letters[j]
    elif kind == "swap" and letters and n > 2:
        letters[j] = rng.choice([g for g in range(1, n) if g != abs(letters[j])])
        letters[j] *= rng.choice((1, -1))
    elif kind == "drop" and letters:
        del letters[j]
    else:
        letters.insert(j, rng.randint(1, n - 1) * rng.choice((1, -1)))
    return BraidWord(n, tuple(letters))


# precheck

def test_precheck_examples():
    assert precheck(w(3, 1, 2), 2).reason is Reason.WRONG_PERMUTATION
    res = precheck(w(3, -2, 1, 1, 2), 2)
    assert res.passed and set(res.pair) == {1, 3}
    assert precheck(w(4, 1, 1, 3, 3), 2).reason is Reason.WRONG_CROSSING_TABLE
    assert precheck(w(4, 1, 1, 1, 1), 2).reason is Reason.WRONG_CROSSING_TABLE
    assert precheck(w(4, 1, 3, 3), 1).reason is Reason.RESIDUE_NOT_IDENTITY
    assert precheck(w(4, 2), 1).pair == (2, 3)


def test_precheck_runs_permutation_test_first():
    # sigma_1 sigma_3 crosses two pairs, but its permutation already fails
    assert precheck(w(4, 1, 3), 2).reason is Reason.WRONG_PERMUTATION


def test_precheck_rejects_bad_power():
    with pytest.raises(ValueError):
        precheck(w(3, 1), 0)


def test_precheck_two_strands_skips_residue():
    assert precheck(w(2, 1, 1, 1), 3).passed
    assert precheck(w(2, 1, 1), 2).pair == (1, 2)


def test_precheck_passes_on_constructed_half_twists(rng):
    src = RandomSource(11)
    for _ in range(300):
        n = rng.choice((3, 4, 5, 6))
        k = rng.randint(1, 4)
        word, wit = sample_half_twist(n, k, rng.randint(0, 30), src)
        res = precheck(word, k)
        assert res.passed
        assert precheck(conjugate(BraidWord.generator_power(n, wit.generator, k),
                                  inverse(wit.conjugator)), k).passed


def test_precheck_genuine_false_is_sound(rng):
    for _ in range(300):
        n = rng.randint(3, 6)
        k = rng.randint(1, 4)
        word, _ = sample_half_twist(n, k, rng.randint(1, 20), RandomSource(rng.getrandbits(64)))
        bad = mutate(rng, word)
        kk = degree(bad)
        if kk < 1:
            continue
        res = precheck(bad, kk)
        if not res.passed:
            assert surely_not_half_twist(bad, kk)


# is_half_twist

def test_generator_itself():
    out = is_half_twist(w(3, 2), 1)
    assert out.verdict is Verdict.TRUE
    assert out.witness == HalfTwistWitness(2, 1, BraidWord(3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("opts", OPTION_SETS)
def test_trivial_shapes(n, k, opts):
    for i in range(1, n):
        out = is_half_twist(BraidWord.generator_power(n, i, k), k,
                            use_prechecks=opts[0], use_skip_table=opts[1])
        assert out.verdict is Verdict.TRUE
        assert out.witness.generator == i
        assert out.witness.power == k
        assert len(out.witness.conjugator) == 0


def test_simple_conjugate():
    x = w(3, -2, 1, 2)
    out = is_half_twist(nf(x), 1)
    assert out
    assert verify_witness(x, out.witness)
    assert verify_witness(nf(x), out.witness)


def test_stubborn_word_single_shot_false():
    word = nf(STUBBORN)
    for use_pre, use_skip in OPTION_SETS:
        out = is_half_twist(word, 1, use_prechecks=use_pre, use_skip_table=use_skip)
        assert out.verdict is Verdict.FALSE


def test_stubborn_word_passes_every_precheck():
    assert degree(STUBBORN) == 1
    assert precheck(nf(STUBBORN), 1).passed


def test_requires_normal_form_shape():
    with pytest.raises(ValueError):
        is_half_twist(w(3, 1, -2), 1)
    with pytest.raises(ValueError):
        is_half_twist(w(3, 1), 0)


def test_not_half_twist_is_refused():
    # sigma_1 sigma_2 permutes three strands cyclically, impossible for even k
    assert is_half_twist(nf(w(3, 1, 2)), 2).reason is Reason.WRONG_PERMUTATION
    assert is_half_twist(nf(w(3, 1, 2)), 2, use_prechecks=False).verdict is Verdict.FALSE
    # Delta_3 passes every precheck at k = 3 but is not conjugate to sigma_1^3
    delta = nf(w(3, 1, 2, 1))
    assert surely_not_half_twist(delta, 3)
    for use_pre, use_skip in OPTION_SETS:
        out = is_half_twist(delta, 3, use_prechecks=use_pre, use_skip_table=use_skip)
        assert out.verdict is Verdict.FALSE


def test_true_outcomes_carry_valid_witnesses(rng):
    src = RandomSource(5)
    hits = 0
    for _ in range(150):
        n = rng.choice((3, 4, 5))
        k = rng.randint(1, 3)
        word, truth = sample_half_twist(n, k, rng.randint(0, 25), src)
        assert verify_witness(word, truth)
        out = is_half_twist(word, k)
        assert out.verdict is not Verdict.GENUINE_FALSE
        if out:
            hits += 1
            assert verify_witness(word, out.witness)
    assert hits > 100


def test_never_true_on_non_half_twists(rng):
    for _ in range(200):
        n = rng.randint(3, 5)
        x = nf(rand_word(rng, n, rng.randint(1, 20)))
        k = degree(x)
        if k < 1:
            continue
        out = is_half_twist(x, k)
        if out:
            assert verify_witness(x, out.witness)
        elif surely_not_half_twist(x, k):
            assert out.verdict in (Verdict.FALSE, Verdict.GENUINE_FALSE)


def test_optimizations_are_transparent(rng):
    src = RandomSource(9)
    corpus = []
    for _ in range(40):
        n = rng.choice((3, 4, 5))
        k = rng.randint(1, 3)
        word, _ = sample_half_twist(n, k, rng.randint(5, 40), src)
        corpus.append((word, k))
        bad = nf(mutate(rng, word))
        if degree(bad) >= 1:
            corpus.append((bad, degree(bad)))
    for word, k in corpus:
        outs = [is_half_twist(word, k, use_prechecks=a, use_skip_table=b) for a, b in OPTION_SETS]
        assert len({bool(o) for o in outs}) == 1
        for o in outs:
            if o.genuine:
                assert surely_not_half_twist(word, k)


def test_skip_intervals_only_cover_failing_splits(rng, monkeypatch):
    from braidtwist import kernels

    marks = []
    real_mark = SkipTable.mark

    def spy(self, generator, side, start, stop):
        marks.append((generator, side, start, stop))
        real_mark(self, generator, side, start, stop)

    monkeypatch.setattr(SkipTable, "mark", spy)
    src = RandomSource(3)
    checked = 0
    for _ in range(60):
        n = rng.choice((3, 4, 5))
        word, _ = sample_half_twist(n, 1, rng.randint(10, 40), src)
        marks.clear()
        is_half_twist(word, 1, use_prechecks=False)
        letters = word.letters
        ipos = next((j for j, x in enumerate(letters, 1) if x > 0), len(letters) + 1)
        for gen, side, start, stop in marks:
            for p in range(start, stop):
                pos = list(letters[ipos - 1:])
                cut = p - ipos + 1
                if side == "right":
                    assert kernels.extract_right(pos[:cut], gen) is None
                else:
                    assert kernels.extract_left(pos[cut:], gen) is None
                checked += 1
    assert checked > 0


def test_skip_table_intervals():
    table = SkipTable()
    assert table.blocked_until(1, "left", 4) == 4
    table.mark(1, "left", 2, 6)
    table.mark(1, "left", 5, 9)
    table.mark(1, "left", 3, 3)
    assert table.blocked_until(1, "left", 1) == 1
    assert table.blocked_until(1, "left", 2) == 9
    assert table.blocked_until(1, "left", 9) == 9
    assert table.blocked_until(1, "right", 2) == 2
    assert table.blocked_until(2, "left", 2) == 2


def test_next_occurrences():
    nxt = halftwist._next_occurrences((1, 2, 1), 3)
    assert nxt[1] == [1, 3, 3, 4]
    assert nxt[2] == [2, 2, 4, 4]


# verify_witness

def test_verify_witness_examples():
    assert verify_witness(w(3, 2), HalfTwistWitness(2, 1, BraidWord(3)))
    x = w(3, -2, 1, 2)
    assert not verify_witness(x, HalfTwistWitness(1, 1, w(3, 2)))
    assert verify_witness(x, HalfTwistWitness(1, 1, w(3, -2)))
    assert not verify_witness(x, HalfTwistWitness(1, 1, w(4, -2)))


def test_perturbed_witnesses(rng):
    wrong = 0
    while wrong < 100:
        n = rng.choice((3, 4))
        q = rand_word(rng, n, rng.randint(1, 5))
        i = rng.randint(1, n - 1)
        x = conjugate(BraidWord.generator_power(n, i, 1), inverse(q))
        assert verify_witness(x, HalfTwistWitness(i, 1, q))
        letters = list(q.letters)
        j = rng.randint(0, len(letters))
        letters.insert(j, rng.randint(1, n - 1) * rng.choice((1, -1)))
        bad = HalfTwistWitness(i, 1, BraidWord(n, tuple(letters)))
        # some insertions land in the centralizer and stay valid; the oracle decides
        target = BraidWord.generator_power(n, i, 1)
        valid = is_trivial_artin(concat(conjugate(x, bad.conjugator), inverse(target)))
        assert verify_witness(x, bad) == valid
        wrong += not valid
        shifted = HalfTwistWitness(n - i if n - i != i else i, 2, q)
        assert not verify_witness(x, shifted)


def test_runtime_doubling_factor():
    src = RandomSource(17)

    def band(lo, hi, conj):
        out = []
        while len(out) < 15:
            word, _ = sample_half_twist(5, 1, src.randint(*conj), src)
            if lo <= len(word) <= hi:
                out.append(word)
        return out

    def mean_time(words):
        t0 = time.perf_counter()
        for x in words:
            is_half_twist(x, 1)
        return (time.perf_counter() - t0) / len(words)

    short = band(100, 150, (20, 40))
    long_ = band(200, 300, (40, 80))
    stretch = (sum(map(len, long_)) / len(long_)) / (sum(map(len, short)) / len(short))
    ratio = mean_time(long_) / mean_time(short)
    # a cubic bound allows 8x per doubling; scale for the actual length ratio
    assert ratio <= 10 * (stretch / 2) ** 3
