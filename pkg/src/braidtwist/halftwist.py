"""Deterministic half-twist check on a word in expanded normal form.

``is_half_twist(w, k)`` tries to split the positive part of ``w`` as
``A . sigma_i^t | sigma_i^(k-t) . R`` and accepts when ``N . A . R`` is the
identity (``N`` the negative part), in which case ``w = R^-1 sigma_i^k R``.
A True answer therefore always comes with a checkable witness; a plain
False may be wrong, while a :attr:`Verdict.GENUINE_FALSE` is backed by a
conjugacy invariant and is certain.
"""

from __future__ import annotations

import bisect
import dataclasses
import enum

from . import kernels
from .garside import equal
from .word import (
    BraidWord,
    conjugate,
    delete_strands,
    occupancy_profile,
    strand_data,
)


class Verdict(enum.Enum):
    TRUE = "true"
    GENUINE_FALSE = "genuine false"
    FALSE = "false"


class Reason(enum.Enum):
    WRONG_PERMUTATION = "WrongPermutation"
    WRONG_CROSSING_TABLE = "WrongCrossingTable"
    RESIDUE_NOT_IDENTITY = "ResidueNotIdentity"
    ZERO_DEGREE_NON_IDENTITY = "ZeroDegreeNonIdentity"
    WRONG_DEGREE = "WrongDegree"


@dataclasses.dataclass(frozen=True)
class HalfTwistWitness:
    """``conjugator^-1 . w . conjugator == sigma_generator^power``."""

    generator: int
    power: int
    conjugator: BraidWord


@dataclasses.dataclass(frozen=True)
class CheckOutcome:
    verdict: Verdict
    witness: HalfTwistWitness | None = None
    reason: Reason | None = None
    tries: int = 1
    square: bool = False
    history: tuple[Verdict, ...] = ()

    def __bool__(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def genuine(self) -> bool:
        return self.verdict is Verdict.GENUINE_FALSE

    @classmethod
    def true(cls, witness: HalfTwistWitness, **kw) -> CheckOutcome:
        return cls(Verdict.TRUE, witness=witness, **kw)

    @classmethod
    def genuine_false(cls, reason: Reason, **kw) -> CheckOutcome:
        return cls(Verdict.GENUINE_FALSE, reason=reason, **kw)

    @classmethod
    def false(cls, **kw) -> CheckOutcome:
        return cls(Verdict.FALSE, **kw)


@dataclasses.dataclass(frozen=True)
class Precheck:
    pair: tuple[int, int] | None = None
    reason: Reason | None = None

    @property
    def passed(self) -> bool:
        return self.reason is None


def precheck(w: BraidWord, k: int) -> Precheck:
    """Invariant tests that can refute "w is conjugate to sigma_i^k" for certain.

    In order: the permutation must be trivial (even ``k``) or one
    transposition (odd ``k``); for even ``k`` exactly one strand pair may
    cross, with signed count ``k``; deleting the distinguished pair must leave
    the identity on ``n - 2`` strands.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    data = strand_data(w)
    if k % 2:
        pair = data.permutation.transposition()
        if pair is None:
            return Precheck(reason=Reason.WRONG_PERMUTATION)
    else:
        if not data.permutation.is_identity:
            return Precheck(reason=Reason.WRONG_PERMUTATION)
        nonzero = data.crossings.nonzero()
        if len(nonzero) != 1:
            return Precheck(reason=Reason.WRONG_CROSSING_TABLE)
        (pair, count), = nonzero.items()
        if count != k:
            return Precheck(reason=Reason.WRONG_CROSSING_TABLE)
    if w.strands >= 3 and not _identity(delete_strands(w, pair).letters, w.strands - 2):
        return Precheck(reason=Reason.RESIDUE_NOT_IDENTITY)
    return Precheck(pair=pair)


def _identity(letters, n: int) -> bool:
    if n <= 1 or not letters:
        return True
    if sum(1 if x > 0 else -1 for x in letters) != 0:
        return False
    occ, cr, _ = kernels.strand_trace(list(letters), n)
    if any(occ[j] != j for j in range(n)) or any(cr):
        return False
    r, pos = kernels.delta_form(list(letters), n)
    return r == 0 and not pos


class SkipTable:
    """Split positions already known to make an extraction fail.

    Intervals ``[start, stop)`` of split points ``p`` are kept per generator
    and side.  On the right side a failure to pull sigma_i off the end of
    ``w[..p]`` persists until the next sigma_i letter; on the left side
    nothing can be pulled off ``w[p+1..]`` until the leftmost position that
    sigma_i can reach.
    """

    def __init__(self):
        self._intervals: dict[tuple[int, str], list[tuple[int, int]]] = {}

    def mark(self, generator: int, side: str, start: int, stop: int) -> None:
        if stop > start:
            bisect.insort(self._intervals.setdefault((generator, side), []), (start, stop))

    def blocked_until(self, generator: int, side: str, p: int) -> int:
        """First split ``>= p`` not covered by a recorded interval."""
        spans = self._intervals.get((generator, side))
        if not spans:
            return p
        moved = True
        while moved:
            moved = False
            j = bisect.bisect_right(spans, (p, float("inf"))) - 1
            # spans may overlap; check every span starting at or before p
            while j >= 0:
                start, stop = spans[j]
                if start <= p < stop:
                    p = stop
                    moved = True
                    break
                j -= 1
        return p


def _extract_right_power(letters: list[int], gen: int, t: int):
    rev = letters[::-1]
    matched, rest = kernels.extract_word_left(rev, [gen] * t)
    if rest is None:
        return matched, None
    rest.reverse()
    return t, rest


def is_half_twist(
    w: BraidWord,
    k: int,
    *,
    use_prechecks: bool = True,
    use_skip_table: bool = True,
) -> CheckOutcome:
    """Try to write ``w`` (an expanded normal form) as ``q sigma_i^k q^-1``.

    Positions are 1-based.  For each generator ``i``, each split ``t`` of
    sigma_i^k and each split point ``p`` (``iPos - 1 <= p <= l``, where
    ``iPos`` is the first positive letter), sigma_i^t is pulled off the right
    of ``w[iPos..p]`` and sigma_i^(k-t) off the left of ``w[p+1..l]``; the
    rewritten remainders ``A`` and ``R`` give ``Test = w[1..iPos-1] A R``.
    The first split with ``Test == 1`` yields the witness ``q = R^-1``.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    letters = w.letters
    n = w.strands
    length = len(letters)
    ipos = next((j for j, x in enumerate(letters, 1) if x > 0), length + 1)
    if any(x < 0 for x in letters[ipos - 1:]):
        raise ValueError("word is not in expanded normal form; normalize it first")

    pair = None
    profile = None
    if use_prechecks:
        pre = precheck(w, k)
        if not pre.passed:
            return CheckOutcome.genuine_false(pre.reason)
        pair = set(pre.pair)
        profile = occupancy_profile(w)

    neg = list(letters[:ipos - 1])
    pos = list(letters[ipos - 1:])
    skips = SkipTable() if use_skip_table else None
    descents = None
    next_occurrence = None

    for i in range(1, n):
        bit = 1 << (i - 1)
        for t in range(k + 1):
            p = ipos - 1
            while p <= length:
                if pair is not None and {profile[p][i - 1], profile[p][i]} != pair:
                    p += 1
                    continue
                if skips is not None:
                    q = p
                    if t:
                        q = skips.blocked_until(i, "right", q)
                    if k - t:
                        q = skips.blocked_until(i, "left", q)
                    if q != p:
                        p = q
                        continue
                cut = p - ipos + 1
                if t:
                    matched, head = _extract_right_power(pos[:cut], i, t)
                    if head is None:
                        if skips is not None and matched == 0:
                            if next_occurrence is None:
                                next_occurrence = _next_occurrences(letters, n)
                            skips.mark(i, "right", p, next_occurrence[i][p])
                        p += 1
                        continue
                else:
                    head = pos[:cut]
                if k - t:
                    matched, tail = kernels.extract_word_left(pos[cut:], [i] * (k - t))
                    if tail is None:
                        if skips is not None and matched == 0:
                            if descents is None:
                                descents = kernels.suffix_descents(pos, n)
                            reach = cut + 1
                            while reach < len(pos) and not descents[reach] & bit:
                                reach += 1
                            # suffixes starting before the reach fail: p' < ipos - 1 + reach
                            skips.mark(i, "left", p, ipos - 1 + reach)
                        p += 1
                        continue
                else:
                    tail = pos[cut:]
                if _identity(neg + head + tail, n):
                    conj = BraidWord(n, tuple(-x for x in reversed(tail)))
                    return CheckOutcome.true(HalfTwistWitness(i, k, conj))
                p += 1
    return CheckOutcome.false()


def _next_occurrences(letters, n):
    # nxt[i][p]: smallest 1-based position j > p with letters[j-1] == i, else len+1
    length = len(letters)
    nxt = [None] + [[length + 1] * (length + 1) for _ in range(1, n)]
    for i in range(1, n):
        row = nxt[i]
        upcoming = length + 1
        for p in range(length, -1, -1):
            row[p] = upcoming
            if p and letters[p - 1] == i:
                upcoming = p
    return nxt


def verify_witness(w: BraidWord, witness: HalfTwistWitness) -> bool:
    """Check ``q^-1 w q == sigma_c^k`` with the word problem solver."""
    q = witness.conjugator
    if q.strands != w.strands:
        return False
    target = BraidWord.generator_power(w.strands, witness.generator, witness.power)
    return equal(conjugate(w, q), target)
