"""Positive braid words, the fundamental braid, and the normal form Delta^-r . P.

Divisibility in the positive monoid is decided by subword reversing: to pull
sigma_i out on the left of a positive word ``P`` we reverse ``sigma_i^-1 . P``
until the pending negative part is used up (success) or the word ends
(failure).  Each step only touches the pending part, which stays a simple
braid, so an extraction costs ``O(l)`` steps of size ``O(n^2)``.

The normal form is ``Delta^-r . P`` with ``r`` minimal and ``P`` the
lexicographically least positive word for its element (sigma_1 < sigma_2 <
...).  It is canonical: two words are equal in ``B_n`` iff their normal forms
are identical.
"""

from __future__ import annotations

import dataclasses
import functools

from . import kernels
from .word import BraidWord, concat, inverse


@dataclasses.dataclass(frozen=True)
class ExtractFailure:
    """Returned when a letter cannot be extracted.

    ``reachable`` is, for a left extraction, the leftmost 1-based position
    ``c`` at which the letter can be made to appear while keeping the first
    ``c - 1`` letters untouched (``len(word) + 1`` if there is none).  For a
    right extraction it is the rightmost position ``c`` such that the letter
    can end the first ``c`` letters (``0`` if none).  It is computed on first
    access.  For word extractions ``matched`` counts the letters pulled out
    before the failure and ``word`` is what remained of the input at that
    point, so ``reachable`` refers to the failing letter in that remainder.
    """

    word: BraidWord
    letter: int
    side: str
    matched: int = 0

    def __bool__(self) -> bool:
        return False

    @functools.cached_property
    def reachable(self) -> int:
        if self.side == "left":
            return leftmost_reachable(self.word, self.letter)
        return rightmost_reachable(self.word, self.letter)


def _require_positive(p: BraidWord) -> None:
    if not p.is_positive:
        raise ValueError("expected a positive braid word")


def _require_generator(p: BraidWord, i: int) -> None:
    if not 1 <= i <= p.strands - 1:
        raise ValueError(f"generator index {i} out of range for B_{p.strands}")


@functools.lru_cache(maxsize=None)
def _delta_letters(n: int) -> tuple[int, ...]:
    return tuple(kernels.delta_letters(n))


def delta_word(n: int) -> BraidWord:
    """Delta_n spelled (s1)(s2 s1)(s3 s2 s1)...(s_{n-1} ... s1)."""
    if n < 1:
        raise ValueError("need at least one strand")
    return BraidWord(n, _delta_letters(n))


def left_descents(p: BraidWord) -> list[set[int]]:
    """For each 1-based start ``c`` (and ``len+1``), the letters left-dividing ``p[c:]``."""
    _require_positive(p)
    masks = kernels.suffix_descents(list(p.letters), p.strands)
    return [{a + 1 for a in range(p.strands - 1) if m >> a & 1} for m in masks]


def leftmost_reachable(p: BraidWord, i: int) -> int:
    masks = kernels.suffix_descents(list(p.letters), p.strands)
    bit = 1 << (i - 1)
    for c in range(len(masks) - 1):
        if masks[c] & bit:
            return c + 1
    return len(p) + 1


def rightmost_reachable(p: BraidWord, i: int) -> int:
    rev = list(reversed(p.letters))
    masks = kernels.suffix_descents(rev, p.strands)
    bit = 1 << (i - 1)
    length = len(p)
    # prefix p[:c] reversed is rev[length - c:]
    for c in range(length, 0, -1):
        if masks[length - c] & bit:
            return c
    return 0


def letter_extract_left(p: BraidWord, i: int) -> BraidWord | ExtractFailure:
    """Rewrite ``p`` to start with sigma_i, or report how far sigma_i gets."""
    _require_positive(p)
    _require_generator(p, i)
    rest = kernels.extract_left(list(p.letters), i)
    if rest is None:
        return ExtractFailure(p, i, "left")
    return BraidWord(p.strands, (i, *rest))


def letter_extract_right(p: BraidWord, i: int) -> BraidWord | ExtractFailure:
    _require_positive(p)
    _require_generator(p, i)
    rest = kernels.extract_right(list(p.letters), i)
    if rest is None:
        return ExtractFailure(p, i, "right")
    return BraidWord(p.strands, (*rest, i))


def word_extract_left(w: BraidWord, prefix: BraidWord) -> BraidWord | ExtractFailure:
    """Rewrite ``w`` as ``prefix . rest`` with ``rest`` positive, if possible."""
    if w.strands != prefix.strands:
        raise ValueError(f"strand mismatch: B_{w.strands} vs B_{prefix.strands}")
    _require_positive(w)
    _require_positive(prefix)
    matched, rest = kernels.extract_word_left(list(w.letters), list(prefix.letters))
    if rest is None:
        before = list(w.letters)
        if matched:
            _, before = kernels.extract_word_left(before, list(prefix.letters[:matched]))
        return ExtractFailure(
            BraidWord(w.strands, tuple(before)), prefix.letters[matched], "left", matched
        )
    return BraidWord(w.strands, prefix.letters + tuple(rest))


def word_extract_right(w: BraidWord, suffix: BraidWord) -> BraidWord | ExtractFailure:
    """Rewrite ``w`` as ``rest . suffix`` with ``rest`` positive, if possible."""
    if w.strands != suffix.strands:
        raise ValueError(f"strand mismatch: B_{w.strands} vs B_{suffix.strands}")
    _require_positive(w)
    _require_positive(suffix)
    rev_w = list(reversed(w.letters))
    rev_s = list(reversed(suffix.letters))
    matched, rest = kernels.extract_word_left(rev_w, rev_s)
    if rest is None:
        before = rev_w
        if matched:
            _, before = kernels.extract_word_left(rev_w, rev_s[:matched])
        return ExtractFailure(
            BraidWord(w.strands, tuple(reversed(before))), rev_s[matched], "right", matched
        )
    return BraidWord(w.strands, tuple(reversed(rest)) + suffix.letters)


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Delta_n^-r . positive, with ``r`` minimal and ``positive`` lex-least."""

    strands: int
    r: int
    positive: tuple[int, ...]

    @property
    def positive_word(self) -> BraidWord:
        return BraidWord(self.strands, self.positive)


def normalize(w: BraidWord) -> NormalForm:
    """Canonical form of ``w``; cubic in the word length for fixed ``n``.

    Free reduction first, then each maximal run of inverse letters is cut into
    simple blocks ``U^-1 = Delta^-1 . C`` (``C . U = Delta``), the Delta^-1
    factors are moved to the front with the flip sigma_i -> sigma_{n-i}, as
    many Delta as possible are cancelled against the positive part, and the
    remainder is rewritten lex-least by greedy smallest-first-letter
    extraction.
    """
    n = w.strands
    if n == 1:
        return NormalForm(1, 0, ())
    r, pos = kernels.delta_form(list(w.letters), n)
    return NormalForm(n, r, tuple(kernels.lexmin(pos, n)))


def expand_to_word(nf: NormalForm) -> BraidWord:
    """Flat word: ``r`` copies of Delta^-1 followed by the positive part."""
    neg = inverse(delta_word(nf.strands)).letters * nf.r
    return BraidWord(nf.strands, neg + nf.positive)


def is_identity(w: BraidWord) -> bool:
    if w.strands == 1 or not w.letters:
        return True
    if sum(1 if x > 0 else -1 for x in w.letters) != 0:
        return False
    occ, cr, _ = kernels.strand_trace(list(w.letters), w.strands)
    if any(occ[j] != j for j in range(w.strands)) or any(cr):
        return False
    r, pos = kernels.delta_form(list(w.letters), w.strands)
    return r == 0 and not pos


def equal(u: BraidWord, v: BraidWord) -> bool:
    return is_identity(concat(u, inverse(v)))
