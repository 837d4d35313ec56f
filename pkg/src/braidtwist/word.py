"""Braid words over the Artin generators and their cheap strand invariants.

A :class:`BraidWord` on ``n`` strands stores its letters as a tuple of
non-zero ints, ``+i`` for sigma_i and ``-i`` for sigma_i^-1.  Structural
equality of two words (``==``) is letter-by-letter identity; equality as
group elements lives in :mod:`braidtwist.garside`.

Strands are labelled ``1..n`` by their position at the top of the braid and
words act left to right: the permutation of ``u.v`` is "first ``u``, then
``v``", so ``perm(u.v) = perm(v) o perm(u)`` as maps from start labels to
end positions.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import kernels


class Letter(NamedTuple):
    index: int
    sign: int

    def __int__(self) -> int:
        return self.index * self.sign


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        top = self.strands - 1
        for pos, x in enumerate(letters, 1):
            if x == 0 or abs(x) > top:
                raise ValueError(
                    f"letter {x} at position {pos} is not a generator of B_{self.strands}"
                )

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    @classmethod
    def generator_power(cls, strands: int, index: int, power: int) -> BraidWord:
        """The word sigma_index^power (inverse letters when power < 0)."""
        if power == 0:
            return cls(strands, ())
        letter = index if power > 0 else -index
        return cls(strands, (letter,) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        for x in self.letters:
            yield Letter(abs(x), 1 if x > 0 else -1)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return inverse(self)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def subword(self, i: int, j: int) -> BraidWord:
        """Letters ``i..j`` inclusive, 1-based; empty when ``j < i``."""
        if j < i:
            return BraidWord(self.strands)
        return BraidWord(self.strands, self.letters[i - 1:j])

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


def _check_same_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: B_{u.strands} vs B_{v.strands}")


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def conjugate(w: BraidWord, q: BraidWord) -> BraidWord:
    """The formal word q^-1 . w . q."""
    _check_same_strands(w, q)
    return BraidWord(w.strands, inverse(q).letters + w.letters + q.letters)


def degree(w: BraidWord) -> int:
    """Exponent sum; a conjugacy invariant."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(inverse(w), -k)
    return BraidWord(w.strands, w.letters * k)


@dataclasses.dataclass(frozen=True)
class StrandPermutation:
    """Where each strand ends up: ``mapping[j-1]`` is the end position of strand ``j``."""

    strands: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, self.strands + 1)):
            raise ValueError(f"not a permutation of 1..{self.strands}: {self.mapping}")

    def __call__(self, label: int) -> int:
        return self.mapping[label - 1]

    def then(self, other: StrandPermutation) -> StrandPermutation:
        """Apply ``self`` first, then ``other`` (the permutation of a concatenation)."""
        return StrandPermutation(self.strands, tuple(other(m) for m in self.mapping))

    @property
    def is_identity(self) -> bool:
        return all(m == j for j, m in enumerate(self.mapping, 1))

    def moved(self) -> list[int]:
        return [j for j, m in enumerate(self.mapping, 1) if m != j]

    def transposition(self) -> tuple[int, int] | None:
        """The pair ``(a, b)``, ``a < b``, if this is a single transposition."""
        moved = self.moved()
        if len(moved) == 2:
            a, b = moved
            if self(a) == b and self(b) == a:
                return a, b
        return None


@dataclasses.dataclass(frozen=True)
class CrossingTable:
    """Signed crossing counts ``cr(i, j)`` between strands, by start label."""

    strands: int
    flat: tuple[int, ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        if i == j:
            raise KeyError("crossing number of a strand with itself is undefined")
        return self.flat[(i - 1) * self.strands + (j - 1)]

    def nonzero(self) -> dict[tuple[int, int], int]:
        n = self.strands
        out = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                c = self.flat[(i - 1) * n + (j - 1)]
                if c:
                    out[(i, j)] = c
        return out


class StrandData(NamedTuple):
    permutation: StrandPermutation
    crossings: CrossingTable
    switching_pairs: tuple[tuple[int, int], ...]


def strand_data(w: BraidWord) -> StrandData:
    """One left-to-right pass: final permutation, crossing table, switching pairs.

    The switching pair of a letter sigma_i^e is ``(a, b)``: the labels of the
    strands at positions ``i`` and ``i+1`` just before the letter.
    """
    n = w.strands
    occ, cr, flat_pairs = kernels.strand_trace(list(w.letters), n)
    mapping = [0] * n
    for position, label in enumerate(occ, 1):
        mapping[label] = position
    pairs = tuple(
        (flat_pairs[k] + 1, flat_pairs[k + 1] + 1) for k in range(0, len(flat_pairs), 2)
    )
    return StrandData(
        StrandPermutation(n, tuple(mapping)), CrossingTable(n, tuple(cr)), pairs
    )


def occupancy_profile(w: BraidWord) -> list[tuple[int, ...]]:
    """Strand labels by position after each prefix: entry ``p`` is after ``p`` letters."""
    occ = list(range(1, w.strands + 1))
    out = [tuple(occ)]
    for x in w.letters:
        i = abs(x) - 1
        occ[i], occ[i + 1] = occ[i + 1], occ[i]
        out.append(tuple(occ))
    return out


def delete_strands(w: BraidWord, pair: Iterable[int]) -> BraidWord:
    """Forget two strands, giving a word on ``n - 2`` strands."""
    a, b = sorted(pair)
    n = w.strands
    if n < 3:
        raise ValueError("deleting two strands needs at least 3 strands")
    if not (1 <= a < b <= n):
        raise ValueError(f"invalid strand pair {{{a}, {b}}} for B_{n}")
    occ = list(range(1, n + 1))
    out = []
    for x in w.letters:
        i = abs(x)
        s, t = occ[i - 1], occ[i]
        if s not in (a, b) and t not in (a, b):
            shift = sum(1 for p in range(i - 1) if occ[p] in (a, b))
            out.append((i - shift) * (1 if x > 0 else -1))
        occ[i - 1], occ[i] = t, s
    return BraidWord(n - 2, tuple(out))


# Legal rewrites: moves that preserve the group element.

class Rewrite(NamedTuple):
    kind: str  # "commute", "braid", "cancel" or "insert"
    position: int  # 0-based index of the first letter affected
    letter: int = 0  # the inserted letter for "insert"


def rewrite_sites(w: BraidWord) -> list[Rewrite]:
    """Every commutation, braid-relation and cancellation site in ``w``."""
    x = w.letters
    sites = []
    for j in range(len(x) - 1):
        if abs(abs(x[j]) - abs(x[j + 1])) >= 2:
            sites.append(Rewrite("commute", j))
        if x[j] == -x[j + 1]:
            sites.append(Rewrite("cancel", j))
    for j in range(len(x) - 2):
        a, b, c = x[j:j + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            sites.append(Rewrite("braid", j))
    return sites


def apply_rewrite(
    w: BraidWord,
    move: Rewrite,
    pairs: Sequence[tuple[int, int]] | None = None,
) -> tuple[BraidWord, list[tuple[int, int]] | None]:
    """Apply one legal move, carrying the switching pairs along if given.

    A commutation swaps the two pairs; a braid relation swaps the pairs of
    its two outer letters.  No pass over the rest of the word is needed.
    """
    x = list(w.letters)
    new_pairs = list(pairs) if pairs is not None else None
    j = move.position
    if move.kind == "commute":
        x[j], x[j + 1] = x[j + 1], x[j]
        if new_pairs is not None:
            new_pairs[j], new_pairs[j + 1] = new_pairs[j + 1], new_pairs[j]
    elif move.kind == "braid":
        a, b = x[j], x[j + 1]
        x[j:j + 3] = [b, a, b]
        if new_pairs is not None:
            new_pairs[j], new_pairs[j + 2] = new_pairs[j + 2], new_pairs[j]
    elif move.kind == "cancel":
        if x[j] != -x[j + 1]:
            raise ValueError(f"no cancellation at {j}")
        del x[j:j + 2]
        if new_pairs is not None:
            del new_pairs[j:j + 2]
    elif move.kind == "insert":
        g = move.letter
        x[j:j] = [g, -g]
        if new_pairs is not None:
            occ = occupancy_profile(BraidWord(w.strands, w.letters[:j]))[-1]
            i = abs(g)
            pair = (occ[i - 1], occ[i])
            # the cancelling partner sees the two strands swapped back
            new_pairs[j:j] = [pair, (pair[1], pair[0])]
    else:
        raise ValueError(f"unknown rewrite {move.kind!r}")
    return BraidWord(w.strands, tuple(x)), new_pairs
