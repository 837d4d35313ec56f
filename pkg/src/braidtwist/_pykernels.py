"""Pure-Python rewriting kernels.

Words are sequences of non-zero ints: ``+i`` stands for the generator
sigma_i and ``-i`` for its inverse.  Positive words hold positive ints only.
Simple braids are handled as permutations ``F`` of ``range(n)`` with
``F[j]`` the final position of the strand starting at position ``j``.

Every public function here has a twin of the same name in the compiled
``_ckernels`` module; both must return identical results.
"""

from __future__ import annotations

BACKEND = "python"


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _reverse_cell(cell):
    # Right-reverse a short signed word until every positive letter precedes
    # every negative one; always rewrites the leftmost (neg, pos) pair.
    i = 0
    while i < len(cell) - 1:
        x, y = cell[i], cell[i + 1]
        if x < 0 < y:
            a = -x
            if a == y:
                del cell[i:i + 2]
            elif a - y >= 2 or y - a >= 2:
                cell[i:i + 2] = [y, x]
            else:
                cell[i:i + 2] = [y, a, -y, x]
            if i:
                i -= 1
        else:
            i += 1


def extract_left(word, letter):
    """Return ``rest`` with ``word == sigma_letter . rest`` in the monoid, or None."""
    zone = [letter]
    out = []
    for idx, y in enumerate(word):
        cell = [-z for z in zone]
        cell.append(y)
        _reverse_cell(cell)
        k = 0
        while k < len(cell) and cell[k] > 0:
            k += 1
        out.extend(cell[:k])
        zone = [-x for x in cell[k:]]
        if not zone:
            out.extend(word[idx + 1:])
            return out
    return None


def extract_right(word, letter):
    """Return ``rest`` with ``word == rest . sigma_letter`` in the monoid, or None."""
    rest = extract_left(list(reversed(word)), letter)
    if rest is None:
        return None
    rest.reverse()
    return rest


def extract_word_left(word, prefix):
    """Extract the letters of ``prefix`` one by one from the left.

    Returns ``(matched, rest)``; ``rest`` is None when the ``matched``-th
    letter (0-based) could not be extracted.
    """
    rest = list(word)
    for matched, x in enumerate(prefix):
        rest = extract_left(rest, x)
        if rest is None:
            return matched, None
    return len(prefix), rest


def _meet(a, b, n):
    # Left gcd of two simple braids, by peeling common left descents.
    a = list(a)
    b = list(b)
    g = list(range(n))
    j = 0
    while j < n - 1:
        if a[j] > a[j + 1] and b[j] > b[j + 1]:
            a[j], a[j + 1] = a[j + 1], a[j]
            b[j], b[j + 1] = b[j + 1], b[j]
            for m in range(n):
                if g[m] == j:
                    g[m] = j + 1
                elif g[m] == j + 1:
                    g[m] = j
            j = 0
        else:
            j += 1
    return g


def suffix_descents(word, n):
    """Left-descent bitmasks of every suffix of a positive word.

    ``masks[c]`` has bit ``a - 1`` set iff sigma_a left-divides ``word[c:]``;
    ``masks[len(word)] == 0``.  Uses the recurrence
    ``D ^ (x.X) = x . (complement(x) ^ first_factor(X))``.
    """
    masks = [0] * (len(word) + 1)
    first = list(range(n))
    for c in range(len(word) - 1, -1, -1):
        b = word[c] - 1
        comp = [n - 1 - j for j in range(n)]
        comp[b], comp[b + 1] = comp[b + 1], comp[b]
        g = _meet(comp, first, n)
        g[b], g[b + 1] = g[b + 1], g[b]
        first = g
        mask = 0
        for j in range(n - 1):
            if first[j] > first[j + 1]:
                mask |= 1 << j
        masks[c] = mask
    return masks


def delta_letters(n):
    out = []
    for top in range(1, n):
        out.extend(range(top, 0, -1))
    return out


def simple_word(perm):
    """A reduced positive word for the simple braid with permutation ``perm``."""
    perm = list(perm)
    out = []
    j = 0
    while j < len(perm) - 1:
        if perm[j] > perm[j + 1]:
            out.append(j + 1)
            perm[j], perm[j + 1] = perm[j + 1], perm[j]
            j = 0
        else:
            j += 1
    return out


def _split_negatives(word, n):
    # Items: positive letters, or 0 for a Delta^-1 marker.
    items = []
    idx = 0
    length = len(word)
    while idx < length:
        x = word[idx]
        if x > 0:
            items.append(x)
            idx += 1
            continue
        u = list(range(n))
        while idx < length and word[idx] < 0:
            b = -word[idx] - 1
            if u[b] > u[b + 1]:
                break
            u[b], u[b + 1] = u[b + 1], u[b]
            idx += 1
        uinv = [0] * n
        for j in range(n):
            uinv[u[j]] = j
        items.append(0)
        items.extend(simple_word([uinv[n - 1 - j] for j in range(n)]))
    return items


def delta_form(word, n):
    """Write ``word`` as Delta^-r . P with P positive and r minimal.

    Returns ``(r, P)``; P is not lexicographically normalised.
    """
    items = _split_negatives(free_reduce(word), n)
    flips = 0
    rev = []
    for it in reversed(items):
        if it == 0:
            flips += 1
        elif flips & 1:
            rev.append(n - it)
        else:
            rev.append(it)
    rev.reverse()
    r = flips
    pos = rev
    delta = delta_letters(n)
    while r > 0:
        matched, rest = extract_word_left(pos, delta)
        if rest is None:
            break
        pos = rest
        r -= 1
    return r, pos


def lexmin(word, n):
    """Lexicographically least positive word equal to ``word`` in the monoid."""
    out = []
    cur = list(word)
    while cur:
        for i in range(1, n):
            rest = extract_left(cur, i)
            if rest is not None:
                out.append(i)
                cur = rest
                break
        else:  # pragma: no cover - a non-empty positive word has a left divisor
            raise AssertionError("no left divisor found")
    return out


def strand_trace(word, n):
    """Follow the strands through ``word``.

    Returns ``(occupancy, crossings, pairs)``: ``occupancy[p]`` is the
    0-based start label of the strand at position ``p`` at the bottom,
    ``crossings`` is a flat ``n*n`` table of signed crossing counts, and
    ``pairs`` lists the (lower, upper) switched labels per letter, flattened.
    """
    occ = list(range(n))
    cr = [0] * (n * n)
    pairs = []
    for x in word:
        i = (x if x > 0 else -x) - 1
        a = occ[i]
        b = occ[i + 1]
        pairs.append(a)
        pairs.append(b)
        e = 1 if x > 0 else -1
        cr[a * n + b] += e
        cr[b * n + a] += e
        occ[i] = b
        occ[i + 1] = a
    return occ, cr, pairs
