# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``.

Same conventions and same results; see that module for the definitions.
"""

from libcpp.vector cimport vector
from libcpp cimport bool as cbool

BACKEND = "compiled"


cdef inline int iabs(int x) nogil:
    return -x if x < 0 else x


cdef void reverse_cell(vector[int]& cell) noexcept nogil:
    cdef size_t i = 0
    cdef int x, y, a, d
    while i + 1 < cell.size():
        x = cell[i]
        y = cell[i + 1]
        if x < 0 and y > 0:
            a = -x
            d = a - y
            if d == 0:
                cell.erase(cell.begin() + i, cell.begin() + i + 2)
            elif d >= 2 or d <= -2:
                cell[i] = y
                cell[i + 1] = x
            else:
                cell[i] = y
                cell[i + 1] = a
                cell.insert(cell.begin() + i + 2, x)
                cell.insert(cell.begin() + i + 2, -y)
            if i > 0:
                i -= 1
        else:
            i += 1


cdef cbool c_extract_left(const vector[int]& word, int letter,
                          vector[int]& out) noexcept nogil:
    cdef vector[int] zone
    cdef vector[int] cell
    cdef size_t idx, k, j
    zone.push_back(letter)
    out.clear()
    for idx in range(word.size()):
        cell.clear()
        for j in range(zone.size()):
            cell.push_back(-zone[j])
        cell.push_back(word[idx])
        reverse_cell(cell)
        k = 0
        while k < cell.size() and cell[k] > 0:
            out.push_back(cell[k])
            k += 1
        zone.clear()
        for j in range(k, cell.size()):
            zone.push_back(-cell[j])
        if zone.size() == 0:
            for j in range(idx + 1, word.size()):
                out.push_back(word[j])
            return True
    return False


cdef cbool c_extract_word(vector[int]& word, const vector[int]& prefix,
                          size_t* matched) noexcept nogil:
    # In-place: on success ``word`` becomes the rest.
    cdef vector[int] rest
    cdef size_t m
    for m in range(prefix.size()):
        if not c_extract_left(word, prefix[m], rest):
            matched[0] = m
            return False
        word.swap(rest)
    matched[0] = prefix.size()
    return True


def free_reduce(word):
    cdef vector[int] w = word
    cdef vector[int] out
    cdef size_t i
    for i in range(w.size()):
        if out.size() and out.back() == -w[i]:
            out.pop_back()
        else:
            out.push_back(w[i])
    return out


def extract_left(word, int letter):
    cdef vector[int] w = word
    cdef vector[int] out
    if c_extract_left(w, letter, out):
        return out
    return None


def extract_right(word, int letter):
    cdef vector[int] w = word
    cdef vector[int] rw
    cdef vector[int] out
    cdef vector[int] res
    cdef size_t i
    for i in range(w.size()):
        rw.push_back(w[w.size() - 1 - i])
    if not c_extract_left(rw, letter, out):
        return None
    for i in range(out.size()):
        res.push_back(out[out.size() - 1 - i])
    return res


def extract_word_left(word, prefix):
    cdef vector[int] w = word
    cdef vector[int] p = prefix
    cdef size_t matched = 0
    if c_extract_word(w, p, &matched):
        return matched, w
    return matched, None


cdef void c_meet(vector[int]& a, vector[int]& b, vector[int]& g, int n) noexcept nogil:
    cdef int j = 0, m, t
    g.clear()
    for m in range(n):
        g.push_back(m)
    while j < n - 1:
        if a[j] > a[j + 1] and b[j] > b[j + 1]:
            t = a[j]; a[j] = a[j + 1]; a[j + 1] = t
            t = b[j]; b[j] = b[j + 1]; b[j + 1] = t
            for m in range(n):
                if g[m] == j:
                    g[m] = j + 1
                elif g[m] == j + 1:
                    g[m] = j
            j = 0
        else:
            j += 1


def suffix_descents(word, int n):
    cdef vector[int] w = word
    cdef vector[int] first, comp, g
    cdef int c, b, j, t
    cdef object mask
    masks = [0] * (w.size() + 1)
    for j in range(n):
        first.push_back(j)
    for c in range(<int>w.size() - 1, -1, -1):
        b = w[c] - 1
        comp.clear()
        for j in range(n):
            comp.push_back(n - 1 - j)
        t = comp[b]; comp[b] = comp[b + 1]; comp[b + 1] = t
        c_meet(comp, first, g, n)
        t = g[b]; g[b] = g[b + 1]; g[b + 1] = t
        first.swap(g)
        mask = 0
        for j in range(n - 1):
            if first[j] > first[j + 1]:
                mask |= 1 << j
        masks[c] = mask
    return masks


cdef void c_simple_word(vector[int]& perm, vector[int]& out) noexcept nogil:
    cdef int j = 0, t
    cdef int n = perm.size()
    while j < n - 1:
        if perm[j] > perm[j + 1]:
            out.push_back(j + 1)
            t = perm[j]; perm[j] = perm[j + 1]; perm[j + 1] = t
            j = 0
        else:
            j += 1


def delta_letters(int n):
    cdef list out = []
    cdef int top
    for top in range(1, n):
        out.extend(range(top, 0, -1))
    return out


def simple_word(perm):
    cdef vector[int] p = perm
    cdef vector[int] out
    c_simple_word(p, out)
    return out


cdef void c_delta_form(const vector[int]& raw, int n, int* r_out,
                       vector[int]& pos) noexcept nogil:
    cdef vector[int] word, items, u, uinv, comp, delta, rev
    cdef size_t idx = 0, length, matched, i
    cdef int x, b, j, t, flips, r
    for i in range(raw.size()):
        if word.size() and word.back() == -raw[i]:
            word.pop_back()
        else:
            word.push_back(raw[i])
    length = word.size()
    uinv.resize(n)
    while idx < length:
        x = word[idx]
        if x > 0:
            items.push_back(x)
            idx += 1
            continue
        u.clear()
        for j in range(n):
            u.push_back(j)
        while idx < length and word[idx] < 0:
            b = -word[idx] - 1
            if u[b] > u[b + 1]:
                break
            t = u[b]; u[b] = u[b + 1]; u[b + 1] = t
            idx += 1
        for j in range(n):
            uinv[u[j]] = j
        comp.clear()
        for j in range(n):
            comp.push_back(uinv[n - 1 - j])
        items.push_back(0)
        c_simple_word(comp, items)
    flips = 0
    for i in range(items.size()):
        x = items[items.size() - 1 - i]
        if x == 0:
            flips += 1
        elif flips & 1:
            rev.push_back(n - x)
        else:
            rev.push_back(x)
    pos.clear()
    for i in range(rev.size()):
        pos.push_back(rev[rev.size() - 1 - i])
    for j in range(1, n):
        for b in range(j, 0, -1):
            delta.push_back(b)
    r = flips
    while r > 0:
        word = pos
        if not c_extract_word(word, delta, &matched):
            break
        pos.swap(word)
        r -= 1
    r_out[0] = r


def delta_form(word, int n):
    cdef vector[int] w = word
    cdef vector[int] pos
    cdef int r = 0
    with nogil:
        c_delta_form(w, n, &r, pos)
    return r, pos


def lexmin(word, int n):
    cdef vector[int] cur = word
    cdef vector[int] rest
    cdef vector[int] out
    cdef int i
    cdef cbool found
    with nogil:
        while cur.size():
            found = False
            for i in range(1, n):
                if c_extract_left(cur, i, rest):
                    out.push_back(i)
                    cur.swap(rest)
                    found = True
                    break
            if not found:
                break
    if cur.size():
        raise AssertionError("no left divisor found")
    return out


def strand_trace(word, int n):
    cdef vector[int] w = word
    cdef vector[int] occ, cr, pairs
    cdef size_t k
    cdef int x, i, a, b, e, j
    for j in range(n):
        occ.push_back(j)
    cr.resize(n * n, 0)
    for k in range(w.size()):
        x = w[k]
        i = iabs(x) - 1
        a = occ[i]
        b = occ[i + 1]
        pairs.push_back(a)
        pairs.push_back(b)
        e = 1 if x > 0 else -1
        cr[a * n + b] += e
        cr[b * n + a] += e
        occ[i] = b
        occ[i + 1] = a
    return occ, cr, pairs
