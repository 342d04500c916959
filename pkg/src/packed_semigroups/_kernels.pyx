# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot kernels. Mirrors ``_kernels_py`` exactly."""

from cython.operator cimport dereference as deref
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector


cdef vector[int64_t] _usable(gens, int64_t limit):
    cdef vector[int64_t] out
    for g in sorted(set(gens)):
        if 0 < g <= limit:
            out.push_back(g)
    return out


cdef void _fill(unsigned char* s, int64_t limit, vector[int64_t]& g) noexcept nogil:
    cdef int64_t x
    cdef size_t j
    s[0] = 1
    for x in range(1, limit + 1):
        for j in range(g.size()):
            if g[j] > x:
                break
            if s[x - g[j]]:
                s[x] = 1
                break


def sieve(gens, int64_t limit):
    if limit < 0:
        return bytearray()
    cdef bytearray out = bytearray(limit + 1)
    cdef unsigned char* s = out
    cdef vector[int64_t] g = _usable(gens, limit)
    with nogil:
        _fill(s, limit, g)
    return out


def is_member(gens, int64_t x):
    if x < 0:
        return False
    return bool(sieve(gens, x)[x])


def apery_sieve(gens, int64_t n, int64_t limit):
    cdef bytearray buf = sieve(gens, limit)
    cdef unsigned char* s = buf
    cdef vector[int64_t] w = vector[int64_t](n, -1)
    cdef int64_t x, r, found = 0
    with nogil:
        for x in range(limit + 1):
            if s[x]:
                r = x % n
                if w[r] < 0:
                    w[r] = x
                    found += 1
                    if found == n:
                        break
    return [w[r] for r in range(n)]


def apery_from_vectors(const int64_t[:, ::1] flat, const int64_t[::1] offsets,
                       const int64_t[::1] weights):
    cdef Py_ssize_t n = offsets.shape[0] - 1
    cdef Py_ssize_t k = weights.shape[0]
    cdef Py_ssize_t i, row, j
    cdef int64_t best, dot
    cdef vector[int64_t] w = vector[int64_t](max(n, 0), -1)
    if n <= 0:
        return []
    with nogil:
        w[0] = 0
        for i in range(1, n):
            best = -1
            for row in range(offsets[i], offsets[i + 1]):
                dot = 0
                for j in range(k):
                    dot = dot + flat[row, j] * weights[j]
                if best < 0 or dot < best:
                    best = dot
            w[i] = best
    return [w[i] for i in range(n)]


def closure_vectors(int64_t m, residues):
    """Downset of residue-minimal exponent vectors; see ``_kernels_py``."""
    cdef Py_ssize_t k = len(residues)
    cdef vector[int64_t] res
    for r in residues:
        res.push_back(r % m)
    # mixed-radix key, every coordinate is < m
    cdef vector[int64_t] radix
    cdef object p = 1
    for _ in range(k):
        radix.push_back(p)
        p = p * m
    if p >= 2 ** 62:
        raise OverflowError("key space m**k exceeds 62 bits")

    cdef Py_ssize_t words = (m + 63) // 64
    cdef vector[int64_t] coords = vector[int64_t](k, 0)
    cdef vector[int64_t] vres
    cdef vector[int64_t] keys
    cdef vector[uint64_t] bits = vector[uint64_t](words, 0)
    cdef unordered_map[int64_t, Py_ssize_t] index
    cdef vector[uint64_t] acc = vector[uint64_t](words, 0)
    cdef Py_ssize_t start = 0, stop = 1, a, j, t, last, w, pi
    cdef int64_t key, zkey, rz
    cdef bint ok
    cdef unordered_map[int64_t, Py_ssize_t].iterator it

    vres.push_back(0)
    keys.push_back(0)
    bits[0] = 1
    index[0] = 0
    with nogil:
        while start < stop:
            for a in range(start, stop):
                last = 0
                for j in range(k):
                    if coords[a * k + j]:
                        last = j
                key = keys[a]
                for j in range(last, k):
                    zkey = key + radix[j]
                    for w in range(words):
                        acc[w] = 0
                    ok = True
                    for t in range(k):
                        if t == j:
                            pi = a
                        elif coords[a * k + t]:
                            it = index.find(zkey - radix[t])
                            if it == index.end():
                                ok = False
                                break
                            pi = deref(it).second
                        else:
                            continue
                        for w in range(words):
                            acc[w] |= bits[pi * words + w]
                    if not ok:
                        continue
                    rz = (vres[a] + res[j]) % m
                    if (acc[rz >> 6] >> (rz & 63)) & 1:
                        continue
                    acc[rz >> 6] |= (<uint64_t>1) << (rz & 63)
                    index[zkey] = vres.size()
                    for t in range(k):
                        coords.push_back(coords[a * k + t] + (1 if t == j else 0))
                    vres.push_back(rz)
                    keys.push_back(zkey)
                    for w in range(words):
                        bits.push_back(acc[w])
            start = stop
            stop = vres.size()

    cdef Py_ssize_t total = vres.size()
    out = [tuple([coords[a * k + t] for t in range(k)]) for a in range(1, total)]
    out_res = [vres[a] for a in range(1, total)]
    return out, out_res
