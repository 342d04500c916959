"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or when ``PACKED_SEMIGROUPS_PURE=1`` is set.
Sieves are big-integer bitsets (bit ``x`` set iff ``x`` is representable).
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

_TO_BYTES = bytes.maketrans(b"01", b"\x00\x01")


def _bitset(gens: Sequence[int], limit: int) -> int:
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in gens:
        if g <= 0 or g > limit:
            continue
        # closure under +g: shifts by g, 2g, 4g, ... cover every multiple up to limit
        shift = g
        while shift <= limit:
            bits = (bits | (bits << shift)) & mask
            shift <<= 1
    return bits


def _as_string(bits: int, limit: int) -> str:
    return format(bits, "b")[::-1].ljust(limit + 1, "0")


def sieve(gens: Sequence[int], limit: int) -> bytearray:
    """Return ``s`` of length ``limit + 1`` with ``s[x] == 1`` iff x is in <gens>."""
    if limit < 0:
        return bytearray()
    bits = _bitset(gens, limit)
    return bytearray(_as_string(bits, limit).encode("ascii").translate(_TO_BYTES))


def is_member(gens: Sequence[int], x: int) -> bool:
    if x < 0:
        return False
    return bool((_bitset(gens, x) >> x) & 1)


def apery_sieve(gens: Sequence[int], n: int, limit: int) -> list[int]:
    """Least element of <gens> in each residue class mod ``n`` up to ``limit``.

    Residues with no representative below ``limit`` get ``-1``.
    """
    s = _as_string(_bitset(gens, limit), limit)
    w = []
    for r in range(n):
        k = s[r::n].find("1")
        w.append(-1 if k < 0 else r + k * n)
    return w


def apery_from_vectors(flat, offsets, weights) -> list[int]:
    """Grouped minimum of ``flat @ weights`` over ``offsets[i]:offsets[i + 1]``."""
    flat = np.asarray(flat, dtype=np.int64)
    offsets = np.asarray(offsets, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    n = len(offsets) - 1
    if len(flat) == 0:
        return [0] + [-1] * (n - 1) if n else []
    dots = flat @ weights
    w = []
    for i in range(n):
        lo, hi = int(offsets[i]), int(offsets[i + 1])
        if i == 0:
            w.append(0)
        elif hi > lo:
            w.append(int(dots[lo:hi].min()))
        else:
            w.append(-1)
    return w


def closure_vectors(m: int, residues: Sequence[int]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Every nonzero ``a`` in N^k whose residue ``sum(a_j r_j) mod m`` differs
    from the residue of each ``b < a``.

    That property is inherited by every ``b <= a``, so the vectors form a
    finite downset and are generated degree by degree. Returns the vectors
    and their residues, in generation order.
    """
    k = len(residues)
    res = [r % m for r in residues]
    zero = (0,) * k
    # vector -> (residue, bitset of residues of all b <= vector)
    seen: dict[tuple[int, ...], tuple[int, int]] = {zero: (0, 1)}
    layer = [zero]
    out: list[tuple[int, ...]] = []
    out_res: list[int] = []
    while layer:
        nxt = []
        for a in layer:
            ra = seen[a][0]
            last = max((j for j in range(k) if a[j]), default=0)
            for j in range(last, k):
                z = a[:j] + (a[j] + 1,) + a[j + 1 :]
                acc = 0
                for t in range(k):
                    if z[t]:
                        pred = seen.get(z[:t] + (z[t] - 1,) + z[t + 1 :])
                        if pred is None:
                            break
                        acc |= pred[1]
                else:
                    rz = (ra + res[j]) % m
                    if not (acc >> rz) & 1:
                        seen[z] = (rz, acc | (1 << rz))
                        nxt.append(z)
                        out.append(z)
                        out_res.append(rz)
        layer = nxt
    return out, out_res
