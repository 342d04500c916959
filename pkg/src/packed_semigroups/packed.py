"""Packed semigroups: msg(S) inside {m, ..., 2m-1}.

Every semigroup of multiplicity m and embedding dimension e maps to exactly
one packed semigroup (its residues mod m shifted into [m, 2m-1]); the fibers
of that map partition the semigroups with fixed (m, e).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .core import NumericalSemigroup
from .errors import BadDimensions, FamilyTooLarge, TrivialSemigroup

DEFAULT_MAX_MEMBERS = 10**7


@dataclass(frozen=True)
class PackedFamily:
    m: int
    e: int
    members: tuple[NumericalSemigroup, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def check_dimensions(m: int, e: int) -> None:
    if not 2 <= e <= m:
        raise BadDimensions(f"need 2 <= e <= m, got m={m}, e={e}")


def enumerate_packed(m: int, e: int, max_members: int = DEFAULT_MAX_MEMBERS) -> PackedFamily:
    """All packed semigroups with multiplicity ``m`` and embedding dimension ``e``.

    One member per (e-1)-subset A of {1, ..., m-1} with gcd(A + {m}) = 1,
    generated by {m} + (A + {0}). Subsets are visited in lexicographic order,
    which is also the lexicographic order of the resulting generator lists.
    """
    check_dimensions(m, e)
    if comb(m - 1, e - 1) > max_members:
        raise FamilyTooLarge(f"C({m - 1}, {e - 1}) = {comb(m - 1, e - 1)} exceeds cap {max_members}")
    members = [
        NumericalSemigroup((m,) + tuple(m + a for a in A))
        for A in combinations(range(1, m), e - 1)
        if gcd(m, *A) == 1
    ]
    return PackedFamily(m, e, tuple(members))


def is_packed(S: NumericalSemigroup) -> bool:
    return S.maxgen <= 2 * S.m - 1


def pack(S: NumericalSemigroup) -> NumericalSemigroup:
    if S.is_whole:
        raise TrivialSemigroup("N has no packed representative")
    m = S.m
    return NumericalSemigroup(tuple(sorted(m + x % m for x in S.msg)))


def reduction_step(S: NumericalSemigroup) -> NumericalSemigroup | None:
    """Replace M(S) by M(S) - m, or None when S is already packed."""
    m, top = S.m, S.maxgen
    if top - m <= m:
        return None
    return NumericalSemigroup(tuple(sorted(S.msg[:-1] + (top - m,))))


def reduction_chain(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """S = S_0, S_1, ..., S_k = pack(S), each step lowering the largest generator by m."""
    if S.is_whole:
        raise TrivialSemigroup("N has no packed representative")
    chain = [S]
    while (nxt := reduction_step(chain[-1])) is not None:
        chain.append(nxt)
    return chain
