"""Numerical semigroups stored by their minimal generating set.

Membership, Apéry sets, Frobenius number and genus are all computed by a
marking sieve over the generators; this is also the independent reference
against which the Diophantine route in :mod:`.diophantine` is checked.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import kernels
from .errors import EmptyInput, InconsistentTable, NotCoprime, NotMember, ZeroModulus


def canonicalize(raw: Iterable[int]) -> tuple[int, ...]:
    """Sort and deduplicate a generator list, rejecting sets with gcd > 1."""
    gens = sorted(set(int(x) for x in raw))
    if not gens:
        raise EmptyInput("generator list is empty")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    d = gcd(*gens)
    if d != 1:
        raise NotCoprime(f"gcd of {gens} is {d}, not 1")
    return tuple(gens)


def minimal_generators(gens: Sequence[int]) -> tuple[int, ...]:
    """Drop every generator that is a combination of the smaller ones."""
    kept: list[int] = []
    for g in canonicalize(gens):
        if kept and kernels.is_member(kept, g):
            continue
        kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class AperyTable:
    """``w[i]`` is the least element of S congruent to ``i`` mod ``n``."""

    n: int
    w: tuple[int, ...]

    def frobenius(self) -> int:
        return max(self.w) - self.n

    def genus(self) -> int:
        # g = sum(w)/n - (n-1)/2, kept in integers
        num = sum(self.w) - self.n * (self.n - 1) // 2
        q, r = divmod(num, self.n)
        if r:
            raise InconsistentTable(f"genus formula leaves remainder {r}/{self.n} for w={self.w}")
        return q


@dataclass(frozen=True)
class WilfCheck:
    holds: bool
    lhs: int
    rhs: int
    quotient: Fraction | None


@dataclass(frozen=True, order=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating set ``msg``.

    The constructor checks order and coprimality but trusts minimality; use
    :meth:`generated_by` for arbitrary input. Equality and ordering are
    lexicographic on ``msg``. Invariants are computed lazily and cached.
    """

    msg: tuple[int, ...]

    def __post_init__(self) -> None:
        msg = tuple(int(x) for x in self.msg)
        if not msg:
            raise EmptyInput("empty minimal generating set")
        if any(a >= b for a, b in zip(msg, msg[1:])) or msg[0] <= 0:
            raise ValueError(f"msg must be strictly increasing positive integers: {msg}")
        if gcd(*msg) != 1:
            raise NotCoprime(f"gcd of {msg} is {gcd(*msg)}, not 1")
        object.__setattr__(self, "msg", msg)

    @classmethod
    def generated_by(cls, gens: Iterable[int]) -> NumericalSemigroup:
        return cls(minimal_generators(list(gens)))

    @property
    def m(self) -> int:
        return self.msg[0]

    @property
    def e(self) -> int:
        return len(self.msg)

    @property
    def maxgen(self) -> int:
        return self.msg[-1]

    @property
    def is_whole(self) -> bool:
        return self.msg == (1,)

    @cached_property
    def apery(self) -> AperyTable:
        """Apéry set with respect to the multiplicity."""
        return apery_sieve(self, self.m)

    @cached_property
    def frobenius(self) -> int:
        return self.apery.frobenius()

    @cached_property
    def genus(self) -> int:
        return self.apery.genus()

    def __contains__(self, x: int) -> bool:
        return is_member(self, x)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.msg)) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self.msg!r})"


def is_member(S: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        return False
    w = S.apery.w
    return x >= w[x % S.m]


def sieve_limit(S: NumericalSemigroup, n: int | None = None) -> int:
    """Upper bound on every Apéry element: m * M(S), plus ``n`` when n > m."""
    extra = 0 if n is None or n <= S.m else n
    return S.m * S.maxgen + extra


def apery_sieve(S: NumericalSemigroup, n: int) -> AperyTable:
    if n == 0:
        raise ZeroModulus("Apéry set needs a nonzero element")
    if n < 0 or not kernels.is_member(S.msg, n):
        raise NotMember(f"{n} is not an element of {S}")
    w = kernels.apery_sieve(S.msg, n, sieve_limit(S, n))
    if min(w) < 0:
        raise RuntimeError(f"sieve bound too small for {S} mod {n}")
    return AperyTable(n, tuple(w))


def frobenius(S: NumericalSemigroup) -> int:
    return S.frobenius


def genus(S: NumericalSemigroup) -> int:
    return S.genus


def wilf_check(S: NumericalSemigroup) -> WilfCheck:
    """Test e*g <= (e-1)*(F+1); the quotient (F+1)/g is exact."""
    if S.is_whole:
        return WilfCheck(True, 0, 0, None)
    f, g, e = S.frobenius, S.genus, S.e
    lhs, rhs = e * g, (e - 1) * (f + 1)
    return WilfCheck(lhs <= rhs, lhs, rhs, Fraction(f + 1, g))


NATURALS = NumericalSemigroup((1,))
