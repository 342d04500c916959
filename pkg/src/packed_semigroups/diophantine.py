"""Apéry sets from minimal solutions of linear Diophantine equations.

For T with msg {n1 < n2 < ... < ne}, the Apéry element of residue i mod n1
is the least value of a2*n2 + ... + ae*ne over the componentwise-minimal
exponent vectors (a2, ..., ae) whose value is congruent to i. Those minimal
vectors depend only on n1 and the residues nj mod n1, so one table serves
every semigroup in the class of a packed root.

Two table builders are provided:

``"diophantine"``
    per residue, solve -n1*x1 + n2*x2 + ... + ne*xe - i*x_{e+1} = 0 with a
    Contejean-Devie completion procedure, keep the minimal solutions whose
    last coordinate is 1, drop the first and last coordinates and take the
    minimal elements of what remains.
``"closure"``
    all residues at once: a vector is minimal for its residue iff no smaller
    vector shares that residue, which is inherited downwards, so the minimal
    vectors form a downset that is grown degree by degree (compiled kernel).

Both produce identical tables; the closure builder is the default because it
scales to multiplicities around 100.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .core import AperyTable, NumericalSemigroup
from .errors import AllZeroCoefficients, BadResidue, NotPacked, TableMismatch
from .packed import is_packed

SolutionVector = tuple[int, ...]

_INT64_SAFE = 2**62


def dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff y <= x componentwise."""
    return all(b <= a for a, b in zip(x, y))


def minimal_elements(vectors: Iterable[SolutionVector]) -> list[SolutionVector]:
    """Dickson-minimal elements of a finite set, sorted."""
    # sorting by degree first means only earlier vectors can be below a later one
    pool = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[SolutionVector] = []
    for v in pool:
        if not any(dominates(v, u) for u in kept):
            kept.append(v)
    return sorted(kept)


@dataclass(frozen=True)
class MinimalSolutionSet:
    dimension: int
    vectors: tuple[SolutionVector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(sorted(tuple(v) for v in self.vectors)))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.vectors


@dataclass(frozen=True)
class HomogeneousEquation:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs or not any(coeffs):
            raise AllZeroCoefficients(f"equation needs a nonzero coefficient: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    def value(self, x: Sequence[int]) -> int:
        return sum(c * v for c, v in zip(self.coeffs, x))


def minimal_homogeneous_solutions(
    eq: HomogeneousEquation | Sequence[int],
    caps: Sequence[int | None] | None = None,
) -> MinimalSolutionSet:
    """Nonzero minimal solutions of ``c . x = 0`` over N^k (its Hilbert basis).

    Breadth-first Contejean-Devie completion: start from the unit vectors;
    a vector y with c.y != 0 is extended by u_j only when (c.y) * c_j < 0, so
    the partial sum always moves towards zero; vectors that dominate a known
    solution are discarded. Each degree is deduplicated before expanding.

    ``caps`` optionally bounds individual coordinates. Every vector on a
    completion path lies below the solution it reaches, so a cap loses
    exactly the minimal solutions that exceed it.
    """
    if not isinstance(eq, HomogeneousEquation):
        eq = HomogeneousEquation(tuple(eq))
    c = eq.coeffs
    k = len(c)
    bound = [None] * k if caps is None else list(caps)

    def room(y: SolutionVector, j: int) -> bool:
        return bound[j] is None or y[j] < bound[j]

    solutions: list[SolutionVector] = []
    zero = (0,) * k
    frontier = {zero[:j] + (1,) + zero[j + 1 :] for j in range(k) if room(zero, j)}
    while frontier:
        expanded: set[SolutionVector] = set()
        for y in sorted(frontier):
            s = eq.value(y)
            if s == 0:
                solutions.append(y)
                continue
            for j in range(k):
                if s * c[j] < 0 and room(y, j):
                    expanded.add(y[:j] + (y[j] + 1,) + y[j + 1 :])
        frontier = {z for z in expanded if not any(dominates(z, x) for x in solutions)}
    return MinimalSolutionSet(k, tuple(solutions))


def minimal_congruence_solutions(modulus: int, residue_coeffs: Sequence[int], i: int) -> MinimalSolutionSet:
    """Minimal (a2, ..., ae) in N^(e-1) with sum(a_j * c_j) = i (mod modulus)."""
    if not 1 <= i < modulus:
        raise BadResidue(f"residue must lie in [1, {modulus - 1}], got {i}")
    k = len(residue_coeffs)
    eq = HomogeneousEquation((-modulus, *residue_coeffs, -i))
    # only generators with last coordinate 0 or 1 matter, so the search caps it at 1
    basis = minimal_homogeneous_solutions(eq, caps=[None] * (k + 1) + [1])
    lifted = [v[1:-1] for v in basis if v[-1] == 1]
    return MinimalSolutionSet(k, tuple(minimal_elements(lifted)))


@dataclass(frozen=True)
class ResidueClassTable:
    """Minimal exponent vectors per residue, shared by a whole class [S].

    ``residues[j]`` is the residue mod ``modulus`` of the (j+2)-th generator of
    the packed root; ``table[i]`` holds the vectors for residue ``i``.
    """

    modulus: int
    residues: tuple[int, ...]
    table: dict[int, MinimalSolutionSet]

    def __getitem__(self, i: int) -> MinimalSolutionSet:
        return self.table[i]

    @property
    def size(self) -> int:
        return sum(len(s) for s in self.table.values())

    @cached_property
    def _flat(self) -> tuple[np.ndarray, np.ndarray]:
        k = len(self.residues)
        rows: list[SolutionVector] = []
        offsets = [0, 0]
        for i in range(1, self.modulus):
            rows.extend(self.table[i].vectors)
            offsets.append(len(rows))
        flat = np.array(rows, dtype=np.int64).reshape(len(rows), k)
        return np.ascontiguousarray(flat), np.array(offsets, dtype=np.int64)

    @cached_property
    def max_degree(self) -> int:
        return max((sum(v) for s in self.table.values() for v in s), default=0)


def _closure_table(modulus: int, residues: Sequence[int]) -> dict[int, list[SolutionVector]]:
    vectors, vres = kernels.closure_vectors(modulus, list(residues))
    grouped: dict[int, list[SolutionVector]] = {i: [] for i in range(1, modulus)}
    for v, r in zip(vectors, vres):
        grouped[r].append(tuple(v))
    return grouped


def build_table(modulus: int, residues: Sequence[int], method: str = "closure") -> ResidueClassTable:
    """Residue table for multiplicity ``modulus`` and generator residues ``residues``."""
    residues = tuple(int(r) % modulus for r in residues)
    k = len(residues)
    if method == "closure":
        grouped = _closure_table(modulus, residues)
        table = {i: MinimalSolutionSet(k, tuple(grouped[i])) for i in range(1, modulus)}
    elif method == "diophantine":
        table = {i: minimal_congruence_solutions(modulus, residues, i) for i in range(1, modulus)}
    else:
        raise ValueError(f"unknown table method {method!r}")
    return ResidueClassTable(modulus, residues, table)


def residue_class_table(S: NumericalSemigroup, method: str = "closure") -> ResidueClassTable:
    if S.is_whole or not is_packed(S):
        raise NotPacked(f"{S} is not packed")
    m = S.m
    return build_table(m, [g - m for g in S.msg[1:]], method)


def weights_for(T: NumericalSemigroup, table: ResidueClassTable) -> tuple[int, ...]:
    """Generators of T other than n1, ordered to match ``table.residues``."""
    m = table.modulus
    if T.m != m or T.e != len(table.residues) + 1:
        raise TableMismatch(f"{T} does not fit a table with modulus {m} and {len(table.residues)} residues")
    by_residue = {g % m: g for g in T.msg[1:]}
    try:
        weights = tuple(by_residue[r] for r in table.residues)
    except KeyError:
        raise TableMismatch(f"residues of {T} mod {m} differ from {table.residues}") from None
    if len(by_residue) != len(weights):
        raise TableMismatch(f"residues of {T} mod {m} differ from {table.residues}")
    return weights


def apery_from_table(T: NumericalSemigroup, table: ResidueClassTable) -> AperyTable:
    """Ap(T, m(T)) as per-residue minima of dot products with T's generators."""
    weights = weights_for(T, table)
    m = table.modulus
    if m == 1:
        return AperyTable(1, (0,))
    if table.max_degree * max(weights) < _INT64_SAFE:
        flat, offsets = table._flat
        w = kernels.apery_from_vectors(flat, offsets, np.array(weights, dtype=np.int64))
    else:
        w = [0] + [
            min(sum(a * b for a, b in zip(v, weights)) for v in table.table[i]) for i in range(1, m)
        ]
    if min(w) < 0:
        raise TableMismatch(f"table has an empty residue class for {T}")
    return AperyTable(m, tuple(w))


@dataclass(frozen=True)
class AperyInvariants:
    frobenius: int
    genus: int


def invariants_from_apery(t: AperyTable) -> AperyInvariants:
    """Frobenius number and genus from an Apéry set (genus division must be exact)."""
    return AperyInvariants(t.frobenius(), t.genus())
