"""The tree of a packed class and bounded enumerations over it.

The children of P = <n1 < ... < ne> are the semigroups obtained by replacing
some nk (k >= 2) by nk + n1, provided nk + n1 > ne and nk + n1 is not in the
monoid generated by the remaining generators. Going down an edge never lowers
the Frobenius number and strictly raises the genus, so a bound on either
invariant prunes whole subtrees.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Literal

from . import kernels
from .core import NumericalSemigroup
from .diophantine import ResidueClassTable, apery_from_table
from .errors import BadDimensions, NotPacked
from .packed import check_dimensions, enumerate_packed, is_packed, reduction_step

BoundKind = Literal["frobenius", "genus"]


@dataclass(frozen=True)
class TreeNode:
    semigroup: NumericalSemigroup
    level: int
    parent: NumericalSemigroup | None = None


@dataclass(frozen=True)
class EnumerationResult:
    members: tuple[NumericalSemigroup, ...]
    bound_kind: BoundKind
    bound: int
    exact_filter: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class FamilyExtremes:
    min_frobenius: tuple[int, NumericalSemigroup]
    min_genus: tuple[int, NumericalSemigroup]
    max_packed_frobenius: tuple[int, NumericalSemigroup]


def children(P: NumericalSemigroup) -> list[NumericalSemigroup]:
    gens = P.msg
    n1, ne = gens[0], gens[-1]
    out = []
    for k in range(1, len(gens)):
        candidate = gens[k] + n1
        if candidate <= ne:
            continue
        rest = gens[:k] + gens[k + 1 :]
        if not kernels.is_member(rest, candidate):
            out.append(NumericalSemigroup(rest + (candidate,)))
    return sorted(out)


def parent(H: NumericalSemigroup) -> NumericalSemigroup | None:
    """Inverse of an edge; None exactly when H is a packed root."""
    return reduction_step(H)


def node_invariants(S: NumericalSemigroup, table: ResidueClassTable | None = None) -> tuple[int, int]:
    """(F, g) of S, through the class table when one is given, else by sieve."""
    if table is None:
        return S.frobenius, S.genus
    t = apery_from_table(S, table)
    return t.frobenius(), t.genus()


def _require_packed(root: NumericalSemigroup) -> None:
    if root.is_whole or not is_packed(root):
        raise NotPacked(f"{root} is not a packed numerical semigroup")


def _bounded_class(
    root: NumericalSemigroup,
    bound: int,
    kind: BoundKind,
    table: ResidueClassTable | None,
) -> list[NumericalSemigroup]:
    idx = 0 if kind == "frobenius" else 1

    def value(S: NumericalSemigroup) -> int:
        return node_invariants(S, table)[idx]

    if value(root) > bound:
        return []
    found = [root]
    frontier = [root]
    while frontier:
        layer = [H for P in frontier for H in children(P) if value(H) <= bound]
        found.extend(layer)
        frontier = sorted(layer)
    return sorted(found)


def enumerate_class_frobenius(
    root: NumericalSemigroup, F: int, table: ResidueClassTable | None = None
) -> EnumerationResult:
    """Members T of the class of ``root`` with F(T) <= F."""
    _require_packed(root)
    return EnumerationResult(tuple(_bounded_class(root, F, "frobenius", table)), "frobenius", F)


def enumerate_class_genus(
    root: NumericalSemigroup, g: int, table: ResidueClassTable | None = None
) -> EnumerationResult:
    """Members T of the class of ``root`` with g(T) <= g."""
    _require_packed(root)
    return EnumerationResult(tuple(_bounded_class(root, g, "genus", table)), "genus", g)


def _parallel_map(fn: Callable, items: Iterable, threads: int | None) -> list:
    items = list(items)
    if threads is None or threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _enumerate_family(m: int, e: int, bound: int, kind: BoundKind, exact: bool, threads: int | None):
    check_dimensions(m, e)
    if m > bound + 1:
        raise BadDimensions(f"need m <= {kind} bound + 1, got m={m}, bound={bound}")
    idx = 0 if kind == "frobenius" else 1
    roots = [S for S in enumerate_packed(m, e) if node_invariants(S)[idx] <= bound]
    per_root = _parallel_map(lambda R: _bounded_class(R, bound, kind, None), roots, threads)
    members = sorted(S for block in per_root for S in block)
    if exact:
        members = [S for S in members if node_invariants(S)[idx] == bound]
    return EnumerationResult(tuple(members), kind, bound, exact)


def enumerate_family_frobenius(
    m: int, e: int, F: int, exact: bool = False, threads: int | None = None
) -> EnumerationResult:
    """All S with m(S) = m, e(S) = e and F(S) <= F (or == F when ``exact``)."""
    return _enumerate_family(m, e, F, "frobenius", exact, threads)


def enumerate_family_genus(
    m: int, e: int, g: int, exact: bool = False, threads: int | None = None
) -> EnumerationResult:
    """All S with m(S) = m, e(S) = e and g(S) <= g (or == g when ``exact``)."""
    return _enumerate_family(m, e, g, "genus", exact, threads)


def iter_levels(root: NumericalSemigroup, depth: int):
    """Yield the levels 0..depth of the class tree as lists of TreeNode."""
    _require_packed(root)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    layer = [TreeNode(root, 0)]
    yield layer
    for lvl in range(1, depth + 1):
        layer = [TreeNode(H, lvl, node.semigroup) for node in layer for H in children(node.semigroup)]
        if not layer:
            return
        yield layer


def levels(root: NumericalSemigroup, depth: int) -> list[list[TreeNode]]:
    """Levels 0..depth; level k+1 concatenates the sorted children of level k.

    Trailing empty levels are kept so that ``len(result) == depth + 1``.
    """
    out = list(iter_levels(root, depth))
    out.extend([] for _ in range(depth + 1 - len(out)))
    return out


def family_extremes(m: int, e: int) -> FamilyExtremes:
    """Min F and min g over all semigroups with (m, e), and max F over the packed ones.

    Both minima are attained by packed semigroups, since F never decreases
    and g strictly increases away from the root of each class.
    """
    family = enumerate_packed(m, e).members
    # min over (value, semigroup) tuples breaks ties lexicographically
    min_f = min((S.frobenius, S) for S in family)
    min_g = min((S.genus, S) for S in family)
    max_f = max(family, key=lambda S: (S.frobenius, tuple(-x for x in S.msg)))
    return FamilyExtremes(min_f, min_g, (max_f.frobenius, max_f))
