"""Wilf-inequality scans over bounded-depth class trees.

Every node's Frobenius number and genus come from the class's shared
residue table, so a scan costs one table build plus one grouped minimum per
node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import NumericalSemigroup
from .diophantine import ResidueClassTable, residue_class_table
from .tree import _parallel_map, iter_levels, node_invariants


@dataclass(frozen=True)
class WilfReport:
    """Aggregate of a scan over levels 0..depth of the tree rooted at ``root``.

    ``node_count`` includes the root; ``descendant_count`` counts the nodes
    strictly below it. Quotients are (F + 1) / g as exact fractions, and the
    witnesses are the lexicographically least semigroups attaining them.
    """

    root: NumericalSemigroup
    depth: int
    node_count: int
    min_quotient: Fraction
    max_quotient: Fraction
    min_witness: NumericalSemigroup
    max_witness: NumericalSemigroup
    violations: tuple[NumericalSemigroup, ...] = field(default=())
    level_sizes: tuple[int, ...] = field(default=())

    @property
    def descendant_count(self) -> int:
        return self.node_count - 1

    @property
    def all_hold(self) -> bool:
        return not self.violations


def scan(
    root: NumericalSemigroup,
    depth: int,
    table: ResidueClassTable | None = None,
    method: str = "closure",
    threads: int | None = None,
) -> WilfReport:
    """Check e*g <= (e-1)*(F+1) on every node of levels 0..depth below ``root``."""
    if table is None:
        table = residue_class_table(root, method)
    e = root.e
    count = 0
    sizes = []
    lo = hi = None
    violations = []
    for layer in iter_levels(root, depth):
        nodes = [n.semigroup for n in layer]
        sizes.append(len(nodes))
        count += len(nodes)
        stats = _parallel_map(lambda S: node_invariants(S, table), nodes, threads)
        for S, (f, g) in zip(nodes, stats):
            if e * g > (e - 1) * (f + 1):
                violations.append(S)
            q = Fraction(f + 1, g)
            if lo is None or (q, S) < lo:
                lo = (q, S)
            if hi is None or q > hi[0] or (q == hi[0] and S < hi[1]):
                hi = (q, S)
    sizes.extend(0 for _ in range(depth + 1 - len(sizes)))
    return WilfReport(
        root=root,
        depth=depth,
        node_count=count,
        min_quotient=lo[0],
        max_quotient=hi[0],
        min_witness=lo[1],
        max_witness=hi[1],
        violations=tuple(sorted(violations)),
        level_sizes=tuple(sizes),
    )
