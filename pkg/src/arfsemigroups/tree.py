"""Rooted-tree enumeration of all Arf semigroups with a fixed Frobenius number.

The family of Arf semigroups with Frobenius number F is closed under
intersection and under removing the multiplicity, and has the minimum
{0, F+1, ->}.  Hanging every member below the one obtained by removing its
multiplicity therefore yields a tree rooted at that minimum, and walking the
tree upwards enumerates the whole family: the children of S are the sets
S ∪ {x} where x is a special gap below the multiplicity, x differs from F,
and the extension has maximal embedding dimension.

Per-node Apery tables (modulus F+1, a member of every node) and minimal
generating sets are maintained incrementally along edges instead of being
recomputed from scratch.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .core import (
    AperyTable,
    GeneratorSet,
    NumericalSemigroup,
    special_gaps_from_apery,
)
from .errors import (
    ContradictionError,
    InconsistentTableError,
    InternalInvariantError,
    InvalidAdjunctionError,
    InvalidFrobeniusError,
    NotInCovarietyError,
    ScaleLimitError,
)

DEFAULT_MAX_NODES = 10**7


@dataclass(frozen=True)
class TreeNode:
    """One enumerated semigroup with its cached generator and Apery data."""

    semigroup: NumericalSemigroup
    generators: GeneratorSet
    apery: AperyTable
    parent: int  # index of the parent node, -1 for the root
    depth: int


@dataclass(frozen=True)
class CovarietyTree:
    """The tree of all Arf semigroups with Frobenius number ``frobenius``."""

    frobenius: int
    nodes: tuple[TreeNode, ...]
    root: int = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def semigroups(self) -> list[NumericalSemigroup]:
        return [node.semigroup for node in self.nodes]

    def edges(self) -> list[tuple[int, int]]:
        """(child index, parent index) pairs."""
        return [(i, node.parent) for i, node in enumerate(self.nodes) if node.parent >= 0]

    def depth_counts(self) -> tuple[int, ...]:
        depth = max(node.depth for node in self.nodes)
        counts = [0] * (depth + 1)
        for node in self.nodes:
            counts[node.depth] += 1
        return tuple(counts)

    def maximal_indices(self) -> list[int]:
        """Indices of the inclusion-maximal semigroups.

        Children strictly contain their parents, so a maximal element must be
        a leaf, and a leaf is maximal unless some other leaf strictly
        contains it.
        """
        has_child = {node.parent for node in self.nodes if node.parent >= 0}
        leaves = [i for i in range(len(self.nodes)) if i not in has_child]
        out = []
        for i in leaves:
            S = self.nodes[i].semigroup
            if not any(j != i and S.issubset(self.nodes[j].semigroup) for j in leaves):
                out.append(i)
        return out

    def maximal_semigroups(self) -> list[NumericalSemigroup]:
        return [self.nodes[i].semigroup for i in self.maximal_indices()]

    def report(self, wall_seconds: float = 0.0) -> EnumerationReport:
        return EnumerationReport(
            frobenius=self.frobenius,
            node_count=len(self.nodes),
            depth_counts=self.depth_counts(),
            maximal_count=len(self.maximal_indices()),
            wall_seconds=wall_seconds,
        )


@dataclass(frozen=True)
class EnumerationReport:
    frobenius: int
    node_count: int
    depth_counts: tuple[int, ...]
    maximal_count: int
    wall_seconds: float

    def __post_init__(self):
        if self.node_count != sum(self.depth_counts):
            raise ValueError("node count must equal the sum of the per-depth counts")


def is_member_ar(S: NumericalSemigroup, frobenius: int) -> bool:
    """True iff S is an Arf semigroup whose Frobenius number is ``frobenius``."""
    return not S.is_natural() and S.frobenius == frobenius and S.is_arf()


def _med_pair_test(S: NumericalSemigroup, gens: GeneratorSet, x: int) -> bool:
    # a + b - x must stay inside for every pair of minimal generators
    return all(a + b - x in S for a, b in combinations_with_replacement(gens.gens, 2))


def med_adjunction_test(S: NumericalSemigroup, x: int) -> bool:
    """Does adjoining the special gap x (below the multiplicity) keep maximal
    embedding dimension?

    Decided by checking a + b - x ∈ S over all pairs of minimal generators.
    Preconditions (x a special gap, x < m(S)) are enforced with
    ``InvalidAdjunctionError``.
    """
    if S.is_natural():
        raise InvalidAdjunctionError("the naturals admit no adjunction")
    if x >= S.multiplicity():
        raise InvalidAdjunctionError(f"{x} is not below the multiplicity {S.multiplicity()}")
    if x not in S.special_gaps():
        raise InvalidAdjunctionError(f"{x} is not a special gap of {S!r}")
    return _med_pair_test(S, S.minimal_generators(), x)


def apery_after_adjoin(ap: AperyTable, x: int) -> AperyTable:
    """Table for S ∪ {x} from the table for S: the entry x+n becomes x.

    Requires x to be a special gap of S; a missing x+n entry means the caller
    broke that precondition.
    """
    target = x + ap.modulus
    if target not in ap.entries:
        raise InconsistentTableError(f"{target} is not an entry of the table (x={x})")
    return AperyTable(ap.modulus, tuple(x if w == target else w for w in ap.entries))


def msg_after_adjoin(gens: GeneratorSet, x: int) -> GeneratorSet:
    """Minimal generators of S ∪ {x} for a MED adjunction below the multiplicity.

    The result is {x} plus, for each nonzero residue i mod x, the least old
    generator congruent to i.  Every residue class must be represented;
    a gap in the classes means the preconditions were violated.
    """
    if not 1 <= x < gens.multiplicity:
        raise InvalidAdjunctionError(f"{x} is not below the multiplicity {gens.multiplicity}")
    best: dict[int, int] = {}
    for a in gens:
        r = a % x
        if r and (r not in best or a < best[r]):
            best[r] = a
    if len(best) != x - 1:
        missing = sorted(set(range(1, x)) - set(best))
        raise ContradictionError(f"residue classes {missing} mod {x} have no generator")
    return GeneratorSet(tuple(sorted([x, *best.values()])))


def _expand(node: TreeNode, frobenius: int) -> list[tuple[NumericalSemigroup, GeneratorSet, AperyTable]]:
    """All children of a node, ascending in the adjoined element."""
    S, gens, ap = node.semigroup, node.generators, node.apery
    m = gens.multiplicity
    out = []
    for x in special_gaps_from_apery(ap):
        if x < m and x != frobenius and _med_pair_test(S, gens, x):
            out.append((S.adjoin(x), msg_after_adjoin(gens, x), apery_after_adjoin(ap, x)))
    return out


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """The children of S in the tree for F = F(S), ascending in multiplicity."""
    if S.is_natural() or not S.is_arf():
        raise NotInCovarietyError(f"{S!r} is not an Arf semigroup with positive Frobenius number")
    node = TreeNode(
        semigroup=S,
        generators=S.minimal_generators(),
        apery=S.apery_set(S.frobenius + 1),
        parent=-1,
        depth=0,
    )
    return [child for child, _, _ in _expand(node, S.frobenius)]


def enumerate_ar(
    frobenius: int,
    threads: int = 1,
    max_nodes: int = DEFAULT_MAX_NODES,
    check_duplicates: bool = False,
) -> CovarietyTree:
    """Breadth-first enumeration of every Arf semigroup with the given Frobenius number.

    Nodes are emitted in canonical order: by depth, then lexicographically by
    small-element set.  The order (and hence every export) is identical for
    any thread count; workers only expand immutable frontier nodes and the
    merge is a deterministic sort.

    ``max_nodes`` bounds the tree size (``ScaleLimitError`` beyond it) and
    ``check_duplicates`` enables a redundant uniqueness assertion.
    """
    if frobenius < 1:
        raise InvalidFrobeniusError(f"frobenius must be >= 1, got {frobenius}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    root_sg = NumericalSemigroup.delta(frobenius)
    nodes = [
        TreeNode(
            semigroup=root_sg,
            generators=root_sg.minimal_generators(),
            apery=root_sg.apery_set(frobenius + 1),
            parent=-1,
            depth=0,
        )
    ]
    frontier = [0]
    pool = (
        concurrent.futures.ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    )
    try:
        while frontier:
            batch = [nodes[i] for i in frontier]
            if pool is None:
                expansions = [_expand(node, frobenius) for node in batch]
            else:
                expansions = list(pool.map(_expand, batch, [frobenius] * len(batch)))
            merged = [
                (child, parent_idx)
                for parent_idx, result in zip(frontier, expansions)
                for child in result
            ]
            merged.sort(key=lambda item: item[0][0].small_elements())
            frontier = []
            for (sg, gens, ap), parent_idx in merged:
                if len(nodes) >= max_nodes:
                    raise ScaleLimitError(f"enumeration exceeded max_nodes={max_nodes}")
                frontier.append(len(nodes))
                nodes.append(TreeNode(sg, gens, ap, parent_idx, nodes[parent_idx].depth + 1))
    finally:
        if pool is not None:
            pool.shutdown(wait=False)
    if check_duplicates and len({node.semigroup for node in nodes}) != len(nodes):
        raise InternalInvariantError("duplicate semigroup produced by tree expansion")
    return CovarietyTree(frobenius, tuple(nodes))
