"""Blends of equivalence relations on a finite ground set.

A blend of two partitions ``P1`` and ``P2`` is a partition each of whose
blocks is a block of ``P1`` or of ``P2``.  All blends arise by picking, for
every class of the join ``P1 v P2``, which side to take there.

The ground set is ``{0, ..., n-1}``; the textual form ``{{1,2},{3,4}}`` is
1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

Block = tuple[int, ...]

#: Largest ground set accepted by :func:`enumerate_blends`.
DEFAULT_ENUMERATION_BOUND = 12


class ResourceLimitError(RuntimeError):
    """An exhaustive enumeration was requested beyond its configured bound."""


class UnionFind:
    """Disjoint sets over ``range(n)`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


@dataclass(frozen=True)
class FinitePartition:
    ground_size: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(set(b))) for b in self.blocks))
        seen = [x for b in blocks for x in b]
        if any(len(b) == 0 for b in blocks):
            raise ValueError("partition blocks must be nonempty")
        if len(seen) != len(set(seen)):
            raise ValueError("partition blocks must be pairwise disjoint")
        if sorted(seen) != list(range(self.ground_size)):
            raise ValueError(f"blocks must cover the ground set {{0..{self.ground_size - 1}}} exactly")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "FinitePartition":
        groups: dict[int, list[int]] = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()))

    @classmethod
    def discrete(cls, n: int) -> "FinitePartition":
        return cls(n, tuple((x,) for x in range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> "FinitePartition":
        return cls(n, (tuple(range(n)),))

    def block_of(self, x: int) -> Block:
        return self._index()[x]

    def _index(self) -> dict[int, Block]:
        try:
            return self.__dict__["_idx"]
        except KeyError:
            idx = {x: b for b in self.blocks for x in b}
            object.__setattr__(self, "_idx", idx)
            return idx

    def related(self, x: int, y: int) -> bool:
        return self.block_of(x) is self.block_of(y)

    def labels(self) -> tuple[int, ...]:
        out = [0] * self.ground_size
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return tuple(out)

    def refines(self, other: "FinitePartition") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        return all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(str(x + 1) for x in b) + "}" for b in self.blocks) + "}"


def _check_sizes(*parts: FinitePartition) -> None:
    if len({p.ground_size for p in parts}) > 1:
        raise ValueError("partitions live on ground sets of different sizes")


def _check_seed(seed: Iterable[int], n: int) -> frozenset[int]:
    seed = frozenset(seed)
    bad = [x for x in seed if not 0 <= x < n]
    if bad:
        raise ValueError(f"seed indices {sorted(bad)} lie outside the ground set of size {n}")
    return seed


def join_partitions(p1: FinitePartition, p2: FinitePartition) -> FinitePartition:
    """Join in the partition lattice: components of the union of both relations."""
    _check_sizes(p1, p2)
    uf = UnionFind(p1.ground_size)
    for part in (p1, p2):
        for b in part.blocks:
            for x in b[1:]:
                uf.union(b[0], x)
    return FinitePartition(p1.ground_size, tuple(tuple(g) for g in uf.groups()))


def is_blend(p3: FinitePartition, p1: FinitePartition, p2: FinitePartition) -> bool:
    _check_sizes(p1, p2, p3)
    allowed = set(p1.blocks) | set(p2.blocks)
    return all(b in allowed for b in p3.blocks)


@dataclass(frozen=True)
class _Context:
    join: FinitePartition
    agree: frozenset[int]  # elements whose P1- and P2-blocks coincide


@lru_cache(maxsize=4096)
def _context(p1: FinitePartition, p2: FinitePartition) -> _Context:
    _check_sizes(p1, p2)
    agree = frozenset(x for x in range(p1.ground_size) if p1.block_of(x) == p2.block_of(x))
    return _Context(join_partitions(p1, p2), agree)


def agreement_set(p1: FinitePartition, p2: FinitePartition) -> frozenset[int]:
    """Elements whose ``P1``-block equals their ``P2``-block."""
    return _context(p1, p2).agree


def seed_closure(seed: Iterable[int], p1: FinitePartition, p2: FinitePartition) -> frozenset[int]:
    """Union of the join classes met by ``seed``."""
    join = _context(p1, p2).join
    seed = _check_seed(seed, p1.ground_size)
    return frozenset(y for x in seed for y in join.block_of(x))


def blend_from_side(region: frozenset[int], p1: FinitePartition, p2: FinitePartition) -> FinitePartition:
    """``P1``-blocks inside ``region`` together with ``P2``-blocks outside it.

    ``region`` must be a union of join classes.
    """
    blocks = [b for b in p1.blocks if b[0] in region]
    blocks += [b for b in p2.blocks if b[0] not in region]
    return FinitePartition(p1.ground_size, tuple(blocks))


def blend_from_seed(seed: Iterable[int], p1: FinitePartition, p2: FinitePartition) -> FinitePartition:
    return blend_from_side(seed_closure(seed, p1, p2), p1, p2)


def seed_from_blend(p3: FinitePartition, p1: FinitePartition, p2: FinitePartition) -> frozenset[int]:
    """Elements whose ``P1``-block equals their ``P3``-block; regenerates ``P3``."""
    if not is_blend(p3, p1, p2):
        raise ValueError(f"{p3} is not a blend of {p1} and {p2}")
    return frozenset(x for x in range(p1.ground_size) if p1.block_of(x) == p3.block_of(x))


def _seed_key(seed: Iterable[int], p1: FinitePartition, p2: FinitePartition) -> frozenset[Block]:
    ctx = _context(p1, p2)
    seed = _check_seed(seed, p1.ground_size)
    return frozenset(ctx.join.block_of(x) for x in seed - ctx.agree)


def seeds_equivalent(seed1: Iterable[int], seed2: Iterable[int],
                     p1: FinitePartition, p2: FinitePartition) -> bool:
    """Whether two seeds generate the same blend.

    Compares the join classes met by each seed after discarding elements on
    which ``P1`` and ``P2`` agree.
    """
    return _seed_key(seed1, p1, p2) == _seed_key(seed2, p1, p2)


def enumerate_blends(p1: FinitePartition, p2: FinitePartition,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> set[FinitePartition]:
    """All blends of ``P1`` and ``P2``: one side choice per join class."""
    _check_sizes(p1, p2)
    if p1.ground_size > bound:
        raise ResourceLimitError(f"ground set of size {p1.ground_size} exceeds the bound {bound}")
    ctx = _context(p1, p2)
    # classes on which both sides agree contribute a single choice
    free = [c for c in ctx.join.blocks if not set(c) <= ctx.agree]
    out = set()
    for choice in itertools.product((False, True), repeat=len(free)):
        region = frozenset(x for c, pick in zip(free, choice) if pick for x in c)
        out.add(blend_from_side(region, p1, p2))
    return out


@dataclass(frozen=True)
class SubsetVerdict:
    """Outcome of checking the pairwise condition and the blockwise inclusion.

    ``hypothesis_holds``: every ``P3``-related pair is ``P1``- or ``P2``-related.
    ``conclusion_holds``: every ``P3``-block lies in the ``P1``- or the
    ``P2``-block of its elements; only evaluated when the hypothesis holds.
    """

    hypothesis_holds: bool
    conclusion_holds: Optional[bool]
    violations: tuple[int, ...] = ()

    @property
    def status(self) -> str:
        if not self.hypothesis_holds:
            return "hypothesis fails"
        return "conclusion holds" if self.conclusion_holds else "conclusion violated"


def pairwise_union_holds(p1: FinitePartition, p2: FinitePartition, p3: FinitePartition) -> bool:
    _check_sizes(p1, p2, p3)
    return all(
        p1.related(x, y) or p2.related(x, y)
        for b in p3.blocks
        for x, y in itertools.combinations(b, 2)
    )


def verify_subset_property(p1: FinitePartition, p2: FinitePartition, p3: FinitePartition) -> SubsetVerdict:
    if not pairwise_union_holds(p1, p2, p3):
        return SubsetVerdict(False, None)
    bad = tuple(
        x for x in range(p1.ground_size)
        if not (set(p3.block_of(x)) <= set(p1.block_of(x)) or set(p3.block_of(x)) <= set(p2.block_of(x)))
    )
    return SubsetVerdict(True, not bad, bad)


# -- subsets partitioned by classes ------------------------------------------

def _partitions_by_blocks(region: frozenset[int], part: FinitePartition) -> Iterator[tuple[Block, ...]]:
    """Brute force: every set of blocks of ``part`` whose disjoint union is ``region``."""
    inside = [b for b in part.blocks if set(b) <= region]
    for r in range(len(inside) + 1):
        for combo in itertools.combinations(inside, r):
            if frozenset(x for b in combo for x in b) == region:
                yield combo


def admits_partition(region: Iterable[int], part: FinitePartition) -> bool:
    region = frozenset(region)
    return next(_partitions_by_blocks(region, part), None) is not None


def union_of_classes_conditions(region: Iterable[int], part: FinitePartition) -> tuple[bool, bool, bool, bool]:
    """Four characterisations of ``region`` being a union of classes of ``part``.

    (a) ``region`` admits a partition by classes; (b) the classes of its
    elements form its only such partition; (c) ``region`` equals the union of
    the classes of its elements; (d) the complement admits a partition by
    classes.  They are always simultaneously true or false.
    """
    region = frozenset(region)
    complement = frozenset(range(part.ground_size)) - region
    a = admits_partition(region, part)
    own = tuple(sorted({part.block_of(x) for x in region}))
    found = [tuple(sorted(c)) for c in _partitions_by_blocks(region, part)]
    b = found == [own]
    c = region == frozenset(y for x in region for y in part.block_of(x))
    d = admits_partition(complement, part)
    return a, b, c, d


def all_partitions(n: int) -> Iterator[FinitePartition]:
    """Every partition of ``{0..n-1}`` via restricted growth strings."""
    if n == 0:
        yield FinitePartition(0, ())
        return

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for lab in range(top + 2):
            yield from grow(prefix + [lab], max(top, lab))

    for labels in grow([0], 0):
        yield FinitePartition.from_labels(labels)


def random_partition(n: int, rng) -> FinitePartition:
    """Random partition: each element gets a label in ``range(k)`` for random ``k``."""
    k = rng.randint(1, n)
    return FinitePartition.from_labels([rng.randrange(k) for _ in range(n)])
