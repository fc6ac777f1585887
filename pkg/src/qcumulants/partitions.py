"""Set partitions of {1..n}, their refinements, and block orderings.

Four partition families drive the moment-cumulant formulas, one per
independence: all partitions (commutative), non-crossing partitions (free),
interval partitions (Boolean), and monotone partitions (monotone).  A
monotone partition is a non-crossing partition together with a linear order
on its blocks in which every block nested inside another is ranked strictly
higher than the block containing it.  "Nested inside" is span containment:
V sits inside W when min(W) < min(V) and max(V) < max(W); for non-crossing
partitions this is exactly the pictorial inner side.

Partitions are kept in canonical form (blocks sorted ascending, blocks
ordered by least element) so enumeration output is deterministic and
directly comparable across runs.

Enumeration bounds: partition enumeration is capped at n = 12 by default
(Bell(12) ~ 4.2e6 is the practical desk-scale ceiling), monotone
enumeration at n = 10, whole-ordered-partition enumeration at n = 9.  The
environment variable QCUMULANTS_ENUM_BOUND overrides all three caps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import InvalidKindError, PreconditionError, SizeBoundError, TruncationError

PARTITION_ENUM_BOUND = 12
MONOTONE_ENUM_BOUND = 10
ORDERED_ENUM_BOUND = 9
ENUM_BOUND_ENV = "QCUMULANTS_ENUM_BOUND"


def _bound(default: int) -> int:
    value = os.environ.get(ENUM_BOUND_ENV)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise PreconditionError(f"{ENUM_BOUND_ENV} must be an integer, got {value!r}") from None


def _check_size(n: int, default_bound: int, what: str) -> None:
    bound = _bound(default_bound)
    if n < 1 or n > bound:
        raise SizeBoundError(f"{what} supports 1 <= n <= {bound}, got n = {n}")


class IndependenceKind(Enum):
    """The four fundamental independences."""

    COMMUTATIVE = "commutative"
    FREE = "free"
    BOOLEAN = "boolean"
    MONOTONE = "monotone"

    @classmethod
    def from_name(cls, name: str) -> "IndependenceKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise InvalidKindError(f"unknown independence kind {name!r}; expected one of {valid}") from None


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n} into disjoint nonempty blocks, canonical form."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        seen = sorted(x for b in blocks for x in b)
        if any(not b for b in blocks) or seen != list(range(1, self.n + 1)):
            raise PreconditionError(f"blocks {blocks} do not partition {{1..{self.n}}}")

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)


@dataclass(frozen=True)
class OrderedSetPartition:
    """Set partition plus a linear order on blocks, lowest rank = 1.

    ranks[i] is the rank of partition.blocks[i]; ranks is a permutation of
    1..k.  The textbook notation V_1 < V_2 < ... < V_k corresponds to
    rank(V_i) = i.
    """

    partition: SetPartition
    ranks: tuple

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        k = self.partition.block_count
        if sorted(ranks) != list(range(1, k + 1)):
            raise PreconditionError(f"ranks {ranks} are not a permutation of 1..{k}")

    @classmethod
    def from_rank_order(cls, n: int, blocks_low_to_high) -> "OrderedSetPartition":
        """Build from blocks listed lowest rank first."""
        seq = tuple(tuple(b) for b in blocks_low_to_high)
        partition = SetPartition(n, seq)
        rank_of = {block: i + 1 for i, block in enumerate(tuple(sorted(b)) for b in seq)}
        return cls(partition, tuple(rank_of[b] for b in partition.blocks))

    def blocks_by_rank(self) -> tuple:
        order = sorted(range(len(self.ranks)), key=lambda i: self.ranks[i])
        return tuple(self.partition.blocks[i] for i in order)


def partition_text(p) -> str:
    """Canonical text form: "1,4|2,3" plus "#2,1" rank suffix when ordered."""
    if isinstance(p, OrderedSetPartition):
        body = "|".join(",".join(str(x) for x in b) for b in p.partition.blocks)
        return body + "#" + ",".join(str(r) for r in p.ranks)
    return "|".join(",".join(str(x) for x in b) for b in p.blocks)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def is_noncrossing(p: SetPartition) -> bool:
    """True when no two blocks cross (no a<b<c<d with a,c and b,d split).

    Single left-to-right scan with a stack of open blocks: whenever a block
    is revisited it must be the innermost open one.
    """
    owner = {}
    first = {}
    last = {}
    for idx, block in enumerate(p.blocks):
        first[idx] = block[0]
        last[idx] = block[-1]
        for x in block:
            owner[x] = idx
    stack = []
    for x in range(1, p.n + 1):
        b = owner[x]
        if x == first[b]:
            stack.append(b)
        elif stack[-1] != b:
            return False
        if x == last[b]:
            stack.pop()
    return True


def is_interval(p: SetPartition) -> bool:
    """True when every block is a run of consecutive integers."""
    return all(b[-1] - b[0] + 1 == len(b) for b in p.blocks)


def _nested_inside(inner, outer) -> bool:
    return outer[0] < inner[0] and inner[-1] < outer[-1]


def is_monotone_order(q: OrderedSetPartition) -> bool:
    """True when the partition is non-crossing and every nested block is
    ranked strictly above the block it sits inside."""
    if not is_noncrossing(q.partition):
        return False
    blocks = q.partition.blocks
    ranks = q.ranks
    for i, v in enumerate(blocks):
        for j, w in enumerate(blocks):
            if i != j and _nested_inside(v, w) and ranks[i] <= ranks[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_partitions(n: int):
    """Yield every partition of {1..n} exactly once, in restricted-growth
    order (deterministic; blocks come out canonical automatically)."""
    _check_size(n, PARTITION_ENUM_BOUND, "partition enumeration")
    labels = [0] * n

    def rec(i, kmax):
        if i == n:
            blocks = [[] for _ in range(kmax + 1)]
            for idx in range(n):
                blocks[labels[idx]].append(idx + 1)
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for v in range(kmax + 2):
            labels[i] = v
            yield from rec(i + 1, max(kmax, v))

    yield from rec(1, 0)


def enumerate_ordered(p: SetPartition):
    """Yield all |p|! block orderings of a partition, lexicographically."""
    k = p.block_count
    for perm in permutations(range(1, k + 1)):
        yield OrderedSetPartition(p, perm)


def enumerate_ordered_partitions(n: int):
    """Yield every linearly ordered partition of {1..n} (all orderings of
    all partitions).  Grows like the Fubini numbers, hence the tight bound."""
    _check_size(n, ORDERED_ENUM_BOUND, "ordered-partition enumeration")
    for p in enumerate_partitions(n):
        yield from enumerate_ordered(p)


def _compositions(n: int, k: int):
    """Compositions of n into k positive parts, lexicographic."""
    if k == 1:
        yield (n,)
        return
    for head in range(1, n - k + 2):
        for tail in _compositions(n - head, k - 1):
            yield (head,) + tail


def _place_blocks(remaining: tuple, sizes: tuple, j: int):
    """Recursive top-down placement step for monotone partitions.

    Chooses the rank-j block as `sizes[j-1]` consecutive entries of the
    remaining (already thinned) line, removes it, and recurses downward.
    Yields block tuples lowest rank first.
    """
    if j == 0:
        yield ()
        return
    size = sizes[j - 1]
    for start in range(len(remaining) - size + 1):
        block = remaining[start : start + size]
        rest = remaining[:start] + remaining[start + size :]
        for lower in _place_blocks(rest, sizes, j - 1):
            yield lower + (block,)


def _iter_monotone_block_seqs(n: int):
    """Yield the blocks of each monotone partition of {1..n}, lowest rank
    first, without wrapping them in dataclass objects.

    Blocks are produced highest rank first internally: the top block is
    always an interval of the current line, and each lower block is an
    interval of what remains once the higher blocks are deleted.  Every
    monotone partition arises exactly once this way.
    """
    ground = tuple(range(1, n + 1))
    for k in range(1, n + 1):
        for sizes in _compositions(n, k):
            yield from _place_blocks(ground, sizes, k)


def _count_placements(m: int, sizes: tuple, j: int) -> int:
    """Leaves of the placement tree for the given rank-ordered block sizes:
    one leaf per monotone partition.  Same walk as `_place_blocks`, keeping
    only the count of remaining positions instead of the positions."""
    if j == 0:
        return 1
    size = sizes[j - 1]
    total = 0
    for _start in range(m - size + 1):
        total += _count_placements(m - size, sizes, j - 1)
    return total


def monotone_size_profile_counts(n: int) -> dict:
    """Number of monotone partitions of {1..n} per sorted block-size profile.

    Drives the monotone partition-sum weights; agreement with the
    object-level `enumerate_monotone` output is asserted in the test suite.
    """
    _check_size(n, MONOTONE_ENUM_BOUND, "monotone-partition counting")
    counts: dict = {}
    for k in range(1, n + 1):
        for sizes in _compositions(n, k):
            key = tuple(sorted(sizes))
            counts[key] = counts.get(key, 0) + _count_placements(n, sizes, k)
    return counts


def enumerate_monotone(n: int):
    """Yield every monotone partition of {1..n} exactly once."""
    _check_size(n, MONOTONE_ENUM_BOUND, "monotone-partition enumeration")
    for blocks in _iter_monotone_block_seqs(n):
        yield OrderedSetPartition.from_rank_order(n, blocks)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def partition_weight(p: SetPartition, r) -> Fraction:
    """Product of r_{|V|} over the blocks V of p.

    `r` may be a CumulantSequence or any sequence holding (r_1, ..., r_m).
    """
    values = getattr(r, "cumulants", r)
    weight = Fraction(1)
    for block in p.blocks:
        size = len(block)
        if size > len(values):
            raise TruncationError(
                f"block of size {size} needs cumulants up to r_{size}, only {len(values)} given"
            )
        weight *= values[size - 1]
    return weight


def ordering_count(p: SetPartition) -> int:
    """Number of linear orderings of the blocks of p."""
    return factorial(p.block_count)
