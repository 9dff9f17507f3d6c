"""Exhaustive enumerators for the combinatorial models of the triangle coefficients.

Every family comes with a validity predicate and a generator producing its
members in a deterministic canonical order. Counts obtained here are compared
against the algebraic triangles by the test-suite and by ``verify_models``.

Enumeration sizes grow quickly, so each family has a default size bound in
:data:`BOUNDS`; callers may pass ``bound=`` to override it.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "BOUNDS",
    "BoundError",
    "ModelError",
    "SignedPartition",
    "QuasiPerm",
    "PartitionTriple",
    "FirstKindPair",
    "RiordanComplex",
    "set_partitions",
    "minima",
    "singletons",
    "is_signed_partition",
    "iter_signed_partitions",
    "enum_signed_partitions",
    "signed_partition_histogram",
    "count_d_model",
    "is_simply_hooked",
    "simply_hooked_quasiperms",
    "enum_quasiperm_pairs",
    "enum_partition_triples",
    "is_partition_triple",
    "records",
    "cycles",
    "cyclic_minima",
    "cyclic_maxima",
    "enum_first_kind_pairs",
    "first_kind_fibers",
    "enum_u_pairs",
    "iter_odd_partitions",
    "enum_odd_partitions",
    "list_odd_partitions",
    "perfect_matchings",
    "enum_riordan_complexes",
]

BOUNDS = {
    "signed": 9,
    "quasipair": 7,
    "triple": 7,
    "firstkind": 6,
    "upairs": 6,
    "oddpart": 6,
    "riordan": 4,
}


class BoundError(ValueError):
    """Requested enumeration is larger than the configured bound."""


class ModelError(AssertionError):
    """An enumerated object violates a property that must hold by construction."""


def _check_bound(family: str, n: int, bound: int | None) -> None:
    limit = BOUNDS[family] if bound is None else bound
    if n > limit:
        raise BoundError(f"{family} enumeration limited to n <= {limit}, got n={n}")


def _check_nk(n: int, k: int, low: int = 1) -> None:
    if not (low <= k <= n):
        raise ValueError(f"need {low} <= k <= n, got n={n}, k={k}")


# -- set partitions -----------------------------------------------------------

Partition = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def set_partitions(n: int, k: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``{1..n}`` (into ``k`` blocks if given).

    Blocks are sorted tuples, ordered by their minima. Generated from
    restricted growth strings, so the order is deterministic.
    """
    out = []

    def rec(j: int, blocks: list[list[int]]):
        if j > n:
            if k is None or len(blocks) == k:
                out.append(tuple(tuple(b) for b in blocks))
            return
        if k is not None and len(blocks) + (n - j + 1) < k:
            return
        for b in blocks:
            b.append(j)
            rec(j + 1, blocks)
            b.pop()
        if k is None or len(blocks) < k:
            blocks.append([j])
            rec(j + 1, blocks)
            blocks.pop()

    rec(1, [])
    return tuple(out)


def minima(p: Partition) -> frozenset[int]:
    return frozenset(b[0] for b in p)


def singletons(p: Partition) -> frozenset[int]:
    return frozenset(b[0] for b in p if len(b) == 1)


def canonical_partition(blocks) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks if b))


# -- signed partitions ----------------------------------------------------------

@dataclass(frozen=True)
class SignedPartition:
    """A signed ``k``-partition of ``{0, +-1, ..., +-n}``.

    ``zero_block`` lists the nonzero members of the block containing 0.
    ``blocks`` are sorted tuples ordered by their smallest positive member.
    """

    n: int
    zero_block: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, n: int, zero_block, blocks) -> "SignedPartition":
        zb = tuple(sorted(x for x in zero_block if x != 0))
        bl = tuple(sorted((tuple(sorted(b)) for b in blocks),
                          key=lambda b: min(abs(x) for x in b)))
        return cls(n, zb, bl)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def i(self) -> int:
        """Number of negative entries in the zero block."""
        return sum(1 for x in self.zero_block if x < 0)

    def block_minima(self) -> frozenset[int]:
        return frozenset(min(abs(x) for x in b) for b in self.blocks)

    def serialize(self) -> list[list[int]]:
        return [list(self.zero_block)] + [list(b) for b in self.blocks]

    def __str__(self) -> str:
        def fmt(b):
            return "{" + ",".join(str(x) for x in b) + "}"
        return fmt(self.zero_block) + "_0 " + " ".join(fmt(b) for b in self.blocks)


def is_signed_partition(n: int, zero_block, blocks) -> bool:
    """Membership test straight from the definition.

    A nonzero block must contain both ``m`` and ``-m`` for ``m`` its smallest
    absolute value, and no other opposite pair.
    """
    universe = [x for j in range(1, n + 1) for x in (j, -j)]
    seen = list(zero_block) + [x for b in blocks for x in b]
    if sorted(seen) != sorted(universe):
        return False
    zb = set(zero_block)
    if any(-x in zb for x in zb):
        return False
    for b in blocks:
        if not b:
            return False
        bs = set(b)
        m = min(abs(x) for x in bs)
        pairs = {abs(x) for x in bs if -x in bs}
        if pairs != {m}:
            return False
    return True


def _walk_signed(n: int, k: int, visit) -> None:
    """Depth-first placement of ``j`` and ``-j`` for ``j = 1..n``.

    Each pair either opens a new block ``{j, -j}`` or is split between two
    different existing blocks (the zero block counts as block 0). ``visit``
    receives ``(zero, blocks, neg)`` at every leaf with exactly ``k`` blocks.
    """
    zero: list[int] = []
    blocks: list[list[int]] = []

    def rec(j: int, neg: int):
        if j > n:
            if len(blocks) == k:
                visit(zero, blocks, neg)
            return
        b = len(blocks)
        if b < k:
            blocks.append([j, -j])
            rec(j + 1, neg)
            blocks.pop()
        # too few pairs left to open the missing blocks, or nowhere to split into
        if b + (n - j) < k or b == 0:
            return
        for t in range(b + 1):
            tgt = zero if t == 0 else blocks[t - 1]
            tgt.append(j)
            for u in range(b + 1):
                if u == t:
                    continue
                ngt = zero if u == 0 else blocks[u - 1]
                ngt.append(-j)
                rec(j + 1, neg + (u == 0))
                ngt.pop()
            tgt.pop()

    rec(1, 0)


def iter_signed_partitions(n: int, k: int, bound: int | None = None) -> Iterator[SignedPartition]:
    """Yield every signed ``k``-partition of ``[+-n]_0`` in generation order."""
    _check_bound("signed", n, bound)
    _check_nk(n, k)
    return _iter_signed(n, k)


def _iter_signed(n: int, k: int) -> Iterator[SignedPartition]:
    zero: list[int] = []
    blocks: list[list[int]] = []

    # same placement scheme as _walk_signed, as a lazy generator
    def rec(j: int):
        if j > n:
            if len(blocks) == k:
                yield SignedPartition.make(n, zero, blocks)
            return
        b = len(blocks)
        if b < k:
            blocks.append([j, -j])
            yield from rec(j + 1)
            blocks.pop()
        if b + (n - j) < k or b == 0:
            return
        for t in range(b + 1):
            tgt = zero if t == 0 else blocks[t - 1]
            tgt.append(j)
            for u in range(b + 1):
                if u != t:
                    ngt = zero if u == 0 else blocks[u - 1]
                    ngt.append(-j)
                    yield from rec(j + 1)
                    ngt.pop()
            tgt.pop()

    yield from rec(1)


def enum_signed_partitions(n: int, k: int, bound: int | None = None) -> list[SignedPartition]:
    """All signed ``k``-partitions, sorted by their serialized form."""
    return sorted(iter_signed_partitions(n, k, bound), key=lambda p: p.serialize())


def signed_partition_histogram(n: int, k: int, positive_free: bool = False,
                               bound: int | None = None) -> dict[int, int]:
    """Count signed ``k``-partitions by the number of negatives in the zero block.

    With ``positive_free`` only partitions whose zero block has no positive
    entry are counted. Streams through the enumeration without storing it.
    """
    _check_bound("signed", n, bound)
    _check_nk(n, k)
    hist = [0] * (n - k + 1)

    if positive_free:
        def visit(zero, blocks, neg):
            if len(zero) == neg:
                hist[neg] += 1
    else:
        def visit(zero, blocks, neg):
            hist[neg] += 1

    _walk_signed(n, k, visit)
    return dict(enumerate(hist))


def count_d_model(n: int, k: int, bound: int | None = None) -> dict[int, int]:
    """Histogram of signed partitions whose zero block holds only 0 and negatives."""
    return signed_partition_histogram(n, k, positive_free=True, bound=bound)


# -- quasi-permutations ------------------------------------------------------------

Cell = tuple[int, int]


@dataclass(frozen=True)
class QuasiPerm:
    """A set of cells ``(row, column)`` of the ``n x n`` grid."""

    n: int
    cells: frozenset[Cell]

    @classmethod
    def make(cls, n: int, cells) -> "QuasiPerm":
        return cls(n, frozenset((int(a), int(b)) for a, b in cells))

    @property
    def k(self) -> int:
        return self.n - len(self.cells)

    @property
    def plus(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if c[0] <= c[1])

    @property
    def minus(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if c[0] >= c[1])

    def pr_x(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.cells)

    def pr_y(self) -> frozenset[int]:
        return frozenset(b for _, b in self.cells)

    def transpose(self) -> "QuasiPerm":
        """Exchange the two coordinates of every cell."""
        return QuasiPerm(self.n, frozenset((b, a) for a, b in self.cells))

    def union(self, other: "QuasiPerm") -> "QuasiPerm":
        return QuasiPerm(self.n, self.cells | other.cells)

    def is_simply_hooked(self) -> bool:
        by_projection, by_hooks = is_simply_hooked(self.cells, self.n)
        if by_projection != by_hooks:
            raise ModelError(f"hook and projection tests disagree on {sorted(self.cells)}")
        return by_projection

    def serialize(self) -> list[list[int]]:
        return [list(c) for c in sorted(self.cells)]


def hook(i: int, n: int) -> frozenset[Cell]:
    """Diagonal hook ``H_i``: cells ``(i, j)`` and ``(j, i)`` with ``j <= i``."""
    return frozenset([(i, j) for j in range(1, i + 1)] + [(j, i) for j in range(1, i + 1)])


def is_simply_hooked(cells, n: int) -> tuple[bool, bool]:
    """Test a cell set with both characterisations.

    Returns ``(by_projection, by_hooks)``: the first uses "partial permutation
    with ``pr_x(Q-)`` disjoint from ``pr_y(Q+)``", the second "no diagonal cell
    and at most one cell per row, column and diagonal hook".
    """
    cells = set(cells)
    if any(not (1 <= a <= n and 1 <= b <= n) for a, b in cells):
        raise ValueError(f"cells outside the {n}x{n} grid")
    rows = Counter(a for a, _ in cells)
    cols = Counter(b for _, b in cells)
    partial = all(v == 1 for v in rows.values()) and all(v == 1 for v in cols.values())

    minus_x = {a for a, b in cells if a >= b}
    plus_y = {b for a, b in cells if a <= b}
    by_projection = partial and not (minus_x & plus_y)

    by_hooks = partial and all(a != b for a, b in cells)
    if by_hooks:
        for i in range(1, n + 1):
            if len(cells & hook(i, n)) > 1:
                by_hooks = False
                break
    return by_projection, by_hooks


@lru_cache(maxsize=None)
def simply_hooked_quasiperms(n: int) -> tuple[QuasiPerm, ...]:
    """Every simply hooked quasi-permutation of ``[n]`` (all sizes)."""
    out = []
    used: set[int] = set()
    cells: list[Cell] = []

    def rec(row: int):
        if row > n:
            q = QuasiPerm(n, frozenset(cells))
            if q.is_simply_hooked():
                out.append(q)
            return
        rec(row + 1)
        for col in range(1, n + 1):
            if col != row and col not in used:
                used.add(col)
                cells.append((row, col))
                rec(row + 1)
                cells.pop()
                used.discard(col)

    rec(1)
    return tuple(out)


def enum_quasiperm_pairs(n: int, k: int, i: int,
                         bound: int | None = None) -> list[tuple[QuasiPerm, QuasiPerm]]:
    """Pairs of simply hooked ``k``-quasi-permutations with a shared lower part.

    Both members have the same subdiagonal part of size ``i`` and the same
    set of occupied columns.
    """
    _check_bound("quasipair", n, bound)
    _check_nk(n, k)
    groups: dict[tuple, list[QuasiPerm]] = defaultdict(list)
    for q in simply_hooked_quasiperms(n):
        if len(q.cells) == n - k and len(q.minus) == i:
            groups[(q.minus, q.pr_y())].append(q)
    pairs = [(q1, q2) for members in groups.values() for q1 in members for q2 in members]
    pairs.sort(key=lambda pq: (pq[0].serialize(), pq[1].serialize()))
    return pairs


# -- partition triples ------------------------------------------------------------

@dataclass(frozen=True)
class PartitionTriple:
    p1: Partition
    p2: Partition
    p3: Partition

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.p1)

    def serialize(self) -> list[list[list[int]]]:
        return [[list(b) for b in p] for p in (self.p1, self.p2, self.p3)]


def is_partition_triple(t: PartitionTriple, n: int, k: int, i: int) -> bool:
    """Membership in the class of triples counted by ``a(n,k,i)``.

    ``p1`` and ``p2`` have ``k + i`` blocks with the same minima, ``p3`` has
    ``n - i`` blocks, every non-minimum of ``p1`` is a singleton of ``p3``, and
    every non-minimum of ``p3`` is a singleton of both ``p1`` and ``p2``.
    """
    full = frozenset(range(1, n + 1))
    if len(t.p1) != k + i or len(t.p2) != k + i or len(t.p3) != n - i:
        return False
    m1, m3 = minima(t.p1), minima(t.p3)
    if m1 != minima(t.p2):
        return False
    return ((m1 | singletons(t.p3)) == full
            and (singletons(t.p1) | m3) == full
            and (singletons(t.p2) | m3) == full)


def _cardinalities_hold(t: PartitionTriple, n: int, k: int, i: int) -> bool:
    m1, m3 = minima(t.p1), minima(t.p3)
    return (len(m1 & m3) == k
            and len(singletons(t.p1) - m3) == i
            and len(singletons(t.p3) - m1) == n - k - i)


def enum_partition_triples(n: int, k: int, i: int,
                           bound: int | None = None) -> list[PartitionTriple]:
    """All triples for ``(n, k, i)``; each is checked against the cardinality identities."""
    _check_bound("triple", n, bound)
    _check_nk(n, k)
    if not 0 <= i <= n - k:
        return []
    full = frozenset(range(1, n + 1))
    by_min: dict[frozenset, list[Partition]] = defaultdict(list)
    for p in set_partitions(n, k + i):
        by_min[minima(p)].append(p)
    thirds = [(p, minima(p), singletons(p)) for p in set_partitions(n, n - i)]
    out = []
    for m1, group in by_min.items():
        for p3, m3, s3 in thirds:
            if (m1 | s3) != full:
                continue
            # the non-minima of p3 must be singletons of p1 and of p2
            fits = [p for p in group if (singletons(p) | m3) == full]
            for p1 in fits:
                for p2 in fits:
                    t = PartitionTriple(p1, p2, p3)
                    if not _cardinalities_hold(t, n, k, i):
                        raise ModelError(f"cardinality identities fail for {t}")
                    out.append(t)
    out.sort(key=PartitionTriple.serialize)
    return out


# -- permutations and records ----------------------------------------------------

def records(w: Sequence[int]) -> tuple[int, int]:
    """Number of left-to-right strict minima of ``w``, and that number minus one."""
    if not w:
        raise ValueError("records of an empty word are undefined")
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    rec, low = 0, None
    for x in w:
        if low is None or x < low:
            rec, low = rec + 1, x
    return rec, rec - 1


def cycles(perm: Sequence[int], offset: int = 0) -> list[tuple[int, ...]]:
    """Cycles of a permutation in one-line form over ``offset, offset+1, ...``.

    ``perm[j - offset]`` is the image of ``j``. Each cycle starts at its
    smallest element; cycles are listed by that element.
    """
    seen = set()
    out = []
    for start in range(offset, offset + len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start - offset]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j - offset]
        out.append(tuple(cyc))
    return out


def cyclic_minima(perm: Sequence[int], offset: int = 0) -> frozenset[int]:
    """Elements ``j >= 1`` that are the least positive member of their cycle."""
    out = set()
    for cyc in cycles(perm, offset):
        pos = [x for x in cyc if x >= 1]
        if pos:
            out.add(min(pos))
    return frozenset(out)


def cyclic_maxima(perm: Sequence[int], offset: int = 1) -> frozenset[int]:
    return frozenset(max(c) for c in cycles(perm, offset))


@dataclass(frozen=True)
class FirstKindPair:
    """``sigma`` permutes ``{0..n}`` (``sigma[j]`` is the image of ``j``);
    ``tau`` permutes ``{1..n}`` (``tau[j-1]`` is the image of ``j``)."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.tau)

    def zero_word(self) -> tuple[int, ...]:
        """``sigma(0), sigma^2(0), ...`` up to the letter preceding the return to 0."""
        w = []
        j = self.sigma[0]
        while j != 0:
            w.append(j)
            j = self.sigma[j]
        return tuple(w)

    @property
    def i(self) -> int:
        return records(self.zero_word())[1]

    def serialize(self) -> dict[str, list]:
        return {"sigma": [list(c) for c in cycles(self.sigma, 0)],
                "tau": [list(c) for c in cycles(self.tau, 1)]}


def _in_zero_orbit(sigma: Sequence[int], target: int) -> bool:
    j = sigma[0]
    while j != 0:
        if j == target:
            return True
        j = sigma[j]
    return False


@lru_cache(maxsize=None)
def _perms_by_cycles(n: int, offset: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    out: dict[int, list] = defaultdict(list)
    for p in itertools.permutations(range(offset, offset + n)):
        out[len(cycles(p, offset))].append(p)
    return {c: tuple(v) for c, v in out.items()}


def enum_first_kind_pairs(n: int, k: int, i: int,
                          bound: int | None = None) -> list[FirstKindPair]:
    """Pairs ``(sigma, tau)`` with ``k`` cycles each, ``1`` in the orbit of 0 under
    ``sigma``, equal cyclic minima, and ``i`` non-initial records in the zero word."""
    _check_bound("firstkind", n, bound)
    _check_nk(n, k)
    taus: dict[frozenset, list] = defaultdict(list)
    for tau in _perms_by_cycles(n, 1).get(k, ()):
        taus[cyclic_minima(tau, 1)].append(tau)
    out = []
    for sigma in _perms_by_cycles(n + 1, 0).get(k, ()):
        if not _in_zero_orbit(sigma, 1):
            continue
        pair_i = records(FirstKindPair(sigma, (1,) * n).zero_word())[1]
        if pair_i != i:
            continue
        for tau in taus.get(cyclic_minima(sigma, 0), ()):
            out.append(FirstKindPair(sigma, tau))
    out.sort(key=lambda p: (p.sigma, p.tau))
    return out


def first_kind_fibers(n: int, k: int, bound: int | None = None) -> dict[tuple[int, ...], int]:
    """Number of ``sigma`` paired with each ``tau`` at the top statistic ``i = n - k``."""
    fibers = {tau: 0 for tau in _perms_by_cycles(n, 1).get(k, ())}
    for pair in enum_first_kind_pairs(n, k, n - k, bound):
        fibers[pair.tau] += 1
    return fibers


def enum_u_pairs(n: int, k: int, bound: int | None = None) -> int:
    """Ordered pairs of permutations of ``[n]`` with ``k`` cycles and equal cyclic minima.

    The same count is recomputed with cyclic maxima; a mismatch raises
    :class:`ModelError`.
    """
    _check_bound("upairs", n, bound)
    _check_nk(n, k)
    perms = _perms_by_cycles(n, 1).get(k, ())
    by_min = Counter(cyclic_minima(p, 1) for p in perms)
    by_max = Counter(cyclic_maxima(p, 1) for p in perms)
    count_min = sum(c * c for c in by_min.values())
    count_max = sum(c * c for c in by_max.values())
    if count_min != count_max:
        raise ModelError(f"min/max pair counts differ at ({n},{k}): {count_min} vs {count_max}")
    return count_min


# -- odd-block partitions and Riordan complexes -----------------------------------

def iter_odd_partitions(m: int, blocks: int) -> Iterator[Partition]:
    """Partitions of ``{1..m}`` into ``blocks`` blocks of odd size, canonical order."""

    def rec(remaining: tuple[int, ...], left: int):
        r = len(remaining)
        if left == 0:
            if r == 0:
                yield ()
            return
        if r < left or (r - left) % 2:
            return
        first, rest = remaining[0], remaining[1:]
        for extra in range(0, r - left + 1, 2):
            for mates in itertools.combinations(rest, extra):
                block = (first,) + mates
                chosen = set(mates)
                others = tuple(x for x in rest if x not in chosen)
                for tail in rec(others, left - 1):
                    yield (block,) + tail

    yield from rec(tuple(range(1, m + 1)), blocks)


def enum_odd_partitions(n: int, k: int, bound: int | None = None) -> int:
    """Number of partitions of ``[2n+1]`` into ``2k+1`` odd blocks."""
    _check_bound("oddpart", n, bound)
    _check_nk(n, k, low=0)
    return sum(1 for _ in iter_odd_partitions(2 * n + 1, 2 * k + 1))


def list_odd_partitions(n: int, k: int, bound: int | None = None) -> list[Partition]:
    _check_bound("oddpart", n, bound)
    _check_nk(n, k, low=0)
    return list(iter_odd_partitions(2 * n + 1, 2 * k + 1))


def perfect_matchings(items: Sequence[int]) -> list[tuple[tuple[int, int], ...]]:
    """Fixed-point-free involutions of ``items`` as sorted tuples of pairs."""
    items = tuple(sorted(items))
    if not items:
        return [()]
    if len(items) % 2:
        return []
    first, rest = items[0], items[1:]
    out = []
    for idx, mate in enumerate(rest):
        for tail in perfect_matchings(rest[:idx] + rest[idx + 1:]):
            out.append(((first, mate),) + tail)
    return out


@dataclass(frozen=True)
class RiordanComplex:
    """Odd blocks of ``[2n+1]``, each with two perfect matchings of the block minus its maximum.

    ``parts[r] = (block, sigma, tau)`` with matchings given as pairs.
    """

    parts: tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]], ...]

    @property
    def partition(self) -> Partition:
        return tuple(p[0] for p in self.parts)

    def is_valid(self, n: int, k: int) -> bool:
        elems = sorted(x for p in self.parts for x in p[0])
        if elems != list(range(1, 2 * n + 2)) or len(self.parts) != 2 * k + 1:
            return False
        for block, sigma, tau in self.parts:
            if len(block) % 2 == 0:
                return False
            core = sorted(block)[:-1]
            for inv in (sigma, tau):
                if sorted(x for pair in inv for x in pair) != core:
                    return False
        return True

    def __str__(self) -> str:
        def inv(m):
            return "".join(f"({a},{b})" for a, b in m)
        parts = []
        for block, sigma, tau in self.parts:
            top = max(block)
            if not sigma:
                parts.append(f"{{{top}}}")
            elif sigma == tau:
                parts.append(f"{{{inv(sigma)},{top}}}")
            else:
                parts.append(f"{{{inv(sigma)}|{inv(tau)},{top}}}")
        return ",".join(parts)

    def serialize(self) -> list[dict[str, list]]:
        return [{"block": list(b), "sigma": [list(p) for p in s], "tau": [list(p) for p in t]}
                for b, s, t in self.parts]


def enum_riordan_complexes(n: int, k: int, bound: int | None = None) -> list[RiordanComplex]:
    _check_bound("riordan", n, bound)
    _check_nk(n, k, low=0)
    out = []
    for partition in iter_odd_partitions(2 * n + 1, 2 * k + 1):
        options = []
        for block in partition:
            ms = perfect_matchings(sorted(block)[:-1])
            options.append([(block, s, t) for s in ms for t in ms])
        for choice in itertools.product(*options):
            out.append(RiordanComplex(tuple(choice)))
    return out
