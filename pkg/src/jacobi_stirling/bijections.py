"""Executable correspondences between the second-kind models.

``signed_to_triple`` / ``triple_to_signed`` link signed partitions with
partition triples, ``phi`` turns a set partition into a subdiagonal
quasi-permutation, and ``triple_to_quasipair`` composes them into a pair of
simply hooked quasi-permutations.
"""

from __future__ import annotations

from collections import defaultdict

from .models import (
    BOUNDS,
    PartitionTriple,
    QuasiPerm,
    SignedPartition,
    canonical_partition,
    enum_partition_triples,
    enum_quasiperm_pairs,
    is_partition_triple,
    is_signed_partition,
    iter_signed_partitions,
    minima,
    set_partitions,
)
from .reports import BijectionReport

__all__ = [
    "phi",
    "phi_inverse",
    "signed_to_triple",
    "triple_to_signed",
    "triple_to_quasipair",
    "signed_to_quasipair",
    "check_signed_triple",
    "check_phi",
    "check_quasipair_image",
]


def phi(partition, n: int | None = None) -> QuasiPerm:
    """Chain each block ``p1 < ... < pm`` into cells ``(p_m, p_{m-1}), ..., (p2, p1)``."""
    if n is None:
        n = sum(len(b) for b in partition)
    cells = set()
    for block in partition:
        b = sorted(block)
        cells.update(zip(b[1:], b[:-1]))
    return QuasiPerm(n, frozenset(cells))


def phi_inverse(q: QuasiPerm):
    """Rebuild the partition whose chains are the cells of a subdiagonal ``q``."""
    if q.plus:
        raise ValueError("phi_inverse needs a subdiagonal quasi-permutation")
    down = {a: b for a, b in q.cells}
    if len(down) != len(q.cells) or len(set(down.values())) != len(down):
        raise ValueError("cells do not form disjoint chains")
    tops = [x for x in range(1, q.n + 1) if x not in down.values()]
    blocks = []
    for top in tops:
        chain = [top]
        while chain[-1] in down:
            chain.append(down[chain[-1]])
        blocks.append(chain)
    return canonical_partition(blocks)


def _split_zero(n: int, zero: set[int], blocks: list[set[int]]):
    """Drop negatives and 0, turn zero-block positives into singletons."""
    parts = [sorted(x for x in b if x > 0) for b in blocks]
    parts += [[x] for x in zero if x > 0]
    return canonical_partition(parts)


def signed_to_triple(p: SignedPartition) -> PartitionTriple:
    n = p.n
    zero = set(p.zero_block)
    blocks = [set(b) for b in p.blocks]

    # p1: negate every entry of the zero block, wherever its opposite sits
    flip = {abs(x) for x in zero}
    swapped = [{-x if abs(x) in flip else x for x in b} for b in blocks]
    p1 = _split_zero(n, {-x for x in zero}, swapped)

    # p2: negate everything
    p2 = _split_zero(n, {-x for x in zero}, [{-x for x in b} for b in blocks])

    # p3: non-minima untouched by the zero block move into it
    mins = p.block_minima()
    moved = {q for q in range(1, n + 1)
             if q not in mins and q not in zero and -q not in zero}
    p3 = _split_zero(n, zero | moved, [b - moved for b in blocks])
    return PartitionTriple(p1, p2, p3)


def triple_to_signed(t: PartitionTriple) -> SignedPartition:
    n = t.n
    m1, m3 = minima(t.p1), minima(t.p3)
    seeds = sorted(m1 & m3)
    zero: set[int] = set()
    blocks = {s: {s, -s} for s in seeds}

    block_of3 = {x: b for b in t.p3 for x in b}
    for x in sorted(set(range(1, n + 1)) - m3):
        zero.add(-x)
        blocks[block_of3[x][0]].add(x)

    block_of1 = {x: b for b in t.p1 for x in b}
    block_of2 = {x: b for b in t.p2 for x in b}
    for y in sorted(set(range(1, n + 1)) - minima(t.p2)):
        blocks[block_of2[y][0]].add(-y)
        target = blocks[block_of1[y][0]]
        (zero if -y in target else target).add(y)

    return SignedPartition.make(n, zero, blocks.values())


def triple_to_quasipair(t: PartitionTriple) -> tuple[QuasiPerm, QuasiPerm]:
    """``(phi(p1)^T | phi(p3), phi(p2)^T | phi(p3))``."""
    n = t.n
    lower = phi(t.p3, n)
    return phi(t.p1, n).transpose().union(lower), phi(t.p2, n).transpose().union(lower)


def signed_to_quasipair(p: SignedPartition) -> tuple[QuasiPerm, QuasiPerm]:
    return triple_to_quasipair(signed_to_triple(p))


# -- exhaustive sweeps ---------------------------------------------------------------

def check_signed_triple(nmax: int) -> BijectionReport:
    """Round trips both ways between signed partitions and triples, ``n <= nmax``."""
    report = BijectionReport("signed_triple_bijection", {"nmax": nmax})
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            images = defaultdict(set)
            for p in iter_signed_partitions(n, k):
                report.left_size += 1
                report.checked += 1
                t = signed_to_triple(p)
                if not is_partition_triple(t, n, k, p.i):
                    report.statistic_mismatches.append((n, k, str(p)))
                    continue
                images[p.i].add(t)
                back = triple_to_signed(t)
                if back != p:
                    report.roundtrip_failures.append((n, k, str(p)))
            for i in range(n - k + 1):
                triples = enum_partition_triples(n, k, i)
                report.right_size += len(triples)
                if set(triples) != images[i]:
                    report.fail((n, k, i, "image differs from triple family"))
                for t in triples:
                    back = triple_to_signed(t)
                    if not is_signed_partition(n, back.zero_block, back.blocks) or back.i != i:
                        report.statistic_mismatches.append((n, k, i, "inverse image"))
                    elif signed_to_triple(back) != t:
                        report.roundtrip_failures.append((n, k, i, t.serialize()))
    return report


def check_phi(nmax: int) -> BijectionReport:
    """``phi`` is a bijection from partitions onto subdiagonal quasi-permutations."""
    report = BijectionReport("phi_bijection", {"nmax": nmax})
    for n in range(1, nmax + 1):
        images = set()
        for p in set_partitions(n):
            report.left_size += 1
            report.checked += 1
            q = phi(p, n)
            images.add(q)
            if q.plus or not q.is_simply_hooked() or len(q.cells) != n - len(p):
                report.statistic_mismatches.append((n, p))
            if phi_inverse(q) != p:
                report.roundtrip_failures.append((n, p))
        report.right_size += len(images)
    return report


def check_quasipair_image(nmax: int) -> BijectionReport:
    """The composed map hits every quasi-permutation pair of matching ``(n, k, i)`` once."""
    report = BijectionReport("signed_quasipair_bijection", {"nmax": nmax})
    if nmax > BOUNDS["quasipair"]:
        raise ValueError(f"nmax={nmax} beyond quasi-permutation bound")
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            images = defaultdict(list)
            for p in iter_signed_partitions(n, k):
                report.checked += 1
                q1, q2 = signed_to_quasipair(p)
                if len(q1.minus) != p.i:
                    report.statistic_mismatches.append((n, k, str(p)))
                images[p.i].append((q1, q2))
            for i in range(n - k + 1):
                family = enum_quasiperm_pairs(n, k, i)
                image = images[i]
                report.left_size += len(image)
                report.right_size += len(family)
                if len(set(image)) != len(image):
                    report.fail((n, k, i, "not injective"))
                if set(image) != set(family):
                    report.fail((n, k, i, "image differs from quasi-permutation family"))
    return report
