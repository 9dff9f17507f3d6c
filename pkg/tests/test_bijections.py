import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_stirling import bijections as B
from jacobi_stirling.models import (
    PartitionTriple,
    QuasiPerm,
    SignedPartition,
    canonical_partition,
    enum_partition_triples,
    enum_quasiperm_pairs,
    is_partition_triple,
    iter_signed_partitions,
    set_partitions,
)
from reference_tables import EXAMPLE_Q1, EXAMPLE_Q2, EXAMPLE_SIGNED, EXAMPLE_TRIPLE


@pytest.fixture
def example():
    zero, blocks = EXAMPLE_SIGNED
    return SignedPartition.make(10, zero, blocks)


def test_worked_example_to_triple(example):
    assert example.k == 3 and example.i == 3
    t = B.signed_to_triple(example)
    assert (t.p1, t.p2, t.p3) == EXAMPLE_TRIPLE
    assert is_partition_triple(t, 10, 3, 3)


def test_worked_example_back(example):
    assert B.triple_to_signed(PartitionTriple(*EXAMPLE_TRIPLE)) == example


def test_worked_example_to_quasipair(example):
    q1, q2 = B.signed_to_quasipair(example)
    assert q1.cells == EXAMPLE_Q1 and q2.cells == EXAMPLE_Q2
    assert q1.is_simply_hooked() and q2.is_simply_hooked()
    assert q1.minus == q2.minus and len(q1.minus) == example.i


def test_phi_small():
    assert B.phi(((1, 3, 4), (2,)), 4).cells == {(4, 3), (3, 1)}
    assert B.phi(((1,), (2,)), 2).cells == frozenset()
    assert B.phi_inverse(QuasiPerm(4, frozenset({(4, 3), (3, 1)}))) == ((1, 3, 4), (2,))


def test_phi_inverse_rejects_supdiagonal():
    with pytest.raises(ValueError):
        B.phi_inverse(QuasiPerm(3, frozenset({(1, 2)})))


def test_phi_inverse_rejects_branching():
    with pytest.raises(ValueError):
        B.phi_inverse(QuasiPerm(3, frozenset({(3, 1), (2, 1)})))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=9))
def test_phi_roundtrip_random(labels):
    groups = {}
    for x, lab in enumerate(labels, start=1):
        groups.setdefault(lab, []).append(x)
    p = canonical_partition(groups.values())
    q = B.phi(p, len(labels))
    assert not q.plus and len(q.cells) == len(labels) - len(p)
    assert q.is_simply_hooked()
    assert B.phi_inverse(q) == p


@pytest.mark.parametrize("n", range(1, 6))
def test_signed_triple_roundtrip_exhaustive(n):
    for k in range(1, n + 1):
        images = {}
        for p in iter_signed_partitions(n, k):
            t = B.signed_to_triple(p)
            assert is_partition_triple(t, n, k, p.i)
            assert B.triple_to_signed(t) == p
            images.setdefault(p.i, set()).add(t)
        for i in range(n - k + 1):
            assert images.get(i, set()) == set(enum_partition_triples(n, k, i))


@pytest.mark.parametrize("n", range(1, 6))
def test_quasipair_image_exhaustive(n):
    for k in range(1, n + 1):
        for i in range(n - k + 1):
            image = [B.signed_to_quasipair(p) for p in iter_signed_partitions(n, k) if p.i == i]
            assert len(image) == len(set(image))
            assert set(image) == set(enum_quasiperm_pairs(n, k, i))


def test_phi_covers_subdiagonal_family():
    from jacobi_stirling.models import simply_hooked_quasiperms
    for n in range(1, 6):
        sub = {q for q in simply_hooked_quasiperms(n) if not q.plus}
        assert sub == {B.phi(p, n) for p in set_partitions(n)}


def test_sweep_reports():
    for report in (B.check_signed_triple(5), B.check_phi(6), B.check_quasipair_image(5)):
        assert report.ok
        assert report.left_size == report.right_size > 0
        assert report.line().endswith(f"sizes={report.left_size}/{report.right_size}")


def test_quasipair_sweep_bound():
    with pytest.raises(ValueError):
        B.check_quasipair_image(8)
