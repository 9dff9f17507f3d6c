"""Model-versus-triangle count checks and the registry behind ``verify``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import bijections, series, triangles
from .models import (
    BOUNDS,
    count_d_model,
    enum_first_kind_pairs,
    enum_odd_partitions,
    enum_partition_triples,
    enum_quasiperm_pairs,
    enum_riordan_complexes,
    enum_u_pairs,
    first_kind_fibers,
    signed_partition_histogram,
)
from .reports import Report
from .triangles import (
    build_central_even,
    build_central_odd,
    build_js_first,
    build_js_second,
    build_stirling,
    coeffs,
    legendre_stirling,
)

SCOPES = ("all", "triangles", "models", "bijections", "series")

# The ten published (2,1)-Riordan complexes, as block partitions.
RIORDAN_21_PARTITIONS = frozenset({
    ((1,), (2, 3, 4), (5,)), ((1,), (2,), (3, 4, 5)),
    ((1, 2, 3), (4,), (5,)), ((1, 2, 5), (3,), (4,)),
    ((1, 3, 4), (2,), (5,)), ((1, 3, 5), (2,), (4,)),
    ((1, 2, 4), (3,), (5,)), ((1, 4, 5), (2,), (3,)),
    ((1,), (2, 3, 5), (4,)), ((1,), (2, 4, 5), (3,)),
})


def check_signed_counts(nmax: int) -> Report:
    """Signed partitions by zero-block negatives give the ``a`` coefficients.

    Also checks that row sums give ``LS(n,k)`` and the top statistic gives ``S(n,k)``.
    """
    report = Report("signed_partition_counts", {"nmax": nmax})
    JS, S = build_js_second(nmax), build_stirling("second", nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.checked += 1
            hist = signed_partition_histogram(n, k)
            a = coeffs(JS, "a", n, k).values
            counts = tuple(hist[i] for i in range(n - k + 1))
            if counts != a:
                report.fail((n, k, counts, a))
            if sum(counts) != legendre_stirling(JS, n, k) or counts[-1] != S[n, k]:
                report.fail((n, k, "LS/S"))
    return report


def check_d_model(nmax: int) -> Report:
    report = Report("d_model_counts", {"nmax": nmax})
    JS = build_js_second(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.checked += 1
            hist = count_d_model(n, k)
            d = coeffs(JS, "d", n, k).values
            if tuple(hist[i] for i in range(n - k + 1)) != d:
                report.fail((n, k))
    return report


def check_quasipair_counts(nmax: int) -> Report:
    """Quasi-permutation pairs give ``a``; at ``i = 0`` both members are supdiagonal."""
    report = Report("quasipair_counts", {"nmax": nmax})
    JS = build_js_second(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            a = coeffs(JS, "a", n, k).values
            for i in range(n - k + 1):
                report.checked += 1
                pairs = enum_quasiperm_pairs(n, k, i)
                if len(pairs) != a[i]:
                    report.fail((n, k, i, len(pairs), a[i]))
                if i == 0 and any(q1.minus or q2.minus for q1, q2 in pairs):
                    report.fail((n, k, "pair at i=0 not supdiagonal"))
    return report


def check_triple_counts(nmax: int) -> Report:
    report = Report("partition_triple_counts", {"nmax": nmax})
    JS = build_js_second(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            a = coeffs(JS, "a", n, k).values
            for i in range(n - k + 1):
                report.checked += 1
                size = len(enum_partition_triples(n, k, i))
                if size != a[i]:
                    report.fail((n, k, i, size, a[i]))
    return report


def check_first_kind(nmax: int) -> Report:
    """Permutation pairs give ``b``; sums give ``|ls|``; top fibers are singletons; ``|u|`` pairs."""
    report = Report("first_kind_counts", {"nmax": nmax})
    js = build_js_first(nmax)
    u = build_central_even("u", nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.checked += 1
            b = coeffs(js, "b", n, k).values
            counts = tuple(len(enum_first_kind_pairs(n, k, i)) for i in range(n - k + 1))
            if counts != b:
                report.fail((n, k, counts, b))
            if sum(counts) != abs(legendre_stirling(js, n, k)):
                report.fail((n, k, "|ls|"))
            if set(first_kind_fibers(n, k).values()) != {1}:
                report.fail((n, k, "fiber"))
            if enum_u_pairs(n, k) != abs(u[n, k]):
                report.fail((n, k, "|u|"))
    return report


def check_odd_partitions(nmax: int) -> Report:
    report = Report("odd_partition_counts", {"nmax": nmax})
    V = build_central_odd("V", nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            report.checked += 1
            if enum_odd_partitions(n, k) != V[n, k]:
                report.fail((n, k))
    return report


def check_riordan(nmax: int) -> Report:
    report = Report("riordan_complex_counts", {"nmax": nmax})
    v = build_central_odd("v", nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            report.checked += 1
            complexes = enum_riordan_complexes(n, k)
            if len(complexes) != abs(v[n, k]):
                report.fail((n, k, len(complexes), abs(v[n, k])))
            if any(not c.is_valid(n, k) for c in complexes):
                report.fail((n, k, "invalid complex"))
            if (n, k) == (2, 1) and {c.partition for c in complexes} != RIORDAN_21_PARTITIONS:
                report.fail((2, 1, "differs from the published list"))
    return report


def check_explicit_formula(nmax: int) -> Report:
    """Closed form, recurrence and ordinary generating function agree on ``JS``."""
    report = Report("js_three_constructions", {"nmax": nmax})
    JS = build_js_second(nmax)
    columns = [series.ogf_column(k, nmax) for k in range(nmax + 1)]
    for n in range(nmax + 1):
        for j in range(n + 1):
            report.checked += 1
            if triangles.explicit_js(n, j) != JS[n, j]:
                report.fail((n, j, "explicit"))
            if columns[j][n] != JS[n, j]:
                report.fail((n, j, "ogf"))
    return report


@dataclass
class Task:
    scope: str
    func: Callable[..., Report]
    kwargs: dict[str, Any] = field(default_factory=dict)


def build_suite(scope: str, nmax: int) -> list[Task]:
    """Checks selected by ``scope``, with sizes clamped to each family's bound."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    tasks = [
        Task("triangles", triangles.verify_defining_relations, {"nmax": nmax}),
        Task("triangles", triangles.verify_coefficient_bounds, {"nmax": nmax}),
        Task("triangles", triangles.verify_d_identities, {"nmax": nmax}),
        Task("triangles", check_explicit_formula, {"nmax": nmax}),
        Task("models", check_signed_counts, {"nmax": min(nmax, BOUNDS["signed"])}),
        Task("models", check_d_model, {"nmax": min(nmax, BOUNDS["signed"])}),
        Task("models", check_quasipair_counts, {"nmax": min(nmax, BOUNDS["quasipair"])}),
        Task("models", check_triple_counts, {"nmax": min(nmax, BOUNDS["triple"])}),
        Task("models", check_first_kind, {"nmax": min(nmax, BOUNDS["firstkind"])}),
        Task("models", check_odd_partitions, {"nmax": min(nmax, BOUNDS["oddpart"])}),
        Task("models", check_riordan, {"nmax": min(nmax, BOUNDS["riordan"])}),
        Task("bijections", bijections.check_signed_triple, {"nmax": min(nmax, BOUNDS["triple"])}),
        Task("bijections", bijections.check_phi, {"nmax": min(nmax, BOUNDS["triple"])}),
        Task("bijections", bijections.check_quasipair_image, {"nmax": min(nmax, BOUNDS["quasipair"])}),
        Task("series", series.check_V_egf, {"nmax": min(nmax, series.EGF_NMAX)}),
        Task("series", series.check_v_egf, {"nmax": min(nmax, series.EGF_NMAX)}),
        Task("series", series.check_eqstanley, {"n": min(nmax, 10)}),
        Task("series", series.check_ordinary_gf, {"kmax": min(nmax, 8), "nmax": min(nmax, 16)}),
        Task("series", series.check_newton_base, {"nmax": min(nmax, 10), "mmax": nmax}),
    ]
    return [t for t in tasks if scope == "all" or t.scope == scope]


def _run(task: Task) -> Report:
    return task.func(**task.kwargs)


def run_suite(scope: str, nmax: int, jobs: int = 1) -> list[Report]:
    """Run the selected checks; reports come back in suite order whatever ``jobs`` is."""
    tasks = build_suite(scope, nmax)
    if jobs <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, tasks))
