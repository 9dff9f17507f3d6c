"""Generating-function identities checked by truncated exact expansion."""

from __future__ import annotations

from math import factorial

from .exactmath import (
    BiSeries,
    IntPoly,
    arcsin_coeffs,
    exp_coeffs,
    rising,
    series_compose,
    sinh_coeffs,
)
from .reports import GFReport
from .triangles import build_central_odd, build_js_second

__all__ = [
    "sinh_t_sinh",
    "sinh_t_arcsin",
    "exp_t_arcsin",
    "check_V_egf",
    "check_v_egf",
    "check_eqstanley",
    "odd_product",
    "ogf_column",
    "check_ordinary_gf",
    "check_newton_base",
    "EGF_NMAX",
]

EGF_NMAX = 8


def _inner(x_coeffs, order_t: int, order_x: int) -> BiSeries:
    return BiSeries.from_x_series(x_coeffs, 1, order_t, order_x)


def sinh_t_sinh(order_t: int, order_x: int) -> BiSeries:
    """Expansion of ``sinh(t * sinh(x))``."""
    return series_compose(sinh_coeffs(order_x),
                          _inner(sinh_coeffs(order_x), order_t, order_x))


def sinh_t_arcsin(order_t: int, order_x: int) -> BiSeries:
    """Expansion of ``sinh(t * arcsin(x))``."""
    return series_compose(sinh_coeffs(order_x),
                          _inner(arcsin_coeffs(order_x), order_t, order_x))


def exp_t_arcsin(order_t: int, order_x: int) -> BiSeries:
    """Expansion of ``exp(t * arcsin(x))``: all block counts, odd and even."""
    return series_compose(exp_coeffs(order_x),
                          _inner(arcsin_coeffs(order_x), order_t, order_x))


def _check_egf(name: str, series: BiSeries, triangle, nmax: int, kmax: int) -> GFReport:
    report = GFReport(name, {"nmax": nmax, "kmax": kmax})
    for j in range(series.order_t + 1):
        for m in range(series.order_x + 1):
            c = series.coeff(j, m)
            report.checked += 1
            if j % 2 == 0 or m % 2 == 0:
                if c != 0:
                    report.fail(("parity", j, m, str(c)))
                continue
            n, k = (m - 1) // 2, (j - 1) // 2
            expected = abs(triangle[n, k]) if k <= n else 0
            if c * factorial(m) != expected:
                report.fail((n, k, str(c * factorial(m)), expected))
    return report


def check_V_egf(nmax: int, kmax: int | None = None) -> GFReport:
    """``V(n,k)`` is ``(2n+1)!`` times the coefficient of ``t^(2k+1) x^(2n+1)`` in ``sinh(t sinh x)``."""
    if nmax > EGF_NMAX:
        raise ValueError(f"EGF checks limited to nmax <= {EGF_NMAX}")
    kmax = nmax if kmax is None else kmax
    series = sinh_t_sinh(2 * kmax + 1, 2 * nmax + 1)
    return _check_egf("V_egf", series, build_central_odd("V", nmax), nmax, kmax)


def check_v_egf(nmax: int, kmax: int | None = None) -> GFReport:
    """Same extraction from ``sinh(t arcsin x)`` against ``|v(n,k)|``.

    Also expands ``exp(t arcsin x)``: its odd ``t``-powers must agree with the
    ``sinh`` series and its even ``t``-powers must vanish at odd ``x``-powers.
    """
    if nmax > EGF_NMAX:
        raise ValueError(f"EGF checks limited to nmax <= {EGF_NMAX}")
    kmax = nmax if kmax is None else kmax
    order_t, order_x = 2 * kmax + 1, 2 * nmax + 1
    series = sinh_t_arcsin(order_t, order_x)
    report = _check_egf("v_egf", series, build_central_odd("v", nmax), nmax, kmax)
    full = exp_t_arcsin(order_t, order_x)
    for m in range(1, order_x + 1, 2):
        for j in range(order_t + 1):
            report.checked += 1
            c = full.coeff(j, m)
            if j % 2 == 0 and c != 0:
                report.fail(("J even", j, m, str(c)))
            if j % 2 == 1 and c != series.coeff(j, m):
                report.fail(("J odd", j, m, str(c)))
    return report


def odd_product(n: int) -> IntPoly:
    """``t (t^2 + 1^2)(t^2 + 3^2) ... (t^2 + (2n-1)^2)`` as a polynomial in ``t``."""
    out = IntPoly([0, 1])
    for j in range(1, n + 1):
        out = out * IntPoly([(2 * j - 1) ** 2, 0, 1])
    return out


def check_eqstanley(n: int) -> GFReport:
    """``sum_k |v(n,k)| t^(2k+1)`` equals the odd product, for every row up to ``n``."""
    report = GFReport("odd_product", {"n": n})
    v = build_central_odd("v", n)
    for row in range(n + 1):
        report.checked += 1
        expected = IntPoly.monomial(0, 0)
        for k in range(row + 1):
            expected = expected + IntPoly.monomial(2 * k + 1, abs(v[row, k]))
        if odd_product(row) != expected:
            report.fail(row)
    return report


def ogf_column(k: int, nmax: int) -> list[IntPoly]:
    """Coefficients of ``x^0..x^nmax`` in ``x^k / prod_{j<=k} (1 - j(z+j) x)``."""
    series = [IntPoly()] * (nmax + 1)
    if k <= nmax:
        series[k] = IntPoly([1])
    for j in range(1, k + 1):
        c = IntPoly([j * j, j])
        # divide by (1 - c x): s[m] += c * s[m-1], ascending
        for m in range(1, nmax + 1):
            series[m] = series[m] + c * series[m - 1]
    return series


def check_ordinary_gf(kmax: int, nmax: int) -> GFReport:
    report = GFReport("ordinary_gf", {"kmax": kmax, "nmax": nmax})
    JS = build_js_second(nmax)
    for k in range(kmax + 1):
        column = ogf_column(k, nmax)
        for n in range(nmax + 1):
            report.checked += 1
            expected = JS[n, k] if k <= n else IntPoly()
            if column[n] != expected:
                report.fail((n, k))
    return report


def check_newton_base(nmax: int, mmax: int) -> GFReport:
    """``(m(m+z))^n = sum_j JS(n,j) (m-j+1)_j (z+m)_j`` in ``Z[z]`` for ``0 <= m <= mmax``."""
    report = GFReport("newton_base", {"nmax": nmax, "mmax": mmax})
    JS = build_js_second(nmax)
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            report.checked += 1
            lhs = IntPoly([m * m, m]) ** n
            rhs = IntPoly()
            for j in range(n + 1):
                rhs = rhs + JS[n, j] * rising(m - j + 1, j) * rising(IntPoly([m, 1]), j)
            if lhs != rhs:
                report.fail((n, m))
    return report
