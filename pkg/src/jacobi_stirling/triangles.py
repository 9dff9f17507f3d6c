"""Number triangles built from their row recurrences, plus identity checks.

Polynomial triangles hold the Jacobi-Stirling numbers ``JS(n, k)`` (second
kind) and ``js(n, k)`` (first kind) as polynomials in ``z``. Integer triangles
hold the Stirling numbers ``S``/``s``, the even-index central factorial numbers
``U``/``u``, the scaled odd-index ones ``V``/``v``, and the Legendre-Stirling
numbers ``LS``/``ls``. First-kind triangles are signed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Union

from .exactmath import IntPoly, binomial, interpolate, rebase_shift, rising
from .reports import Report

__all__ = [
    "PolyTriangle",
    "IntTriangle",
    "CoeffView",
    "TriangleError",
    "build_js_second",
    "build_js_first",
    "build_stirling",
    "build_central_even",
    "build_central_odd",
    "build_legendre_stirling",
    "build_triangle",
    "legendre_stirling",
    "coeffs",
    "explicit_js",
    "explicit_js_value",
    "falling_product",
    "verify_defining_relations",
    "verify_coefficient_bounds",
    "verify_d_identities",
    "TRIANGLE_KINDS",
]


class TriangleError(ArithmeticError):
    """A computed value contradicts a structural guarantee (sign, integrality)."""


@dataclass(frozen=True)
class _Triangle:
    name: str
    nmax: int
    rows: tuple

    def __getitem__(self, nk):
        n, k = nk
        if not 0 <= n <= self.nmax or not 0 <= k <= n:
            raise IndexError(f"{self.name}({n},{k}) outside triangle with nmax={self.nmax}")
        return self.rows[n][k]

    def cells(self):
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value


@dataclass(frozen=True)
class PolyTriangle(_Triangle):
    """Lower-triangular array of :class:`IntPoly`, ``0 <= k <= n <= nmax``."""

    def get(self, n: int, k: int) -> IntPoly:
        if 0 <= k <= n <= self.nmax:
            return self.rows[n][k]
        if n > self.nmax:
            raise IndexError(f"row {n} beyond nmax={self.nmax}")
        return IntPoly()


@dataclass(frozen=True)
class IntTriangle(_Triangle):
    """Lower-triangular array of integers, ``0 <= k <= n <= nmax``."""

    def get(self, n: int, k: int) -> int:
        if 0 <= k <= n <= self.nmax:
            return self.rows[n][k]
        if n > self.nmax:
            raise IndexError(f"row {n} beyond nmax={self.nmax}")
        return 0


@dataclass(frozen=True)
class CoeffView:
    kind: str
    n: int
    k: int
    values: tuple[int, ...]


def _build(nmax: int, zero, one, step: Callable, odd_index: bool = False):
    """Run ``X(n,k) = X(n-1,k-1) + step(n,k) * X(n-1,k)`` row by row.

    With ``odd_index`` the ``k = 0`` column takes part in the recurrence
    (``V``/``v``); otherwise it is zero past the corner.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    rows = [(one,)]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            left = prev[k - 1] if k >= 1 else zero
            up = prev[k] if k <= n - 1 else zero
            if k == 0 and not odd_index:
                row.append(zero)
            else:
                row.append(left + step(n, k) * up)
        rows.append(tuple(row))
    return tuple(rows)


def build_js_second(nmax: int) -> PolyTriangle:
    """``JS(n,k) = JS(n-1,k-1) + k(k+z) JS(n-1,k)``."""
    rows = _build(nmax, IntPoly(), IntPoly([1]), lambda n, k: IntPoly([k * k, k]))
    return PolyTriangle("JS", nmax, rows)


def build_js_first(nmax: int) -> PolyTriangle:
    """``js(n,k) = js(n-1,k-1) - (n-1)(n-1+z) js(n-1,k)``."""
    rows = _build(nmax, IntPoly(), IntPoly([1]),
                  lambda n, k: IntPoly([-(n - 1) ** 2, -(n - 1)]))
    return PolyTriangle("js", nmax, rows)


def build_stirling(kind: str, nmax: int) -> IntTriangle:
    if kind in ("second", "S"):
        return IntTriangle("S", nmax, _build(nmax, 0, 1, lambda n, k: k))
    if kind in ("first", "s"):
        return IntTriangle("s", nmax, _build(nmax, 0, 1, lambda n, k: -(n - 1)))
    raise ValueError(f"unknown Stirling kind {kind!r}")


def build_central_even(kind: str, nmax: int) -> IntTriangle:
    if kind == "U":
        return IntTriangle("U", nmax, _build(nmax, 0, 1, lambda n, k: k * k))
    if kind == "u":
        return IntTriangle("u", nmax, _build(nmax, 0, 1, lambda n, k: -(n - 1) ** 2))
    raise ValueError(f"unknown central factorial kind {kind!r}")


def build_central_odd(kind: str, nmax: int) -> IntTriangle:
    if kind == "V":
        step = lambda n, k: (2 * k + 1) ** 2  # noqa: E731
    elif kind == "v":
        step = lambda n, k: -(2 * n - 1) ** 2  # noqa: E731
    else:
        raise ValueError(f"unknown central factorial kind {kind!r}")
    return IntTriangle(kind, nmax, _build(nmax, 0, 1, step, odd_index=True))


def build_legendre_stirling(kind: str, nmax: int) -> IntTriangle:
    if kind not in ("LS", "ls"):
        raise ValueError(f"unknown Legendre-Stirling kind {kind!r}")
    tri = build_js_second(nmax) if kind == "LS" else build_js_first(nmax)
    return IntTriangle(kind, nmax, tuple(tuple(int(p(1)) for p in row) for row in tri.rows))


TRIANGLE_KINDS = ("JS", "js", "S", "s", "U", "u", "V", "v", "LS", "ls")


def build_triangle(kind: str, nmax: int) -> Union[PolyTriangle, IntTriangle]:
    """Dispatch on the short triangle name used by the command line."""
    builders = {
        "JS": lambda: build_js_second(nmax),
        "js": lambda: build_js_first(nmax),
        "S": lambda: build_stirling("second", nmax),
        "s": lambda: build_stirling("first", nmax),
        "U": lambda: build_central_even("U", nmax),
        "u": lambda: build_central_even("u", nmax),
        "V": lambda: build_central_odd("V", nmax),
        "v": lambda: build_central_odd("v", nmax),
        "LS": lambda: build_legendre_stirling("LS", nmax),
        "ls": lambda: build_legendre_stirling("ls", nmax),
    }
    try:
        return builders[kind]()
    except KeyError:
        raise ValueError(f"unknown triangle kind {kind!r}; expected one of {TRIANGLE_KINDS}") from None


def legendre_stirling(triangle: PolyTriangle, n: int, k: int) -> int:
    """Specialise a JS or js entry at ``z = 1``."""
    return int(triangle[n, k](1))


def coeffs(triangle: PolyTriangle, kind: str, n: int, k: int) -> CoeffView:
    """Coefficient lists of one triangle entry.

    ``a``: monomial coefficients of ``JS(n,k)``; ``b``: monomial coefficients of
    ``(-1)**(n-k) js(n,k)``; ``d``: coefficients of ``JS(n,k)`` in powers of
    ``z + 1``. The list always has length ``n - k + 1``.
    """
    if not 1 <= k <= n:
        raise IndexError(f"coefficients need 1 <= k <= n, got ({n},{k})")
    p = triangle[n, k]
    if kind == "a":
        _expect(triangle, "JS")
    elif kind == "b":
        _expect(triangle, "js")
        p = p * (-1) ** (n - k)
    elif kind == "d":
        _expect(triangle, "JS")
        p = rebase_shift(p, 1)
    else:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    values = tuple(p[i] for i in range(n - k + 1))
    if kind == "b" and any(v < 0 for v in values):
        raise TriangleError(f"negative b coefficient at ({n},{k}): {values}")
    return CoeffView(kind, n, k, values)


def _expect(triangle: PolyTriangle, name: str) -> None:
    if triangle.name != name:
        raise ValueError(f"expected a {name} triangle, got {triangle.name}")


def explicit_js_value(n: int, j: int, z: Fraction) -> Fraction:
    """Closed-form sum for ``JS(n, j)`` at a rational point ``z``.

    Raises ``ZeroDivisionError`` when a Pochhammer factor vanishes at ``z``.
    """
    total = Fraction(0)
    for r in range(j + 1):
        num = (r * (r + z)) ** n
        den = factorial(r) * factorial(j - r) * rising(z + r, r) * rising(z + 2 * r + 1, j - r)
        if den == 0:
            raise ZeroDivisionError(f"vanishing denominator at z={z}, r={r}")
        total += (-1) ** (j - r) * Fraction(num) / den
    return total


def explicit_js(n: int, j: int) -> IntPoly:
    """``JS(n, j)`` from the closed-form sum, by evaluation and interpolation.

    The sum is evaluated at ``n - j + 1`` positive integers ``z`` and the
    degree ``n - j`` interpolant is returned; it must have integer
    coefficients. Points where a denominator vanishes are skipped.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got ({n},{j})")
    need = n - j + 1
    points, values = [], []
    z = 1
    while len(points) < need:
        try:
            values.append(explicit_js_value(n, j, Fraction(z)))
            points.append(z)
        except ZeroDivisionError:
            pass
        z += 1
    try:
        return interpolate(points, values)
    except ArithmeticError as exc:
        raise TriangleError(f"explicit formula gave non-integer JS({n},{j})") from exc


def falling_product(k: int) -> list[IntPoly]:
    """``prod_{i<k} (x - i(z+i))`` as a list of ``x``-coefficients in ``Z[z]``."""
    out = [IntPoly([1])]
    for i in range(k):
        root = IntPoly([i * i, i])
        nxt = [IntPoly()] * (len(out) + 1)
        for e, c in enumerate(out):
            nxt[e + 1] = nxt[e + 1] + c
            nxt[e] = nxt[e] - root * c
        out = nxt
    return out


def _xpoly_add_scaled(acc: list[IntPoly], terms: list[IntPoly], scale: IntPoly) -> None:
    for e, c in enumerate(terms):
        while len(acc) <= e:
            acc.append(IntPoly())
        acc[e] = acc[e] + scale * c


def _xpoly_trim(p: list[IntPoly]) -> list[IntPoly]:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def verify_defining_relations(nmax: int, JS: PolyTriangle | None = None,
                              js: PolyTriangle | None = None) -> Report:
    """Check both connection-coefficient expansions as identities in ``Z[x, z]``.

    ``x**n == sum_k JS(n,k) prod_{i<k}(x - i(z+i))`` and
    ``prod_{i<n}(x - i(z+i)) == sum_k js(n,k) x**k`` for ``n <= nmax``.
    """
    report = Report("defining_relations", {"nmax": nmax})
    JS = JS or build_js_second(nmax)
    js = js or build_js_first(nmax)
    products = [falling_product(k) for k in range(nmax + 1)]
    for n in range(nmax + 1):
        rhs: list[IntPoly] = []
        for k in range(n + 1):
            _xpoly_add_scaled(rhs, products[k], JS[n, k])
        target = [IntPoly()] * n + [IntPoly([1])]
        if _xpoly_trim(rhs) != target:
            report.fail(("JS", n))
        lhs = _xpoly_trim(products[n])
        rhs_first = _xpoly_trim([js[n, k] for k in range(n + 1)])
        if lhs != rhs_first:
            report.fail(("js", n))
        report.checked += 2
    return report


def verify_coefficient_bounds(nmax: int) -> Report:
    """Degree, positivity and the four boundary coefficients of JS and js."""
    report = Report("coefficient_bounds", {"nmax": nmax})
    JS, js = build_js_second(nmax), build_js_first(nmax)
    S, s = build_stirling("second", nmax), build_stirling("first", nmax)
    U, u = build_central_even("U", nmax), build_central_even("u", nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.checked += 1
            d = n - k
            if JS[n, k].degree != d or js[n, k].degree != d:
                report.fail((n, k, "degree"))
                continue
            a = coeffs(JS, "a", n, k).values
            try:
                b = coeffs(js, "b", n, k).values
            except TriangleError:
                report.fail((n, k, "b sign"))
                continue
            if min(a) <= 0 or min(b) <= 0:
                report.fail((n, k, "positivity"))
            if a[d] != S[n, k]:
                report.fail((n, k, "a top != S"))
            if a[0] != U[n, k]:
                report.fail((n, k, "a bottom != U"))
            if b[d] != abs(s[n, k]):
                report.fail((n, k, "b top != |s|"))
            if b[0] != abs(u[n, k]):
                report.fail((n, k, "b bottom != |u|"))
    return report


def verify_d_identities(nmax: int) -> Report:
    """Relations between the monomial and ``(z+1)``-basis coefficients.

    Checks ``a[i] = sum_j C(j,i) d[j]``, ``U = sum_j d[j]``,
    ``LS = sum_j 2**j d[j]`` (sums over all ``j``), ``d[0] == JS(n,k)(-1)`` and
    ``d >= 0``. ``JS(n,k)(-1)`` is strictly positive except in column ``k = 1``,
    where ``JS(n,1) = (z+1)**(n-1)`` vanishes at ``-1`` for ``n >= 2``.
    """
    report = Report("d_identities", {"nmax": nmax})
    JS = build_js_second(nmax)
    U = build_central_even("U", nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            report.checked += 1
            a = coeffs(JS, "a", n, k).values
            d = coeffs(JS, "d", n, k).values
            top = n - k
            for i in range(top + 1):
                if a[i] != sum(binomial(j, i) * d[j] for j in range(i, top + 1)):
                    report.fail((n, k, f"a[{i}]"))
            if U[n, k] != sum(d):
                report.fail((n, k, "U"))
            if legendre_stirling(JS, n, k) != sum(2 ** j * dj for j, dj in enumerate(d)):
                report.fail((n, k, "LS"))
            at_minus_one = JS[n, k](-1)
            if at_minus_one != d[0] or min(d) < 0 or d[top] <= 0:
                report.fail((n, k, "d sign"))
            if (k >= 2 or n == k) and at_minus_one <= 0:
                report.fail((n, k, "JS(-1) positivity"))
    return report
