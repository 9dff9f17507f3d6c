"""Exact arithmetic substrate: integer polynomials and truncated bivariate series.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and exact, so no wrapper types are needed for them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPoly",
    "BiSeries",
    "poly_mul",
    "poly_eval",
    "rebase_shift",
    "interpolate",
    "series_compose",
    "sinh_coeffs",
    "exp_coeffs",
    "arcsin_coeffs",
    "rising",
]

Number = Union[int, Fraction]


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``. Trailing zeros are stripped
    on construction, so the zero polynomial has ``coeffs == ()`` and
    ``degree is None``.

    >>> IntPoly([1, 1]) * IntPoly([1, 1])
    IntPoly([1, 2, 1])
    >>> IntPoly([]).degree is None
    True
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == IntPoly((other,))._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self._c))

    def __repr__(self) -> str:
        return f"IntPoly({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                mag = "" if abs(a) == 1 else str(abs(a))
                var = "z" if i == 1 else f"z^{i}"
                terms.append(("-" if a < 0 else "") + mag + var)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self._c)

    def __add__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * a for a in self._c)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def shift(self, c: int) -> "IntPoly":
        """Coefficients of ``self`` in the basis ``(z + c)**i``."""
        return rebase_shift(self, c)


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return NotImplemented


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def poly_eval(p: IntPoly, x: Number) -> Number:
    """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
    return p(x)


def rebase_shift(p: IntPoly, c: int) -> IntPoly:
    """Return ``q`` with ``p(z) == sum(q[i] * (z + c)**i)``.

    Writing ``w = z + c`` gives ``q(w) = p(w - c)``, a Taylor shift by ``-c``.

    >>> rebase_shift(IntPoly([21, 24, 7]), 1)
    IntPoly([4, 10, 7])
    """
    a = list(p.coeffs)
    d = len(a)
    # synthetic division by (w + c), repeated: q(w) = p(w - c)
    for i in range(d):
        for j in range(d - 2, i - 1, -1):
            a[j] -= c * a[j + 1]
    return IntPoly(a)


def interpolate(points: Sequence[Number], values: Sequence[Number]) -> IntPoly:
    """Interpolating polynomial through ``(points[i], values[i])``.

    Uses Newton divided differences in exact rationals. Raises
    ``ArithmeticError`` if the interpolant does not have integer coefficients.
    """
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    if len(set(points)) != len(points):
        raise ValueError("interpolation points must be distinct")
    m = len(points)
    xs = [Fraction(x) for x in points]
    dd = [Fraction(v) for v in values]
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form from the innermost coefficient outwards
    coeffs = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # coeffs <- coeffs * (z - xs[i]) + dd[i]
        nxt = [Fraction(0)] * m
        for j, c in enumerate(coeffs):
            if c:
                if j + 1 < m:
                    nxt[j + 1] += c
                nxt[j] -= c * xs[i]
        nxt[0] += dd[i]
        coeffs = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"interpolant has non-integer coefficients: {coeffs}")
    return IntPoly(int(c) for c in coeffs)


def rising(x, n: int):
    """Pochhammer symbol ``x (x+1) ... (x+n-1)``; works for ints, Fractions, IntPolys."""
    out = 1
    for j in range(n):
        out = (x + j) * out
    return out


class BiSeries:
    """Truncated series in ``t`` and ``x`` with exact rational coefficients.

    Entry ``[j][m]`` is the coefficient of ``t**j * x**m``. Coefficients with
    ``j <= order_t`` and ``m <= order_x`` are exact; everything above the
    orders is discarded by every operation.
    """

    __slots__ = ("order_t", "order_x", "_c")

    def __init__(self, order_t: int, order_x: int, coeffs=None):
        if order_t < 0 or order_x < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.order_t = order_t
        self.order_x = order_x
        grid = [[Fraction(0)] * (order_x + 1) for _ in range(order_t + 1)]
        if coeffs is not None:
            for j, row in enumerate(coeffs):
                if j > order_t:
                    break
                for m, c in enumerate(row):
                    if m > order_x:
                        break
                    grid[j][m] = Fraction(c)
        self._c = tuple(tuple(r) for r in grid)

    @classmethod
    def from_x_series(cls, coeffs: Sequence[Number], t_power: int,
                      order_t: int, order_x: int) -> "BiSeries":
        """``t**t_power * sum(coeffs[m] x**m)``."""
        rows = [[0] * (order_x + 1) for _ in range(order_t + 1)]
        if t_power <= order_t:
            for m, c in enumerate(coeffs[: order_x + 1]):
                rows[t_power][m] = c
        return cls(order_t, order_x, rows)

    @classmethod
    def one(cls, order_t: int, order_x: int) -> "BiSeries":
        return cls(order_t, order_x, [[1]])

    def coeff(self, j: int, m: int) -> Fraction:
        if j > self.order_t or m > self.order_x:
            raise IndexError(f"coefficient t^{j} x^{m} is beyond the truncation order")
        return self._c[j][m]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._c

    def _check(self, other: "BiSeries") -> None:
        if (self.order_t, self.order_x) != (other.order_t, other.order_x):
            raise ValueError("series truncation orders differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.order_t, self.order_x, self._c) == (other.order_t, other.order_x, other._c)

    def __hash__(self) -> int:
        return hash((self.order_t, self.order_x, self._c))

    def __repr__(self) -> str:
        return f"BiSeries(order_t={self.order_t}, order_x={self.order_x})"

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(self.order_t, self.order_x,
                        [[a + b for a, b in zip(r, s)] for r, s in zip(self._c, other._c)])

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(self.order_t, self.order_x,
                        [[a - b for a, b in zip(r, s)] for r, s in zip(self._c, other._c)])

    def scale(self, c: Number) -> "BiSeries":
        return BiSeries(self.order_t, self.order_x, [[c * a for a in r] for r in self._c])

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        T, X = self.order_t, self.order_x
        out = [[Fraction(0)] * (X + 1) for _ in range(T + 1)]
        a, b = self._c, other._c
        nz_b = [[(m, c) for m, c in enumerate(row) if c] for row in b]
        for j1 in range(T + 1):
            for m1, c1 in enumerate(a[j1]):
                if not c1:
                    continue
                for j2 in range(T + 1 - j1):
                    row = out[j1 + j2]
                    for m2, c2 in nz_b[j2]:
                        if m1 + m2 > X:
                            break
                        row[m1 + m2] += c1 * c2
        return BiSeries(T, X, out)


def series_compose(outer: Sequence[Number], inner: BiSeries) -> BiSeries:
    """Truncated composition ``sum(outer[p] * inner**p)``.

    ``inner`` must have no pure-``t`` terms (zero coefficient at every
    ``x**0``), so ``inner**p`` starts at ``x**p`` and only the first
    ``order_x + 1`` outer coefficients contribute.
    """
    if any(inner.coeff(j, 0) for j in range(inner.order_t + 1)):
        raise ValueError("inner series must have zero constant term in x")
    T, X = inner.order_t, inner.order_x
    result = BiSeries(T, X)
    power = BiSeries.one(T, X)
    for p in range(min(len(outer), X + 1)):
        if p:
            power = power * inner
        if outer[p]:
            result = result + power.scale(outer[p])
    return result


def sinh_coeffs(order: int) -> list[Fraction]:
    return [Fraction(1, factorial(m)) if m % 2 else Fraction(0) for m in range(order + 1)]


def exp_coeffs(order: int) -> list[Fraction]:
    return [Fraction(1, factorial(m)) for m in range(order + 1)]


def _double_factorial_odd(n: int) -> int:
    # (2n-1)!!, with (-1)!! = 1
    out = 1
    for j in range(1, 2 * n, 2):
        out *= j
    return out


def arcsin_coeffs(order: int) -> list[Fraction]:
    """Maclaurin coefficients of ``arcsin``: ``((2n-1)!!)**2 / (2n+1)!`` at ``x**(2n+1)``."""
    out = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1, 2):
        n = (m - 1) // 2
        out[m] = Fraction(_double_factorial_odd(n) ** 2, factorial(m))
    return out


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
