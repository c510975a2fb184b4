"""Exact arithmetic for puzzle computations.

Three rings live here:

- :class:`Cyc12` -- the ring ``Z[zeta]`` with ``zeta = exp(i*pi/6)`` a
  primitive 12th root of unity, represented modulo the minimal polynomial
  ``x^4 - x^2 + 1``.
- :class:`YPoly` -- sparse multivariate polynomials with integer
  coefficients in variables ``y1, y2, ...``.
- :class:`Tower` -- elements of ``Z[zeta][delta0,delta1,delta2][y]`` that
  are at most linear in the ``delta`` variables (nothing here ever
  multiplies two deltas; enforcing that catches bugs loudly).

Also: :func:`exact_divide` (division by a linear form with an integrality
check) and :func:`graham_decompose` (rewriting in the difference basis
``y2-y1, ..., yn-y(n-1)`` to test positivity).

>>> (zeta_pow(6)).coeffs
(-1, 0, 0, 0)
>>> y(4) - y(1) == parse_poly("-1*y1 + 1*y4")
True
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "Cyc12",
    "zeta_pow",
    "YPoly",
    "y",
    "ypoly_const",
    "parse_poly",
    "format_poly",
    "exact_divide",
    "NotDivisible",
    "NotInDifferenceRing",
    "graham_decompose",
    "is_graham_positive",
    "Tower",
]


# ---------------------------------------------------------------------------
# Z[zeta_12]


class Cyc12:
    """An element ``c0 + c1*z + c2*z^2 + c3*z^3`` of ``Z[z]/(z^4 - z^2 + 1)``.

    ``z`` is the primitive 12th root of unity ``exp(i*pi/6)``; in
    particular ``z^6 = -1`` and ``z^12 = 1``.

    >>> zeta_pow(4) == Cyc12((-1, 0, 1, 0))
    True
    >>> zeta_pow(3) * zeta_pow(9)
    Cyc12((1, 0, 0, 0))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0, 0, 0, 0)):
        c = tuple(int(x) for x in coeffs)
        if len(c) != 4:
            raise ValueError("Cyc12 needs exactly 4 coefficients")
        self.coeffs = c

    @staticmethod
    def from_int(n: int) -> "Cyc12":
        return Cyc12((n, 0, 0, 0))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Cyc12.from_int(other)
        return isinstance(other, Cyc12) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Cyc12":
        return Cyc12(tuple(-x for x in self.coeffs))

    def __add__(self, other) -> "Cyc12":
        if isinstance(other, int):
            other = Cyc12.from_int(other)
        return Cyc12(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "Cyc12":
        return self + (-other if isinstance(other, Cyc12) else Cyc12.from_int(-other))

    def __mul__(self, other) -> "Cyc12":
        if isinstance(other, int):
            return Cyc12(tuple(other * x for x in self.coeffs))
        # convolve to degree 6, then reduce with z^k = z^(k-2) - z^(k-4)
        prod = [0] * 7
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        for k in range(6, 3, -1):
            if prod[k]:
                prod[k - 2] += prod[k]
                prod[k - 4] -= prod[k]
                prod[k] = 0
        return Cyc12(prod[:4])

    __rmul__ = __mul__

    def complex_value(self) -> complex:
        """Floating-point embedding (sanity checks only)."""
        import cmath

        z = cmath.exp(1j * cmath.pi / 6)
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Cyc12({self.coeffs!r})"

    def __str__(self) -> str:
        if not self:
            return "0"
        names = ["", "z", "z^2", "z^3"]
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(names[k])
            elif c == -1:
                parts.append("-" + names[k])
            else:
                parts.append(f"{c}*{names[k]}")
        return " + ".join(parts).replace("+ -", "- ")


_ZETA = Cyc12((0, 1, 0, 0))
_ONE = Cyc12((1, 0, 0, 0))

_ZETA_POWS: list[Cyc12] = []
_p = _ONE
for _ in range(12):
    _ZETA_POWS.append(_p)
    _p = _p * _ZETA
del _p


def zeta_pow(k: int) -> Cyc12:
    """The reduced representative of ``zeta^k``.

    >>> zeta_pow(0) == 1
    True
    >>> zeta_pow(6) == -1
    True
    >>> zeta_pow(3) + zeta_pow(7) + zeta_pow(11)
    Cyc12((0, 0, 0, 0))
    """
    return _ZETA_POWS[k % 12]


# ---------------------------------------------------------------------------
# Sparse integer polynomials in y1, y2, ...

Mono = tuple[int, ...]  # exponent vector, trailing zeros stripped


def _strip(mono: Iterable[int]) -> Mono:
    m = list(mono)
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


class YPoly:
    """A sparse polynomial over ``Z`` in variables ``y1, y2, ...``.

    Stored as a map from exponent vectors (trailing zeros stripped) to
    nonzero integer coefficients.

    >>> p = (y(4) - y(1)) * (y(4) - y(3))
    >>> p.degree()
    2
    >>> p == parse_poly("1*y1*y3 - 1*y1*y4 - 1*y3*y4 + 1*y4^2")
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        d: dict[Mono, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    d[_strip(m)] = d.get(_strip(m), 0) + c
        self.terms = {m: c for m, c in d.items() if c}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(n: int) -> "YPoly":
        return YPoly({(): n}) if n else YPoly()

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = YPoly.const(other)
        return isinstance(other, YPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "YPoly":
        return YPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "YPoly":
        if isinstance(other, int):
            other = YPoly.const(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            d[m] = d.get(m, 0) + c
        return YPoly(d)

    __radd__ = __add__

    def __sub__(self, other) -> "YPoly":
        if isinstance(other, int):
            other = YPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "YPoly":
        return (-self) + other

    def __mul__(self, other) -> "YPoly":
        if isinstance(other, int):
            return YPoly({m: other * c for m, c in self.terms.items()})
        d: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return YPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "YPoly":
        if k < 0:
            raise ValueError("negative power")
        result = YPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection --------------------------------------------------------

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def nvars(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def coeff(self, mono: Iterable[int]) -> int:
        return self.terms.get(_strip(mono), 0)

    def substitute(self, values: Mapping[int, "YPoly"]) -> "YPoly":
        """Substitute ``y_i -> values[i]`` (1-based; missing i stays ``y_i``)."""
        out = YPoly()
        for m, c in self.terms.items():
            term = YPoly.const(c)
            for i, e in enumerate(m, start=1):
                if not e:
                    continue
                term = term * (values.get(i, y(i)) ** e)
            out = out + term
        return out

    def __repr__(self) -> str:
        return f"YPoly({self.terms!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if len(m1) < len(m2):
        m1, m2 = m2, m1
    if not m2:
        return m1
    padded = list(m2) + [0] * (len(m1) - len(m2))
    return tuple(a + b for a, b in zip(m1, padded))


def y(i: int) -> YPoly:
    """The variable ``y_i`` (1-based).

    >>> str(y(2))
    '1*y2'
    """
    if i < 1:
        raise ValueError("variables are 1-based")
    return YPoly({(0,) * (i - 1) + (1,): 1})


def ypoly_const(n: int) -> YPoly:
    return YPoly.const(n)


# -- canonical text form ----------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*([+-]?\d+)\s*((?:\*\s*y\d+(?:\^\d+)?\s*)*)$"
)
_FACTOR_RE = re.compile(r"y(\d+)(?:\^(\d+))?")


def _mono_key(m: Mono) -> tuple:
    # graded-lex with y1 before y2 before ...
    return (sum(m), tuple(-e for e in m))


def format_poly(p: YPoly) -> str:
    """Canonical text form: graded-lex ordered sum of ``c*y1^a1*...`` terms.

    >>> format_poly(y(5) + y(4) - y(3) - y(1))
    '-1*y1 - 1*y3 + 1*y4 + 1*y5'
    >>> format_poly(YPoly())
    '0'
    """
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_mono_key):
        c = p.terms[m]
        factors = [str(c)]
        for i, e in enumerate(m, start=1):
            if e == 1:
                factors.append(f"y{i}")
            elif e > 1:
                factors.append(f"y{i}^{e}")
        parts.append("*".join(factors))
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def parse_poly(text: str) -> YPoly:
    """Parse the canonical polynomial grammar.

    >>> parse_poly("1*y4 - 1*y1") == y(4) - y(1)
    True
    >>> parse_poly("0") == YPoly()
    True
    """
    text = re.sub(r"\s+", "", text)
    if text in ("0", ""):
        return YPoly()
    # normalize "a-b" to "a+-b", then split on +
    text = text.replace("-", "+-").lstrip("+")
    out = YPoly()
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad polynomial term: {chunk!r}")
        coeff = int(m.group(1))
        mono: dict[int, int] = {}
        for fm in _FACTOR_RE.finditer(m.group(2)):
            i = int(fm.group(1))
            e = int(fm.group(2) or 1)
            mono[i] = mono.get(i, 0) + e
        vec = [0] * (max(mono) if mono else 0)
        for i, e in mono.items():
            vec[i - 1] = e
        out = out + YPoly({tuple(vec): coeff})
    return out


# ---------------------------------------------------------------------------
# Exact division by a linear form


class NotDivisible(ArithmeticError):
    """Raised when exact division fails (remainder or non-integrality)."""


def exact_divide(p: YPoly, l: YPoly) -> YPoly:
    """Divide ``p`` by the linear form ``l``, asserting exactness.

    ``l`` must be a nonzero homogeneous linear form ``sum c_i y_i``.
    The quotient is computed by synthetic division in the highest variable
    of ``l`` with rational arithmetic, then checked to be integral.

    >>> exact_divide((y(4) - y(1)) * (y(4) - y(3)), y(4) - y(1)) == y(4) - y(3)
    True
    >>> exact_divide(YPoly(), y(2) - y(1)) == YPoly()
    True
    >>> exact_divide(y(1) * y(2), y(1) + y(2))  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
        ...
    NotDivisible: nonzero remainder
    """
    if not l or l.degree() != 1 or not l.is_homogeneous():
        raise ValueError("divisor must be a nonzero homogeneous linear form")
    if not p:
        return YPoly()
    pivot = max(len(m) for m in l.terms)  # highest variable index in l
    c_pivot = l.terms[_strip((0,) * (pivot - 1) + (1,))]
    rest = l - YPoly({(0,) * (pivot - 1) + (1,): c_pivot})

    def split(mono: Mono) -> tuple[int, Mono]:
        if len(mono) < pivot:
            return 0, mono
        e = mono[pivot - 1]
        reduced = list(mono)
        reduced[pivot - 1] = 0
        return e, _strip(reduced)

    # p as a polynomial in y_pivot with Fraction-coefficient polys
    coeffs: dict[int, dict[Mono, Fraction]] = {}
    for m, c in p.terms.items():
        e, red = split(m)
        coeffs.setdefault(e, {})[red] = coeffs.setdefault(e, {}).get(red, Fraction(0)) + c
    top = max(coeffs)
    quot: dict[int, dict[Mono, Fraction]] = {}
    for k in range(top, 0, -1):
        qk = {m: c / c_pivot for m, c in coeffs.get(k, {}).items() if c}
        if qk:
            quot[k - 1] = qk
        # subtract qk * rest from the y_pivot^(k-1) coefficient
        if qk and rest:
            tgt = coeffs.setdefault(k - 1, {})
            for m1, c1 in qk.items():
                for m2, c2 in rest.terms.items():
                    e2, red2 = split(m2)
                    if e2:
                        raise AssertionError("pivot must be highest in divisor")
                    m = _mono_mul(m1, red2)
                    tgt[m] = tgt.get(m, Fraction(0)) - c1 * c2
        coeffs.pop(k, None)
    remainder = {m: c for m, c in coeffs.get(0, {}).items() if c}
    if remainder:
        raise NotDivisible("nonzero remainder")
    out: dict[Mono, int] = {}
    for k, qk in quot.items():
        for m, c in qk.items():
            if c:
                if c.denominator != 1:
                    raise NotDivisible("non-integral quotient")
                full = list(m) + [0] * (max(0, pivot - len(m)))
                full[pivot - 1] += k
                out[_strip(full)] = out.get(_strip(full), 0) + int(c)
    return YPoly(out)


# ---------------------------------------------------------------------------
# Difference-basis decomposition (positivity test)


class NotInDifferenceRing(ArithmeticError):
    """Raised when a polynomial is not a polynomial in y(i+1) - y(i)."""


def graham_decompose(p: YPoly, n: int | None = None) -> dict[Mono, int]:
    """Rewrite ``p`` in monomials of ``z_i = y_(i+1) - y_i``.

    Returns the coefficient map (z-exponent vector -> integer).  Raises
    :class:`NotInDifferenceRing` if ``p`` is not expressible, i.e. not
    invariant under translating all ``y_i`` simultaneously.

    >>> dec = graham_decompose(y(4) - y(1))
    >>> sorted(dec.items())
    [((0, 0, 1), 1), ((0, 1), 1), ((1,), 1)]
    >>> all(c >= 0 for c in dec.values())
    True
    >>> graham_decompose(y(1) - y(2))
    {(1,): -1}
    >>> graham_decompose(y(1))  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
        ...
    NotInDifferenceRing: not a polynomial in the differences
    """
    if n is None:
        n = p.nvars()
    # substitute y_1 -> 0, y_i -> z_1 + ... + z_(i-1); the z_t live in the
    # same sparse representation (variable t).
    subs = {1: YPoly()}
    acc = YPoly()
    for i in range(2, n + 1):
        acc = acc + y(i - 1)  # z_(i-1) as variable i-1
        subs[i] = acc
    q = p.substitute(subs)
    # round trip: z_t -> y_(t+1) - y_t must recover p
    back = {t: y(t + 1) - y(t) for t in range(1, n)}
    if q.substitute(back) != p:
        raise NotInDifferenceRing("not a polynomial in the differences")
    return dict(q.terms)


def is_graham_positive(p: YPoly, n: int | None = None) -> bool:
    """Whether ``p`` has nonnegative coefficients in the difference basis.

    >>> is_graham_positive((y(4) - y(3)) * (y(4) - y(1)))
    True
    >>> is_graham_positive(y(1) - y(2))
    False
    """
    return all(c >= 0 for c in graham_decompose(p, n).values())


# ---------------------------------------------------------------------------
# The delta-linear tower ring

DeltaKey = int | None  # None = delta-free part; 0/1/2 = coefficient of delta_i


class Tower:
    """An element of ``Z[zeta][delta][y]`` of degree at most 1 in the deltas.

    Stored as a map ``(delta_key, y_monomial) -> Cyc12`` where
    ``delta_key`` is ``None`` for the delta-free part or ``i`` for the
    coefficient of ``delta_i``.  Multiplying two elements that both carry
    deltas raises (the calculus never needs it).

    >>> a = Tower.delta(0) * Tower.zeta(3)
    >>> b = Tower.delta(1) * Tower.zeta(3)
    >>> (a - b) + (b - a) == Tower.zero()
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[DeltaKey, Mono], Cyc12] | None = None):
        d: dict[tuple[DeltaKey, Mono], Cyc12] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    dk, m = k
                    key = (dk, _strip(m))
                    prev = d.get(key)
                    d[key] = c if prev is None else prev + c
        self.terms = {k: c for k, c in d.items() if c}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Tower":
        return Tower()

    @staticmethod
    def const(n: int) -> "Tower":
        return Tower({(None, ()): Cyc12.from_int(n)})

    @staticmethod
    def zeta(k: int) -> "Tower":
        return Tower({(None, ()): zeta_pow(k)})

    @staticmethod
    def delta(i: int) -> "Tower":
        if i not in (0, 1, 2):
            raise ValueError("delta index must be 0, 1 or 2")
        return Tower({(i, ()): _ONE})

    @staticmethod
    def from_ypoly(p: YPoly) -> "Tower":
        return Tower({(None, m): Cyc12.from_int(c) for m, c in p.terms.items()})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tower) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Tower":
        return Tower({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "Tower") -> "Tower":
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, Cyc12()) + c
        return Tower(d)

    def __sub__(self, other: "Tower") -> "Tower":
        return self + (-other)

    def __mul__(self, other) -> "Tower":
        if isinstance(other, int):
            other = Tower.const(other)
        if isinstance(other, Cyc12):
            return Tower({k: c * other for k, c in self.terms.items()})
        d: dict[tuple[DeltaKey, Mono], Cyc12] = {}
        for (dk1, m1), c1 in self.terms.items():
            for (dk2, m2), c2 in other.terms.items():
                if dk1 is not None and dk2 is not None:
                    raise ValueError("product would be quadratic in delta")
                dk = dk1 if dk1 is not None else dk2
                key = (dk, _mono_mul(m1, m2))
                prev = d.get(key)
                prod = c1 * c2
                d[key] = prod if prev is None else prev + prod
        return Tower(d)

    __rmul__ = __mul__

    # -- specialization ----------------------------------------------------

    def specialize_delta(self, values: tuple[int, int, int]) -> "Tower":
        """Substitute integers for ``delta0, delta1, delta2``."""
        d: dict[tuple[DeltaKey, Mono], Cyc12] = {}
        for (dk, m), c in self.terms.items():
            scale = 1 if dk is None else values[dk]
            if scale:
                key = (None, m)
                prev = d.get(key)
                add = c * scale
                d[key] = add if prev is None else prev + add
        return Tower(d)

    def to_ypoly(self) -> YPoly:
        """Convert a delta-free, zeta-free element back to a plain YPoly."""
        out: dict[Mono, int] = {}
        for (dk, m), c in self.terms.items():
            if dk is not None:
                raise ValueError("element still carries deltas")
            if any(c.coeffs[1:]):
                raise ValueError("element is not rational")
            out[m] = c.coeffs[0]
        return YPoly(out)

    def __repr__(self) -> str:
        return f"Tower({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (dk, m), c in sorted(
            self.terms.items(),
            key=lambda kv: (-1 if kv[0][0] is None else kv[0][0], _mono_key(kv[0][1])),
        ):
            mono = "*".join(
                f"y{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m, start=1)
                if e
            )
            head = f"({c})"
            if dk is not None:
                head += f"*d{dk}"
            if mono:
                head += f"*{mono}"
            parts.append(head)
        return " + ".join(parts)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
