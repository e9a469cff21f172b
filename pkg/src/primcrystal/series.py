"""Truncated formal series in q with Laurent exponents in b_0..b_{n-1} and x.

A :class:`Series` stores a finite map from monomials ``q^m b^e x^k`` to
nonzero Python integers.  Every monomial with q-degree above ``trunc`` is
discarded, so sums and products are exact for all degrees ``<= trunc`` as
long as no operand carries negative q-degrees.  Negative q-degrees are
allowed as intermediate values; callers that create them must raise the
working truncation accordingly (see :func:`laurent_poch`).
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DivergentProduct,
    InsufficientTruncation,
    MismatchedContext,
    NotAlphaConvertible,
)

__all__ = [
    "Monomial",
    "Series",
    "AlphaMonomial",
    "AlphaExpansion",
    "series_add",
    "series_mul",
    "poch_expand",
    "laurent_poch",
    "euler_inverse",
    "q_poch",
    "const_term_x",
    "mul_const_term_x",
    "subst",
    "to_alpha",
    "from_alpha",
]


@dataclass(frozen=True, order=True)
class Monomial:
    """``q**q * prod(b_i**b[i]) * x**x``.  Ordering is (q, b, x)."""

    q: int
    b: tuple[int, ...]
    x: int = 0

    @classmethod
    def of(cls, n: int, q: int = 0, b: Mapping[int, int] | Sequence[int] | None = None,
           x: int = 0) -> "Monomial":
        return cls(q, _bvec(n, b), x)

    def key(self) -> tuple[int, ...]:
        return (self.q, *self.b, self.x)

    def __str__(self) -> str:
        return _format_key(self.key(), 1)


def _bvec(n: int, b) -> tuple[int, ...]:
    if b is None:
        return (0,) * n
    if isinstance(b, Mapping):
        v = [0] * n
        for i, e in b.items():
            v[i % n] += e
        return tuple(v)
    b = tuple(b)
    if len(b) != n:
        raise ValueError(f"expected {n} b-exponents, got {len(b)}")
    return b


def _key(n: int, m) -> tuple[int, ...]:
    if isinstance(m, Monomial):
        if len(m.b) != n:
            raise MismatchedContext(f"monomial has {len(m.b)} b-exponents, series has n={n}")
        return m.key()
    m = tuple(m)
    if len(m) != n + 2:
        raise ValueError(f"monomial key must have length {n + 2}")
    return m


class Series:
    """Exact truncated series.  Immutable by convention."""

    __slots__ = ("n", "trunc", "_terms")

    def __init__(self, n: int, trunc: int, terms: Mapping | Iterable = ()):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.trunc = trunc
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for m, c in items:
            k = _key(n, m)
            if k[0] <= trunc:
                acc[k] += int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, n: int, trunc: int, terms: dict) -> "Series":
        s = cls.__new__(cls)
        s.n, s.trunc, s._terms = n, trunc, terms
        return s

    # constructors

    @classmethod
    def zero(cls, n: int, trunc: int) -> "Series":
        return cls._raw(n, trunc, {})

    @classmethod
    def one(cls, n: int, trunc: int) -> "Series":
        return cls.monomial(n, trunc)

    @classmethod
    def monomial(cls, n: int, trunc: int, q: int = 0, b=None, x: int = 0,
                 coef: int = 1) -> "Series":
        k = (q, *_bvec(n, b), x)
        if coef == 0 or q > trunc:
            return cls._raw(n, trunc, {})
        return cls._raw(n, trunc, {k: int(coef)})

    @classmethod
    def from_q_coefficients(cls, n: int, trunc: int, coeffs: Sequence[int]) -> "Series":
        zero_b = (0,) * n
        return cls(n, trunc, {(m, *zero_b, 0): c for m, c in enumerate(coeffs)})

    # inspection

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return self.items()

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical (q, b, x) order."""
        n = self.n
        for k in sorted(self._terms):
            yield Monomial(k[0], k[1:n + 1], k[n + 1]), self._terms[k]

    @property
    def raw_terms(self) -> dict[tuple[int, ...], int]:
        """Copy of the flat ``(q, *b, x) -> coefficient`` map."""
        return dict(self._terms)

    def coeff(self, q: int = 0, b=None, x: int = 0) -> int:
        return self._terms.get((q, *_bvec(self.n, b), x), 0)

    def q_slice(self, q: int) -> dict[tuple[int, ...], int]:
        """Coefficients of q**q as a map from b-exponent vectors (x = 0 only)."""
        n = self.n
        return {k[1:n + 1]: c for k, c in self._terms.items() if k[0] == q and k[-1] == 0}

    def min_q(self) -> int | None:
        return min((k[0] for k in self._terms), default=None)

    def q_coefficients(self) -> list[int]:
        """Coefficients after setting every b_i and x to 1, for degrees 0..trunc."""
        out = [0] * (self.trunc + 1)
        for k, c in self._terms.items():
            if 0 <= k[0]:
                out[k[0]] += c
        return out

    def is_zero(self) -> bool:
        return not self._terms

    # context helpers

    def _check(self, other: "Series") -> None:
        if self.n != other.n or self.trunc != other.trunc:
            raise MismatchedContext(
                f"context (n={self.n}, trunc={self.trunc}) vs (n={other.n}, trunc={other.trunc})")

    def truncate(self, trunc: int) -> "Series":
        if trunc > self.trunc:
            raise InsufficientTruncation(
                f"cannot raise truncation from {self.trunc} to {trunc} exactly")
        return Series._raw(self.n, trunc, {k: c for k, c in self._terms.items() if k[0] <= trunc})

    def with_trunc(self, trunc: int) -> "Series":
        """Relabel the truncation order; higher orders are *not* exact."""
        return Series._raw(self.n, trunc, {k: c for k, c in self._terms.items() if k[0] <= trunc})

    # arithmetic

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, -other)

    def __neg__(self) -> "Series":
        return Series._raw(self.n, self.trunc, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Series.zero(self.n, self.trunc)
            return Series._raw(self.n, self.trunc, {k: c * other for k, c in self._terms.items()})
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = Series.one(self.n, self.trunc)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def shift(self, q: int = 0, b=None, x: int = 0, coef: int = 1) -> "Series":
        """Multiply by the single monomial ``coef * q^q b^b x^x``."""
        mk = (q, *_bvec(self.n, b), x)
        t = self.trunc
        return Series._raw(self.n, t, {
            k2: c * coef for k, c in self._terms.items()
            if (k2 := tuple(map(add, k, mk)))[0] <= t})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.n == other.n and self.trunc == other.trunc and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self.trunc, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Series(n={self.n}, trunc={self.trunc}, terms={len(self._terms)})"

    def __str__(self) -> str:
        if not self._terms:
            return f"0 + O(q^{self.trunc + 1})"
        parts = [_format_key(k, c) for k, c in sorted(self._terms.items())]
        return " + ".join(parts).replace("+ -", "- ") + f" + O(q^{self.trunc + 1})"

    def first_difference(self, other: "Series") -> tuple[Monomial, int, int] | None:
        """Smallest monomial whose coefficients differ, with both coefficients."""
        self._check(other)
        keys = set(self._terms) | set(other._terms)
        bad = sorted(k for k in keys if self._terms.get(k, 0) != other._terms.get(k, 0))
        if not bad:
            return None
        k = bad[0]
        n = self.n
        return Monomial(k[0], k[1:n + 1], k[n + 1]), self._terms.get(k, 0), other._terms.get(k, 0)

    # serialisation

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trunc": self.trunc,
            "terms": [{"q": m.q, "b": list(m.b), "x": m.x, "coef": str(c)}
                      for m, c in self.items()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: Mapping) -> "Series":
        n = int(d["n"])
        return cls(n, int(d["trunc"]), [
            (Monomial(int(t["q"]), tuple(int(e) for e in t["b"]), int(t.get("x", 0))),
             int(t["coef"])) for t in d["terms"]])

    @classmethod
    def from_json(cls, text: str) -> "Series":
        return cls.from_dict(json.loads(text))


def _format_key(k: tuple[int, ...], c: int) -> str:
    factors = []
    if k[0]:
        factors.append("q" if k[0] == 1 else f"q^{k[0]}")
    for i, e in enumerate(k[1:-1]):
        if e:
            factors.append(f"b{i}" if e == 1 else f"b{i}^{e}")
    if k[-1]:
        factors.append("x" if k[-1] == 1 else f"x^{k[-1]}")
    body = "*".join(factors)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def series_add(a: Series, b: Series) -> Series:
    a._check(b)
    out = dict(a._terms)
    for k, c in b._terms.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return Series._raw(a.n, a.trunc, out)


def _mul_terms(at: dict, bt: dict, trunc: int) -> dict:
    if len(at) > len(bt):
        at, bt = bt, at
    by_q: dict[int, list] = defaultdict(list)
    for k, c in bt.items():
        by_q[k[0]].append((k, c))
    qs = sorted(by_q)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for ka, ca in at.items():
        limit = trunc - ka[0]
        for qb in qs:
            if qb > limit:
                break
            for kb, cb in by_q[qb]:
                out[tuple(map(add, ka, kb))] += ca * cb
    return {k: c for k, c in out.items() if c}


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product, dropping everything above the common truncation."""
    a._check(b)
    return Series._raw(a.n, a.trunc, _mul_terms(a._terms, b._terms, a.trunc))


def mul_const_term_x(a: Series, b: Series) -> Series:
    """``[x^0](a*b)`` without forming the x-dependent part of the product."""
    a._check(b)
    ax: dict[int, dict] = defaultdict(dict)
    bx: dict[int, dict] = defaultdict(dict)
    for k, c in a._terms.items():
        ax[k[-1]][k] = c
    for k, c in b._terms.items():
        bx[k[-1]][k] = c
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for xe, part in ax.items():
        other = bx.get(-xe)
        if other:
            for k, c in _mul_terms(part, other, a.trunc).items():
                out[k] += c
    return Series._raw(a.n, a.trunc, {k: c for k, c in out.items() if c})


def _as_monomial(n: int, m) -> Monomial:
    if isinstance(m, Monomial):
        return m
    q, b, x = m
    return Monomial(q, _bvec(n, b), x)


def poch_expand(m, sign: int, step: int, n: int, trunc: int) -> Series:
    """Expand ``prod_{j>=0} (1 + sign * m * q^(step*j))`` below ``trunc``.

    ``sign=-1`` gives ``(m; q^step)_inf`` and ``sign=+1`` gives ``(-m; q^step)_inf``.
    """
    m = _as_monomial(n, m)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if step < 1:
        raise ValueError("step must be positive")
    if m.q < 0:
        raise DivergentProduct(f"factor {m} has negative q-degree")
    out = Series.one(n, trunc)
    e = m.q
    while e <= trunc:
        out = out + out.shift(e, m.b, m.x, sign)
        e += step
    return out


def laurent_poch(m, sign: int, step: int, n: int, trunc: int) -> tuple[Series, int]:
    """Like :func:`poch_expand` but allows a negative starting q-degree.

    The finitely many factors with negative q-degree are multiplied in
    explicitly.  Returns the series and its depth ``d >= 0`` (the most
    negative q-degree it can contain is ``-d``).  A product of several such
    series is exact to order N when each factor is computed with truncation
    ``N + total depth``.
    """
    m = _as_monomial(n, m)
    if m.q >= 0:
        return poch_expand(m, sign, step, n, trunc), 0
    depth = 0
    e = m.q
    head = []
    while e < 0:
        head.append(e)
        depth -= e
        e += step
    out = poch_expand(Monomial(e, m.b, m.x), sign, step, n, trunc)
    for e in head:
        out = out + out.shift(e, m.b, m.x, sign)
    return out, depth


def q_poch(n: int, trunc: int, start: int = 1, step: int = 1) -> Series:
    """``(q^start; q^step)_inf``."""
    return poch_expand(Monomial(start, (0,) * n, 0), -1, step, n, trunc)


def euler_inverse(n: int, trunc: int) -> Series:
    """``1/(q;q)_inf``: the partition generating function."""
    if trunc < 0:
        return Series.zero(n, trunc)
    p = [1] + [0] * trunc
    for k in range(1, trunc + 1):
        for m in range(k, trunc + 1):
            p[m] += p[m - k]
    return Series.from_q_coefficients(n, trunc, p)


def const_term_x(s: Series) -> Series:
    return Series._raw(s.n, s.trunc, {k: c for k, c in s._terms.items() if k[-1] == 0})


def subst(s: Series, d: int = 1, shifts: Sequence[int] | None = None,
          scalars: Mapping[int, int] | None = None, out_trunc: int | None = None,
          slope: int | Fraction | None = None) -> Series:
    """Apply ``q -> q^d``, then ``b_i -> b_i q^shifts[i]``, then ``b_i -> q^scalars[i]``.

    ``slope`` is the caller's guarantee that every monomial of the full
    (untruncated) input with q-degree m lands at q-degree ``>= slope*m``.  It
    defaults to ``d`` when no shift or scalar is nonzero.  Monomials beyond the
    input truncation therefore land at ``>= slope*(s.trunc+1)``, which bounds
    the exact output order.
    """
    n = s.n
    if d < 1:
        raise ValueError("d must be positive")
    shifts = tuple(shifts) if shifts is not None else (0,) * n
    if len(shifts) != n:
        raise ValueError(f"expected {n} shifts")
    scalars = dict(scalars or {})
    if slope is None:
        if any(shifts) or any(scalars.values()):
            raise InsufficientTruncation(
                "a degree-lowering substitution needs an explicit slope guarantee")
        slope = d
    slope = Fraction(slope)
    if slope <= 0:
        raise InsufficientTruncation("slope must be positive to bound the output order")
    exact = math.ceil(slope * (s.trunc + 1)) - 1
    if out_trunc is None:
        out_trunc = exact
    elif out_trunc > exact:
        raise InsufficientTruncation(
            f"input truncated at {s.trunc} is exact only to q^{exact}, not q^{out_trunc}")
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for k, c in s._terms.items():
        q, b, x = k[0], list(k[1:n + 1]), k[n + 1]
        nq = d * q + sum(sh * e for sh, e in zip(shifts, b))
        for i, t in scalars.items():
            nq += t * b[i]
            b[i] = 0
        if q >= 0 and nq < slope * q:
            raise InsufficientTruncation(
                f"monomial {_format_key(k, c)} violates the declared slope {slope}")
        if nq <= out_trunc:
            out[(nq, *b, x)] += c
    return Series._raw(n, out_trunc, {k: c for k, c in out.items() if c})


@dataclass(frozen=True, order=True)
class AlphaMonomial:
    """``prod_i e^{-c_i alpha_i}``."""

    c: tuple[int, ...]

    def to_monomial(self) -> Monomial:
        return from_alpha(self)

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for e in self.c)


@dataclass(frozen=True)
class AlphaExpansion:
    n: int
    trunc: int
    terms: dict
    violations: tuple

    def is_positive(self) -> bool:
        """Every exponent vector nonnegative and every coefficient positive."""
        return not self.violations and all(c > 0 for c in self.terms.values())


def to_alpha(s: Series) -> AlphaExpansion:
    """Rewrite each monomial in the variables e^{-alpha_0}, ..., e^{-alpha_{n-1}}.

    Uses ``e^{-delta} = q`` and ``e^{alpha_i} = b_{i-1}/b_i`` for i >= 1.
    Monomials with a negative alpha-exponent are returned in ``violations``.
    """
    n = s.n
    terms: dict[AlphaMonomial, int] = {}
    violations = []
    for m, c in s.items():
        if m.x != 0 or sum(m.b) != 0:
            raise NotAlphaConvertible(f"{m} has x-degree {m.x} and b-degree {sum(m.b)}")
        cs = [m.q]
        for i in range(n - 1):
            cs.append(cs[-1] - m.b[i])
        am = AlphaMonomial(tuple(cs))
        terms[am] = c
        if not am.is_nonnegative():
            violations.append((am, c))
    return AlphaExpansion(n, s.trunc, terms, tuple(violations))


def from_alpha(am: AlphaMonomial) -> Monomial:
    """Inverse of :func:`to_alpha` on one monomial."""
    c = am.c
    n = len(c)
    b = [0] * n
    # e^{-alpha_0} = q b_0 / b_{n-1};  e^{-alpha_i} = b_i / b_{i-1}
    if n > 1:
        b[0] += c[0]
        b[n - 1] -= c[0]
    for i in range(1, n):
        b[i] += c[i]
        b[i - 1] -= c[i]
    return Monomial(c[0], tuple(b), 0)
