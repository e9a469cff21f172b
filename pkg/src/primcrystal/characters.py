"""Closed formulas for G^P and the level-1 characters, and the identity checks tying them together.

Variables: ``q = e^{-delta}`` and ``b_i = e^{wt v_i}``, so ``e^{alpha_i} = b_{i-1}/b_i``.
Characters are ``e^{-Lambda_l} ch L(Lambda_l)`` in these variables.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

from .series import (Monomial, Series, euler_inverse, laurent_poch, mul_const_term_x,
                     poch_expand, q_poch, subst, to_alpha)


def _e(n: int, i: int, c: int = 1) -> tuple[int, ...]:
    v = [0] * n
    v[i] += c
    return tuple(v)


def _check_level(n: int, level: int) -> None:
    if not 0 <= level < n:
        raise ValueError(f"level {level} outside 0..{n - 1}")


# --- G^P ---------------------------------------------------------------------

def gp_ct(n: int, N: int, level: int = 0) -> Series:
    """``[x^0] prod_i (-b_i^{-1} x q; q)_inf (-b_i x^{-1}; q)_inf``.

    With ``level > 0`` this is G^P after ``b_i -> b_i q`` for ``i < level``,
    applied inside the product.
    """
    _check_level(n, level)
    left = Series.one(n, N)
    right = Series.one(n, N)
    for i in range(n):
        t = int(i < level)
        left = left * poch_expand(Monomial(1 - t, _e(n, i, -1), 1), 1, 1, n, N)
        right = right * poch_expand(Monomial(t, _e(n, i), -1), 1, 1, n, N)
    return mul_const_term_x(left, right)


def shifted_gp(n: int, level: int, N: int) -> Series:
    return gp_ct(n, N, level)


def _lattice_bound(n: int, N: int, linear: bool) -> int:
    # Q(s) >= |s|_inf^2 / (2n); with a linear term of size <= |s|_inf the window widens
    if linear:
        return n + math.isqrt(n * n + 2 * n * N) + 1
    return math.isqrt(2 * n * N)


def _quad(s: tuple[int, ...]) -> int:
    t = s + (0,)
    return sum(t[i] * (t[i] - t[i + 1]) for i in range(len(s)))


def gp_lattice(n: int, N: int) -> Series:
    """``(q;q)^{-n} sum_s b_0^{s_1} prod_i b_i^{s_{i+1}-s_i} q^{Q(s)}``."""
    m = _lattice_bound(n, N, False)
    terms = {}
    for s in itertools.product(range(-m, m + 1), repeat=n - 1):
        e = _quad(s)
        if e > N:
            continue
        t = s + (0,)
        b = [0] * n
        if n > 1:
            b[0] = s[0]
        for i in range(1, n):
            b[i] = t[i] - t[i - 1]
        terms[(e, *b, 0)] = terms.get((e, *b, 0), 0) + 1
    return Series(n, N, terms) * euler_inverse(n, N) ** n


def _poch_depth(start: int, step: int) -> int:
    d, e = 0, start
    while e < 0:
        d -= e
        e += step
    return d


def theta_indices(n: int) -> list[tuple[int, ...]]:
    """The (n-1)! vectors ``(r_1, ..., r_n)`` with ``r_1 = r_n = 0`` and ``0 <= r_i < i``."""
    if n == 1:
        return [(0,)]
    return [(0,) + rr + (0,) for rr in itertools.product(*(range(j) for j in range(2, n)))]


def _theta_sum(n: int, level: int, N: int) -> tuple[Series, int]:
    """The r-indexed theta sum and the working order it was computed to."""
    terms = []
    for r in theta_indices(n):        # r[i-1] = r_i
        mono_q = sum(r[i - 1] * (r[i - 1] - r[i]) for i in range(1, n))
        if level > 0:
            mono_q += r[level - 1]
        b = [0] * n
        for i in range(1, n):
            b[i - 1] += r[i - 1]
            b[i] -= r[i - 1]
        factors = []
        for i in range(1, n):
            T = i * (i + 1)
            sh = level if i >= level > 0 else 0
            lin = (i + 1) * r[i - 1] - i * r[i]
            B = [0] * n
            for j in range(i):
                B[j] += 1
            B[i] -= i
            factors.append((T // 2 + lin + sh, tuple(B), T))
            factors.append((T // 2 - lin - sh, tuple(-x for x in B), T))
        terms.append((mono_q, tuple(b), factors))
    depth = max(max(0, -mq) + sum(_poch_depth(s, T) for s, _, T in fs) for mq, _, fs in terms)
    W = N + 2 * depth
    total = Series.zero(n, W)
    for mq, b, fs in terms:
        acc = Series.monomial(n, W, mq, b)
        for start, B, T in fs:
            acc = acc * laurent_poch(Monomial(start, B, 0), 1, T, n, W)[0]
        total = total + acc
    return total, W


def _theta_prefactor(n: int, W: int) -> Series:
    out = Series.one(n, W)
    inv = euler_inverse(n, W)
    for i in range(1, n):
        T = i * (i + 1)
        out = out * q_poch(n, W, T, T) * inv
    return out


def gp_theta(n: int, N: int) -> Series:
    """The (n-1)!-term sum of theta products for G^P."""
    s, W = _theta_sum(n, 0, N)
    return (s * _theta_prefactor(n, W) * euler_inverse(n, W)).truncate(N)


# --- characters --------------------------------------------------------------

def char_kp(n: int, level: int, N: int) -> Series:
    """Lattice-sum form of ``e^{-Lambda_l} ch L(Lambda_l)``."""
    _check_level(n, level)
    m = _lattice_bound(n, N, True)
    terms = {}
    lo = 0
    for s in itertools.product(range(-m, m + 1), repeat=n - 1):
        e = _quad(s) + (s[level - 1] if level > 0 else 0)
        if e > N:
            continue
        lo = min(lo, e)
        b = [0] * n
        for i in range(1, n):
            b[i - 1] += s[i - 1]
            b[i] -= s[i - 1]
        k = (e, *b, 0)
        terms[k] = terms.get(k, 0) + 1
    W = N - lo
    out = Series(n, W, terms) * euler_inverse(n, W) ** (n - 1)
    return out.truncate(N)


def char_positive(n: int, level: int, N: int) -> Series:
    """Sum of (n-1)! theta-product series, each with nonnegative coefficients."""
    _check_level(n, level)
    s, W = _theta_sum(n, level, N)
    return (s * _theta_prefactor(n, W)).truncate(N)


def char_from_gp(n: int, level: int, N: int) -> Series:
    """``(q;q)_inf`` times the shifted G^P."""
    return q_poch(n, N) * shifted_gp(n, level, N)


# --- principal specialisation ------------------------------------------------

def principal_product(n: int, N: int) -> Series:
    """G^P at ``q -> q^n, b_i -> q^i``, taken inside the product."""
    left = Series.one(1, N)
    right = Series.one(1, N)
    for i in range(n):
        left = left * poch_expand(Monomial(n - i, (0,), 1), 1, n, 1, N)
        right = right * poch_expand(Monomial(i, (0,), -1), 1, n, 1, N)
    return mul_const_term_x(left, right)


def count_partitions_avoiding(n: int, N: int) -> list[int]:
    """Counts of partitions of 0..N with no part divisible by n, by listing them."""
    counts = [0] * (N + 1)

    def walk(rest: int, largest: int, total: int) -> None:
        counts[total] += 1
        for p in range(min(rest, largest), 0, -1):
            if n == 1 or p % n:
                walk(rest - p, p, total + p)

    if n == 1:
        counts[0] = 1
        return counts
    walk(N, N, 0)
    return counts


# --- verification ------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


@dataclass
class VerificationReport:
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def to_dict(self, timings: bool = True) -> dict:
        rows = [c.to_dict() for c in self.checks]
        if not timings:
            for r in rows:
                r.pop("seconds")
        return {"params": self.params, "passed": self.passed, "checks": rows}

    def to_text(self, timings: bool = True) -> str:
        lines = []
        for c in self.checks:
            t = f" ({c.seconds:.2f}s)" if timings else ""
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}{t}"
                         + (f": {c.detail}" if c.detail else ""))
        lines.append("all checks passed" if self.passed else "some checks FAILED")
        return "\n".join(lines) + "\n"


def _compare(name: str, builders: list) -> Check:
    """Evaluate named builders and check they all agree with the first."""
    t0 = time.perf_counter()
    values = [(label, f()) for label, f in builders]
    ref_label, ref = values[0]
    for label, v in values[1:]:
        d = ref.first_difference(v)
        if d is not None:
            m, a, b = d
            return Check(name, False, f"{ref_label} vs {label} at {m}: {a} != {b}",
                         time.perf_counter() - t0)
    return Check(name, True, "", time.perf_counter() - t0)


def principal_spec(n: int, N: int) -> VerificationReport:
    rep = VerificationReport({"n": n, "trunc": N})
    inv = euler_inverse(1, N)
    rep.add(_compare("principal specialisation of G^P = 1/(q;q)",
                     [("1/(q;q)", lambda: inv), ("specialised product", lambda: principal_product(n, N))]))

    def ratio():
        return q_poch(1, N, n, n) * inv

    def recount():
        return Series.from_q_coefficients(1, N, count_partitions_avoiding(n, N))

    rep.add(_compare(f"(q^{n};q^{n})/(q;q) = partitions with no part divisible by {n}",
                     [("product", ratio), ("recount", recount)]))

    # the same specialisation applied to the expanded series; every monomial
    # q^m b^e of G^P has sum_i i*e_i >= -(n-1)m, so slope 1 is guaranteed
    small = min(N, SUBST_ORDER.get(n, 4))

    def by_subst():
        return _flatten(subst(gp_ct(n, small), d=n, scalars={i: i for i in range(n)}, slope=1))

    rep.add(_compare(f"specialised expansion of G^P to q^{small}",
                     [("1/(q;q)", lambda: euler_inverse(1, small)), ("subst", by_subst)]))
    return rep


SUBST_ORDER = {1: 12, 2: 12, 3: 8, 4: 6}


def _flatten(s: Series) -> Series:
    """Drop the (all-zero) b and x exponents into a one-colour series."""
    return Series.from_q_coefficients(1, s.trunc, s.q_coefficients())


def verify_all(n: int, level: int, N: int, spec=None) -> VerificationReport:
    """Run every identity for (n, level) to q^N and collect the results."""
    from .capparelli import gf_capparelli
    from .partitions import gf_grounded

    _check_level(n, level)
    rep = VerificationReport({"n": n, "level": level, "trunc": N,
                              "spec": None if spec is None else spec.to_dict()})
    cache: dict = {}

    def memo(key, f):
        if key not in cache:
            cache[key] = f()
        return cache[key]

    gp = lambda: memo("ct", lambda: gp_ct(n, N))
    rep.add(_compare("G^P: grounded enumeration = constant term = lattice sum = theta sum", [
        ("grounded", lambda: gf_grounded(n, 0, N, minimal=False)),
        ("constant term", gp),
        ("lattice", lambda: gp_lattice(n, N)),
        ("theta", lambda: gp_theta(n, N)),
    ]))
    ch = lambda: memo("kp", lambda: char_kp(n, level, N))
    rep.add(_compare(f"level {level} character: (q;q) shifted G^P = Kac-Peterson = positive sum"
                     " = minimal grounded", [
                         ("(q;q) shifted G^P", lambda: char_from_gp(n, level, N)),
                         ("Kac-Peterson", ch),
                         ("positive", lambda: char_positive(n, level, N)),
                         ("minimal grounded", lambda: gf_grounded(n, level, N, minimal=True)),
                     ]))
    rep.add(_compare(f"level {level}: minimal grounded / (q;q) = grounded", [
        ("grounded", lambda: gf_grounded(n, level, N, minimal=False)),
        ("minimal / (q;q)",
         lambda: gf_grounded(n, level, N, minimal=True) * euler_inverse(n, N)),
    ]))
    t0 = time.perf_counter()
    alpha = to_alpha(ch())
    rep.add(Check(f"level {level} character positive in e^(-alpha)", alpha.is_positive(),
                  "" if alpha.is_positive() else f"{len(alpha.violations)} violations",
                  time.perf_counter() - t0))
    if spec is not None:
        rep.add(_compare("Capparelli: G^C = (q;q) G^P", [
            ("Capparelli", lambda: gf_capparelli(n, spec, N)),
            ("(q;q) G^P", lambda: q_poch(n, N) * gp()),
        ]))
    return rep
