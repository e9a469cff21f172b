"""Minimal difference Delta and the energy function H on the pair crystal."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .crystal import BoxVertex, PairVertex, pair_crystal, pair_vertices
from .errors import Disconnected, InconsistentEnergy


class Colour(NamedTuple):
    """The colour symbol ``a_a b_b``."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"a{self.a}b{self.b}"

    @classmethod
    def parse(cls, text: str) -> "Colour":
        text = text.strip()
        if not text.startswith("a") or "b" not in text:
            raise ValueError(f"bad colour {text!r}")
        a, b = text[1:].split("b", 1)
        return cls(int(a), int(b))

    def vertex(self) -> BoxVertex:
        return BoxVertex(self.b, self.a)

    @classmethod
    def of(cls, v: BoxVertex) -> "Colour":
        return cls(v.k, v.l)

    def is_free(self) -> bool:
        return self.a == self.b


def colours(n: int) -> list[Colour]:
    return [Colour(a, b) for a in range(n) for b in range(n)]


def chi(p: bool) -> int:
    return 1 if p else 0


def delta(n: int, c1: Colour, c2: Colour) -> int:
    """Least allowed gap between a part coloured c1 and the next part coloured c2."""
    i, k = c1
    i2, k2 = c2
    return chi(i >= i2) - chi(i == k == i2) + chi(k <= k2) - chi(k == i2 == k2)


def interval(n: int, i: int, j: int) -> frozenset[int]:
    """Cyclic interval ``{i+1, ..., j}``; the whole of Z/n when i == j."""
    i, j = i % n, j % n
    out = {(i + 1) % n}
    t = (i + 1) % n
    while t != j:
        t = (t + 1) % n
        out.add(t)
    return frozenset(out)


def delta_interval(n: int, c1: Colour, c2: Colour) -> int:
    """Delta rewritten through membership of 0 in cyclic intervals."""
    k, l = c1
    k2, l2 = c2
    if l == k2:
        return chi(0 not in interval(n, k2, k)) + chi(0 not in interval(n, l, l2))
    return chi(0 in interval(n, k, k2)) + chi(0 in interval(n, l2, l))


def min_last_part(n: int, level: int, c: Colour) -> int:
    """Smallest size of the last part above the ground ``a_level b_level``."""
    return chi(c.a >= level) + chi(level > c.b)


def ground(level: int) -> BoxVertex:
    return BoxVertex(level, level)


@dataclass(frozen=True)
class EnergyTable:
    n: int
    H: dict

    def __getitem__(self, v: PairVertex) -> int:
        return self.H[v]

    def __post_init__(self) -> None:
        by_colour = {(Colour.of(v.right), Colour.of(v.left)): h
                     for v, h in self.H.items()}
        object.__setattr__(self, "_by_colour", by_colour)

    def between(self, earlier: Colour, later: Colour) -> int:
        """Energy between consecutive parts: ``H(vertex(later) (x) vertex(earlier))``."""
        return self._by_colour[(earlier, later)]

    def matrix(self) -> tuple[list[Colour], list[list[int]]]:
        """Rows are earlier colours, columns later colours, natural a-then-b order."""
        cs = colours(self.n)
        return cs, [[self.between(r, c) for c in cs] for r in cs]

    def values(self) -> set[int]:
        return set(self.H.values())


def _propagate(n: int) -> dict[PairVertex, int]:
    c = pair_crystal(n)
    g = BoxVertex(0, 0)
    start = PairVertex(g, g)
    H = {start: 0}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        b1, b2 = v
        h = H[v]
        for i in range(n):
            z = int(i == 0)
            w = c.e(i, v)
            if w is not None:
                step = z if c.c1.phi(i, b1) >= c.c2.eps(i, b2) else -z
                _assign(H, todo, w, h + step)
            w = c.f(i, v)
            if w is not None:
                step = -z if c.c1.phi(i, b1) > c.c2.eps(i, b2) else z
                _assign(H, todo, w, h + step)
    return H


def _assign(H: dict, todo: deque, w: PairVertex, value: int) -> None:
    old = H.get(w)
    if old is None:
        H[w] = value
        todo.append(w)
    elif old != value:
        raise InconsistentEnergy(f"{w.label()}: {old} vs {value}")


@lru_cache(maxsize=None)
def energy_table(n: int) -> EnergyTable:
    """Energy on the pair crystal, normalised to 0 on the ground pair.

    For n = 1 the crystal is a single vertex with a 0-loop and H = 0.
    """
    if n == 1:
        g = BoxVertex(0, 0)
        return EnergyTable(1, {PairVertex(g, g): 0})
    H = _propagate(n)
    missing = [v for v in pair_vertices(n) if v not in H]
    if missing:
        raise Disconnected(f"{len(missing)} pair vertices unreachable, e.g. {missing[0].label()}")
    return EnergyTable(n, H)


@dataclass(frozen=True)
class TheoremReport:
    n: int
    checks: int
    passed: bool
    counterexample: tuple | None = None

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL at {self.counterexample}"
        return f"H = Delta for n={self.n}: {status} ({self.checks} checks)"


def _tuples(n: int) -> Iterator[tuple[int, int, int, int]]:
    for k in range(n):
        for l in range(n):
            for k2 in range(n):
                for l2 in range(n):
                    yield k, l, k2, l2


def verify_theorem(n: int) -> TheoremReport:
    """Compare ``H((v_l' x v_k'^) x (v_l x v_k^))`` with ``Delta(a_k b_l, a_k' b_l')``."""
    table = energy_table(n)
    checks = 0
    for k, l, k2, l2 in _tuples(n):
        checks += 1
        h = table[PairVertex(BoxVertex(l2, k2), BoxVertex(l, k))]
        d = delta(n, Colour(k, l), Colour(k2, l2))
        if h != d:
            return TheoremReport(n, checks, False, ((k, l, k2, l2), h, d))
    return TheoremReport(n, checks, True)


def edge_violations(table: EnergyTable) -> list:
    """Edges of the pair graph along which the defining recurrence fails."""
    n = table.n
    c = pair_crystal(n)
    bad = []
    for v, h in table.H.items():
        b1, b2 = v
        for i in range(n):
            w = c.e(i, v)
            if w is not None:
                z = int(i == 0)
                want = h + (z if c.c1.phi(i, b1) >= c.c2.eps(i, b2) else -z)
                if table.H[w] != want:
                    bad.append((v, i, "e"))
            w = c.f(i, v)
            if w is not None:
                z = int(i == 0)
                want = h + (-z if c.c1.phi(i, b1) > c.c2.eps(i, b2) else z)
                if table.H[w] != want:
                    bad.append((v, i, "f"))
    return bad
