"""Generalised Capparelli partitions: (delta, gamma) specs and the pattern engine.

A spec assigns a free colour index to every bound colour (``delta``) and to
every ordered pair of bound colours on which a gamma clause applies
(``gamma``).  Membership is tested by scanning windows of two and three
consecutive parts.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Sequence

from .energy import Colour, colours, delta as min_gap
from .errors import InvalidSpec
from .partitions import ColouredPart, colour_exponents
from .series import Series

Pair = tuple[Colour, Colour]


def bound_colours(n: int) -> list[Colour]:
    return [c for c in colours(n) if c.a != c.b]


def _run(lo: int, hi: int) -> set[int]:
    """``{lo+1, ..., hi}`` (empty when hi <= lo)."""
    return set(range(lo + 1, hi + 1))


def gamma_admissible(c1: Colour, c2: Colour) -> tuple[int, list[int]] | None:
    """Clause number and admissible values of gamma on ``(c1, c2)``, or None."""
    k1, l1 = c1
    k2, l2 = c2
    if max(k1, l2) < min(k2, l1):
        return 1, sorted(_run(max(k1, l2), min(k2, l1)))
    if k1 > l1 and k2 > l2:
        d = _run(l2, k2) - _run(l1, k1)
        if d:
            return 2, sorted(d)
    if k1 < l1 and k2 < l2:
        d = _run(k1, l1) - _run(k2, l2)
        if d:
            return 3, sorted(d)
    return None


def gamma_domain(n: int) -> list[Pair]:
    bc = bound_colours(n)
    return [(c1, c2) for c1 in bc for c2 in bc if gamma_admissible(c1, c2) is not None]


@dataclass(frozen=True)
class ConditionReport:
    valid: bool
    checks: int
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_cond1(n: int, delta: dict[Colour, int]) -> ConditionReport:
    checks = 0
    for c in bound_colours(n):
        checks += 1
        if c not in delta:
            return ConditionReport(False, checks, f"delta undefined on {c}")
        v = delta[c]
        if not (isinstance(v, int) and min(c) < v <= max(c)):
            return ConditionReport(False, checks, f"delta({c}) = {v} not in ({min(c)}, {max(c)}]")
    return ConditionReport(True, checks)


def validate_cond2(n: int, gamma: dict[Pair, int]) -> ConditionReport:
    checks = 0
    for c1, c2 in gamma_domain(n):
        checks += 1
        clause, allowed = gamma_admissible(c1, c2)
        if (c1, c2) not in gamma:
            return ConditionReport(False, checks, f"gamma undefined on ({c1}, {c2}), clause {clause}")
        v = gamma[(c1, c2)]
        if v not in allowed:
            return ConditionReport(
                False, checks, f"gamma({c1}, {c2}) = {v} violates clause {clause}: allowed {allowed}")
    return ConditionReport(True, checks)


@dataclass(frozen=True)
class CapparelliSpec:
    n: int
    delta: dict = field(hash=False)
    gamma: dict = field(hash=False)

    def validate(self) -> None:
        for rep in (validate_cond1(self.n, self.delta), validate_cond2(self.n, self.gamma)):
            if not rep:
                raise InvalidSpec(rep.violation)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": {str(c): v for c, v in sorted(self.delta.items())},
            "gamma": {f"{c1},{c2}": v for (c1, c2), v in sorted(self.gamma.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict, n: int | None = None) -> "CapparelliSpec":
        try:
            delta = {Colour.parse(k): int(v) for k, v in d["delta"].items()}
            gamma = {}
            for k, v in d.get("gamma", {}).items():
                a, b = k.split(",")
                gamma[(Colour.parse(a), Colour.parse(b))] = int(v)
        except (KeyError, AttributeError, ValueError, TypeError) as exc:
            raise InvalidSpec(f"malformed spec: {exc}") from exc
        size = d.get("n", n)
        if size is None:
            size = 1 + max((max(c) for c in delta), default=0)
        if n is not None and size != n:
            raise InvalidSpec(f"spec is for n={size}, not n={n}")
        return cls(size, delta, gamma)

    @classmethod
    def load(cls, path: str | Path, n: int | None = None) -> "CapparelliSpec":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"{path}: {exc}") from exc
        return cls.from_dict(data, n)


def _make_spec(n: int, pick_delta: Callable, pick_gamma: Callable) -> CapparelliSpec:
    delta = {c: pick_delta(c) for c in bound_colours(n)}
    gamma = {(c1, c2): pick_gamma(gamma_admissible(c1, c2)[1]) for c1, c2 in gamma_domain(n)}
    return CapparelliSpec(n, delta, gamma)


def canonical_spec(n: int) -> CapparelliSpec:
    """delta = max{k, l}; gamma = largest admissible value."""
    return _make_spec(n, max, max)


def alternative_spec(n: int) -> CapparelliSpec:
    """delta = min{k, l} + 1; gamma = smallest admissible value."""
    return _make_spec(n, lambda c: min(c) + 1, min)


# --- pattern engine ---------------------------------------------------------

def _free(i: int) -> Colour:
    return Colour(i, i)


def _bad_pair(spec: CapparelliSpec, y: ColouredPart, z: ColouredPart, at_start: bool) -> bool:
    """Two-part patterns: a repeated free colour, or a start-of-partition P3a."""
    if y.size == z.size and y.colour == z.colour and y.colour.a == y.colour.b and y.colour.a >= 1:
        return True
    if at_start and y.size == z.size:
        k2, l2 = z.colour
        if k2 > l2 and y.colour == _free(spec.delta[z.colour]):
            return True
    return False


def _bad_end(spec: CapparelliSpec, x: ColouredPart, y: ColouredPart) -> bool:
    """``p_{c1} + p_{a_i b_i}`` closing the partition, with k1 < l1 and i = delta(c1)."""
    k1, l1 = x.colour
    return k1 < l1 and x.size == y.size and y.colour == _free(spec.delta[x.colour])


def _bad_triple(spec: CapparelliSpec, x: ColouredPart, y: ColouredPart, z: ColouredPart) -> bool:
    c1, c2 = x.colour, z.colour
    k1, l1 = c1
    k2, l2 = c2
    if y.colour.a != y.colour.b:
        return False
    i = y.colour.a
    g = spec.gamma.get((c1, c2))
    if y.size == z.size:
        p = y.size
        if x.size == p and k1 != l1 and k2 != l2 and max(k1, l2) < min(k2, l1) and i == g:
            return True
        if k2 > l2:
            if x.size >= p + 2 and i == spec.delta[c2]:
                return True
            if x.size == p + 1:
                if k1 <= l1 and i == spec.delta[c2]:
                    return True
                if k1 > l1 and _run(l2, k2) - _run(l1, k1) and i == g:
                    return True
    if k1 < l1 and x.size == y.size:
        p = x.size
        if z.size <= p - 2 and i == spec.delta[c1]:
            return True
        if z.size == p - 1:
            if k2 >= l2 and i == spec.delta[c1]:
                return True
            if k2 < l2 and _run(k1, l1) - _run(k2, l2) and i == g:
                return True
    return False


def _bad_at(spec: CapparelliSpec, parts: Sequence[ColouredPart], j: int) -> bool:
    """Any pattern whose window ends at index j (except the end-of-partition rule)."""
    if j >= 1 and _bad_pair(spec, parts[j - 1], parts[j], j == 1):
        return True
    return j >= 2 and _bad_triple(spec, parts[j - 2], parts[j - 1], parts[j])


def capparelli_ok(n: int, spec: CapparelliSpec, parts: Sequence[ColouredPart]) -> bool:
    spec.validate()
    parts = [ColouredPart(s, Colour(*c)) for s, c in parts]
    if any(p.size < 1 or p.colour == Colour(0, 0) for p in parts):
        return False
    for x, y in zip(parts, parts[1:]):
        if x.size - y.size < min_gap(n, x.colour, y.colour):
            return False
    if any(_bad_at(spec, parts, j) for j in range(len(parts))):
        return False
    return not (len(parts) >= 2 and _bad_end(spec, parts[-2], parts[-1]))


def _walk(n: int, spec: CapparelliSpec, N: int) -> Iterator[list[ColouredPart]]:
    spec.validate()
    cs = [c for c in colours(n) if c != Colour(0, 0)]
    gap = {(c1, c2): min_gap(n, c1, c2) for c1 in cs for c2 in cs}
    chain: list[ColouredPart] = []

    def grow(total: int) -> Iterator[list[ColouredPart]]:
        if len(chain) < 2 or not _bad_end(spec, chain[-2], chain[-1]):
            yield chain
        room = N - total
        for c in cs:
            hi = room if not chain else min(room, chain[-1].size - gap[(chain[-1].colour, c)])
            for s in range(1, hi + 1):
                chain.append(ColouredPart(s, c))
                if not _bad_at(spec, chain, len(chain) - 1):
                    yield from grow(total + s)
                chain.pop()

    yield from grow(0)


def _key(parts: Sequence[ColouredPart]):
    return (sum(p.size for p in parts), tuple(p.colour for p in parts), tuple(p.size for p in parts))


def enumerate_capparelli(n: int, spec: CapparelliSpec, N: int) -> list[tuple[ColouredPart, ...]]:
    """Generalised Capparelli partitions of weight <= N, in canonical order."""
    return sorted((tuple(c) for c in _walk(n, spec, N)), key=_key)


def gf_capparelli(n: int, spec: CapparelliSpec, N: int) -> Series:
    acc: dict = defaultdict(int)
    for chain in _walk(n, spec, N):
        acc[(sum(p.size for p in chain), *colour_exponents(n, (p.colour for p in chain)), 0)] += 1
    return Series(n, N, acc)
