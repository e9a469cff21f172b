"""Generalised Primc partitions, grounded partitions and the bijections phi and Phi.

A grounded partition is stored with its terminal ``0`` part at the ground
colour ``a_l b_l``.  Consecutive parts ``x, y`` are related when
``x.size - y.size >= H`` (the ``>>`` relation) or ``== H`` (the minimal
relation), where ``H = EnergyTable.between(x.colour, y.colour)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .crystal import BoxVertex, unit, wadd
from .energy import Colour, colours, delta, energy_table, ground
from .errors import BadPath, NotGrounded
from .series import Series


class ColouredPart(NamedTuple):
    size: int
    colour: Colour

    def __str__(self) -> str:
        return f"{self.size}_{self.colour}"

    def to_dict(self) -> dict:
        return {"size": self.size, "colour": str(self.colour)}


def part(size: int, colour: str | Colour) -> ColouredPart:
    if isinstance(colour, str):
        colour = Colour.parse(colour)
    return ColouredPart(size, colour)


def parts_from(spec: Iterable[tuple[int, str]]) -> tuple[ColouredPart, ...]:
    return tuple(part(s, c) for s, c in spec)


def colour_exponents(n: int, cs: Iterable[Colour]) -> tuple[int, ...]:
    """b-exponent vector of a colour sequence; ``a_k b_l`` contributes ``b_l / b_k``."""
    e = [0] * n
    for c in cs:
        e[c.b] += 1
        e[c.a] -= 1
    return tuple(e)


def primc_ok(n: int, parts: Sequence[ColouredPart]) -> bool:
    for x, y in zip(parts, parts[1:]):
        if x.size - y.size < delta(n, x.colour, y.colour):
            return False
    return not parts or parts[-1].size >= 1


@dataclass(frozen=True, order=True)
class GroundedPartition:
    level: int
    parts: tuple[ColouredPart, ...]

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    @property
    def body(self) -> tuple[ColouredPart, ...]:
        """Parts without the terminal ground part."""
        return self.parts[:-1]

    def colour_sequence(self) -> tuple[Colour, ...]:
        return tuple(p.colour for p in self.parts)

    def sort_key(self):
        return (self.weight, tuple(p.colour for p in self.parts), tuple(p.size for p in self.parts))

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.parts)) + ")"

    def to_list(self) -> list[dict]:
        return [p.to_dict() for p in self.parts]


def grounded(level: int, body: Iterable[tuple[int, str]]) -> GroundedPartition:
    """Build a grounded partition from its non-ground parts."""
    g = Colour(level, level)
    return GroundedPartition(level, parts_from(body) + (ColouredPart(0, g),))


def is_grounded(n: int, pi: GroundedPartition, minimal: bool) -> bool:
    table = energy_table(n)
    g = Colour(pi.level, pi.level)
    ps = pi.parts
    if not ps or ps[-1] != ColouredPart(0, g):
        return False
    if len(ps) > 1 and ps[-2] == ColouredPart(0, g):
        return False
    for x, y in zip(ps, ps[1:]):
        h = table.between(x.colour, y.colour)
        d = x.size - y.size
        if (d != h) if minimal else (d < h):
            return False
    return True


def enumerate_grounded(n: int, level: int, N: int, minimal: bool) -> list[GroundedPartition]:
    """All grounded partitions of weight <= N, in canonical order."""
    table = energy_table(n)
    cs = colours(n)
    g = Colour(level, level)
    out: list[GroundedPartition] = []
    zero_cap = n * n + 1

    def grow(chain: list[ColouredPart], total: int, zeros: int) -> None:
        out.append(GroundedPartition(level, tuple(reversed(chain))))
        top = chain[-1]
        for c in cs:
            h = table.between(c, top.colour)
            lo = top.size + h
            hi = lo if minimal else N - total
            for s in range(lo, min(hi, N - total) + 1):
                if len(chain) == 1 and s == 0 and c == g:
                    continue
                z = zeros + (s == 0)
                if z > zero_cap:
                    raise RuntimeError("unbounded chain of size-0 parts")
                chain.append(ColouredPart(s, c))
                grow(chain, total + s, z)
                chain.pop()

    grow([ColouredPart(0, g)], 0, 0)
    out.sort(key=GroundedPartition.sort_key)
    return out


def gf_from_partitions(n: int, N: int, pis: Iterable[GroundedPartition]) -> Series:
    acc: dict = defaultdict(int)
    for pi in pis:
        acc[(pi.weight, *colour_exponents(n, pi.colour_sequence()), 0)] += 1
    return Series(n, N, acc)


def gf_grounded(n: int, level: int, N: int, minimal: bool = False) -> Series:
    """Generating function of grounded partitions, weight q^|pi| times C(pi).

    Computed by a transfer recursion over (colour, size) of the lowest
    non-ground part; agrees with summing :func:`enumerate_grounded`.
    """
    table = energy_table(n)
    cs = colours(n)
    g = Colour(level, level)
    expo = {c: colour_exponents(n, [c]) for c in cs}
    H = {(c1, c2): table.between(c1, c2) for c1 in cs for c2 in cs}
    zero = Series.zero(n, N)
    one = Series.one(n, N)
    # A[c][p]: chains from the first part down to a part p_c, inclusive.
    # suffix[c][p] = sum_{p' >= p} A[c][p'].
    A = {c: [zero] * (N + 2) for c in cs}
    suffix = {c: [zero] * (N + 2) for c in cs}
    divergent: set = set()

    for p in range(N, -1, -1):
        fixed = {}
        for c in cs:
            acc = one
            for c1 in cs:
                h = H[(c1, c)]
                t = p + h
                if h == 0 or t > N:
                    continue
                acc = acc + (A[c1][t] if minimal else suffix[c1][t])
            if not minimal:
                # partners at the same size are handled by the fixed point below;
                # strictly larger ones come from the suffix above this level
                for c1 in cs:
                    if H[(c1, c)] == 0 and p + 1 <= N:
                        acc = acc + suffix[c1][p + 1]
            fixed[c] = acc
        level_vals = {c: zero for c in cs}
        changed = set(cs)
        for _ in range(N + n * n + 3):
            new = {}
            for c in cs:
                acc = fixed[c]
                for c1 in cs:
                    if H[(c1, c)] == 0:
                        acc = acc + level_vals[c1]
                new[c] = acc.shift(p, expo[c])
            changed = {c for c in cs if new[c] != level_vals[c]}
            level_vals = new
            if not changed:
                break
        # zero-size cycles never reach the ground; fail only if one is used
        divergent |= {(c, p) for c in changed}
        for c in cs:
            A[c][p] = level_vals[c]
            suffix[c][p] = level_vals[c] + suffix[c][p + 1]

    total = one
    for c in cs:
        h = H[(c, g)]
        if (c, 0) in divergent and h == 0 and c != g:
            raise RuntimeError(f"unbounded chain of size-0 parts above {c}")
        if minimal:
            if h <= N and not (h == 0 and c == g):
                total = total + A[c][h]
        else:
            lo = 1 if c == g and h == 0 else h
            if lo <= N:
                total = total + suffix[c][lo]
    return total


# --- phi: paths <-> minimal grounded partitions ------------------------------

def path_to_partition(n: int, level: int, path: Sequence[BoxVertex]) -> GroundedPartition:
    """Grounded partition of the path ``... g (x) p_{s-1} (x) ... (x) p_0``."""
    table = energy_table(n)
    g = ground(level)
    path = [BoxVertex(*p) for p in path]
    if path and path[-1] == g:
        raise BadPath("the last non-ground element of a path cannot be the ground")
    cols = [Colour(v.k, v.l) for v in path] + [Colour(level, level)]
    parts = [ColouredPart(0, cols[-1])]
    size = 0
    for k in range(len(path) - 1, -1, -1):
        size += table.between(cols[k], cols[k + 1])
        parts.append(ColouredPart(size, cols[k]))
    return GroundedPartition(level, tuple(reversed(parts)))


def partition_to_path(n: int, pi: GroundedPartition) -> list[BoxVertex]:
    if not is_grounded(n, pi, minimal=True):
        raise NotGrounded(f"{pi} is not a minimal grounded partition")
    return [p.colour.vertex() for p in pi.body]


def path_weight(n: int, level: int, path: Sequence[BoxVertex]) -> tuple[tuple[int, ...], int]:
    """Classical weight change and delta-coefficient of a path.

    Returns ``(sum_k wt p_k, sum_k (k+1) H(p_{k+1} (x) p_k))``; the affine weight of
    the path is ``Lambda_level + first - second * delta``.
    """
    from .crystal import box_crystal

    table = energy_table(n)
    g = ground(level)
    ext = [BoxVertex(*p) for p in path] + [g]
    if n == 1:
        wt = (0,)
    else:
        bc = box_crystal(n)
        wt = wadd((0,) * n, *(bc.wt(p) for p in ext[:-1])) if path else (0,) * n
    energy = sum((k + 1) * table.between(Colour.of(ext[k]), Colour.of(ext[k + 1]))
                 for k in range(len(path)))
    return wt, energy


def exponents_to_weight(n: int, b: Sequence[int]) -> tuple[int, ...]:
    """Classical weight of ``prod b_i^{e_i}`` with ``b_i = e^{Lambda_{i+1} - Lambda_i}``."""
    w = (0,) * n
    for i, e in enumerate(b):
        if e:
            w = wadd(w, unit(n, i + 1, e), unit(n, i, -e))
    return w


# --- Phi: P^>> <-> P^minimal x ordinary partitions ---------------------------

def split_phi(n: int, pi: GroundedPartition) -> tuple[GroundedPartition, tuple[int, ...]]:
    if not is_grounded(n, pi, minimal=False):
        raise NotGrounded(f"{pi} is not a grounded partition")
    g = ground(pi.level)
    body = pi.body
    s = len(body)
    path = [p.colour.vertex() for p in body]
    r = 0
    for k in range(s, 0, -1):
        if path[k - 1] != g:
            r = k
            break
    mu = path_to_partition(n, pi.level, path[:r])
    sizes = [p.size for p in body]
    if r < s:
        nu = [sizes[k] - mu.parts[k].size for k in range(r)] + sizes[r:]
    else:
        diff = [sizes[k] - mu.parts[k].size for k in range(s)] + [0]
        t = next(k for k, d in enumerate(diff) if d == 0)
        nu = diff[:t]
    return mu, tuple(nu)


def merge_phi(n: int, mu: GroundedPartition, nu: Sequence[int]) -> GroundedPartition:
    if not is_grounded(n, mu, minimal=True):
        raise NotGrounded(f"{mu} is not a minimal grounded partition")
    nu = tuple(nu)
    if any(x <= 0 for x in nu) or any(a < b for a, b in zip(nu, nu[1:])):
        raise ValueError(f"{nu} is not an ordinary partition")
    gc = Colour(mu.level, mu.level)
    body = list(mu.body)
    r, t = len(body), len(nu)
    out = []
    for k in range(max(r, t)):
        extra = nu[k] if k < t else 0
        if k < r:
            out.append(ColouredPart(body[k].size + extra, body[k].colour))
        else:
            out.append(ColouredPart(extra, gc))
    return GroundedPartition(mu.level, tuple(out) + (ColouredPart(0, gc),))
