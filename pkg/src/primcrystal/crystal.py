"""Crystal of the vector representation of A_{n-1}^(1), its dual, and tensor products.

Vertices are plain integer tuples:

* ``v_j`` of the vector crystal is the integer ``j`` (residue mod n),
* ``v_j^vee`` of the dual crystal is also ``j``,
* a vertex ``v_l (x) v_k^vee`` of the box crystal is ``BoxVertex(l, k)``,
* a vertex of ``box (x) box`` is ``PairVertex(left, right)``.

Weights are classical: integer vectors of coefficients on Lambda_0..Lambda_{n-1}.
``None`` stands for the absent value 0 of a Kashiwara operator.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, NamedTuple

from .errors import IndexOutOfRange, UnsupportedRank

Weight = tuple[int, ...]


class BoxVertex(NamedTuple):
    """``v_l (x) v_k^vee``; its partition colour is ``a_k b_l``."""

    l: int
    k: int

    def label(self) -> str:
        return f"{self.l},{self.k}"


class PairVertex(NamedTuple):
    left: BoxVertex
    right: BoxVertex

    def label(self) -> str:
        return f"{self.left.label()}|{self.right.label()}"


def unit(n: int, i: int, c: int = 1) -> Weight:
    w = [0] * n
    w[i % n] += c
    return tuple(w)


def wadd(*ws: Weight) -> Weight:
    return tuple(map(sum, zip(*ws)))


def wneg(w: Weight) -> Weight:
    return tuple(-a for a in w)


def level(w: Weight) -> int:
    """Pairing with the canonical central element c = h_0 + ... + h_{n-1}."""
    return sum(w)


def cartan_matrix(n: int) -> list[list[int]]:
    """Generalised Cartan matrix of A_{n-1}^(1); n = 2 gives [[2,-2],[-2,2]]."""
    if n < 2:
        raise UnsupportedRank("the affine Cartan matrix needs n >= 2")
    return [[2 * (i == j) - ((i - j) % n == 1) - ((j - i) % n == 1) for j in range(n)]
            for i in range(n)]


def simple_root(n: int, j: int) -> Weight:
    """Classical projection of alpha_j = sum_i a_{ij} Lambda_i."""
    a = cartan_matrix(n)
    return tuple(a[i][j] for i in range(n))


def _check_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"label {i} outside 0..{n - 1}")


# --- vector representation -------------------------------------------------

def vec_f(n: int, i: int, v: int) -> int | None:
    _check_index(n, i)
    return i if v == (i - 1) % n else None


def vec_e(n: int, i: int, v: int) -> int | None:
    _check_index(n, i)
    return (i - 1) % n if v == i else None


def vec_phi(n: int, i: int, v: int) -> int:
    _check_index(n, i)
    return int(v == (i - 1) % n)


def vec_eps(n: int, i: int, v: int) -> int:
    _check_index(n, i)
    return int(v == i)


def vec_wt(n: int, v: int) -> Weight:
    return wadd(unit(n, v + 1), unit(n, v, -1))


# --- dual: all arrows reversed ---------------------------------------------

def dual_f(n: int, i: int, v: int) -> int | None:
    return vec_e(n, i, v)


def dual_e(n: int, i: int, v: int) -> int | None:
    return vec_f(n, i, v)


def dual_phi(n: int, i: int, v: int) -> int:
    return vec_eps(n, i, v)


def dual_eps(n: int, i: int, v: int) -> int:
    return vec_phi(n, i, v)


def dual_wt(n: int, v: int) -> Weight:
    return wneg(vec_wt(n, v))


# --- generic crystals ------------------------------------------------------

class Crystal:
    """A finite crystal given by its Kashiwara data."""

    n: int

    def elements(self) -> Iterable:
        raise NotImplementedError

    def f(self, i, b):
        raise NotImplementedError

    def e(self, i, b):
        raise NotImplementedError

    def phi(self, i, b) -> int:
        raise NotImplementedError

    def eps(self, i, b) -> int:
        raise NotImplementedError

    def wt(self, b) -> Weight:
        raise NotImplementedError

    def phi_weight(self, b) -> Weight:
        return tuple(self.phi(i, b) for i in range(self.n))

    def eps_weight(self, b) -> Weight:
        return tuple(self.eps(i, b) for i in range(self.n))


@dataclass(frozen=True)
class VectorCrystal(Crystal):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise UnsupportedRank("crystal-graph operations need n >= 2")

    def elements(self):
        return range(self.n)

    def f(self, i, b):
        return vec_f(self.n, i, b)

    def e(self, i, b):
        return vec_e(self.n, i, b)

    def phi(self, i, b):
        return vec_phi(self.n, i, b)

    def eps(self, i, b):
        return vec_eps(self.n, i, b)

    def wt(self, b):
        return vec_wt(self.n, b)


@dataclass(frozen=True)
class DualCrystal(Crystal):
    """Dual of any crystal: reverse arrows, swap phi and eps, negate weights."""

    base: Crystal
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.base.n)

    def elements(self):
        return self.base.elements()

    def f(self, i, b):
        return self.base.e(i, b)

    def e(self, i, b):
        return self.base.f(i, b)

    def phi(self, i, b):
        return self.base.eps(i, b)

    def eps(self, i, b):
        return self.base.phi(i, b)

    def wt(self, b):
        return wneg(self.base.wt(b))


def _tuple2(b1, b2) -> tuple:
    return (b1, b2)


@dataclass(frozen=True)
class TensorCrystal(Crystal):
    """``c1 (x) c2`` with the Kashiwara tensor rule; elements are pairs."""

    c1: Crystal
    c2: Crystal
    pair: Callable = _tuple2
    n: int = field(init=False)

    def __post_init__(self):
        if self.c1.n != self.c2.n:
            raise ValueError("tensor factors must share n")
        object.__setattr__(self, "n", self.c1.n)

    def elements(self):
        return [self.pair(b1, b2) for b1 in self.c1.elements() for b2 in self.c2.elements()]

    def f(self, i, b):
        b1, b2 = b
        if self.c1.phi(i, b1) > self.c2.eps(i, b2):
            x = self.c1.f(i, b1)
            return None if x is None else self.pair(x, b2)
        x = self.c2.f(i, b2)
        return None if x is None else self.pair(b1, x)

    def e(self, i, b):
        b1, b2 = b
        if self.c1.phi(i, b1) >= self.c2.eps(i, b2):
            x = self.c1.e(i, b1)
            return None if x is None else self.pair(x, b2)
        x = self.c2.e(i, b2)
        return None if x is None else self.pair(b1, x)

    def phi(self, i, b):
        b1, b2 = b
        p1, e2, p2 = self.c1.phi(i, b1), self.c2.eps(i, b2), self.c2.phi(i, b2)
        return max(p2, p1 + p2 - e2)

    def eps(self, i, b):
        b1, b2 = b
        e1, p1, e2 = self.c1.eps(i, b1), self.c1.phi(i, b1), self.c2.eps(i, b2)
        return max(e1, e1 + e2 - p1)

    def wt(self, b):
        return wadd(self.c1.wt(b[0]), self.c2.wt(b[1]))


def _pair_of_boxes(b1, b2) -> PairVertex:
    return PairVertex(BoxVertex(*b1), BoxVertex(*b2))


def box_crystal(n: int) -> TensorCrystal:
    """``B (x) B^vee`` with elements ``BoxVertex(l, k)``."""
    v = VectorCrystal(n)
    return TensorCrystal(v, DualCrystal(v), BoxVertex)


def pair_crystal(n: int) -> TensorCrystal:
    """``(B (x) B^vee) (x) (B (x) B^vee)`` with elements ``PairVertex``."""
    bb = box_crystal(n)
    return TensorCrystal(bb, bb, _pair_of_boxes)


def tensor_f(i, b, c1: Crystal, c2: Crystal):
    return TensorCrystal(c1, c2).f(i, b)


def tensor_e(i, b, c1: Crystal, c2: Crystal):
    return TensorCrystal(c1, c2).e(i, b)


def tensor_phi(i, b, c1: Crystal, c2: Crystal) -> int:
    return TensorCrystal(c1, c2).phi(i, b)


def tensor_eps(i, b, c1: Crystal, c2: Crystal) -> int:
    return TensorCrystal(c1, c2).eps(i, b)


def tensor_wt(b, c1: Crystal, c2: Crystal) -> Weight:
    return TensorCrystal(c1, c2).wt(b)


# --- closed forms on the box crystal ---------------------------------------

def box_data(n: int, b: BoxVertex) -> tuple[Weight, Weight, Weight]:
    """(wt, phi, eps) of ``v_l (x) v_k^vee`` from the closed forms (n >= 3)."""
    if n < 3:
        raise UnsupportedRank("closed forms assume n >= 3; use box_crystal(n) instead")
    l, k = b.l % n, b.k % n
    wt = wadd(unit(n, l + 1), unit(n, l, -1), unit(n, k), unit(n, k + 1, -1))
    if l == k:
        phi = eps = unit(n, l)
    elif (k - l) % n == 1:
        # v_{i-1} (x) v_i^vee with i = k
        phi = unit(n, k, 2)
        eps = wadd(unit(n, k - 1), unit(n, k + 1))
    elif (l - k) % n == 1:
        # v_i (x) v_{i-1}^vee with i = l
        eps = unit(n, l, 2)
        phi = wadd(unit(n, l - 1), unit(n, l + 1))
    else:
        phi = wadd(unit(n, l + 1), unit(n, k))
        eps = wadd(unit(n, k + 1), unit(n, l))
    return wt, phi, eps


# --- pair graph ------------------------------------------------------------

@dataclass(frozen=True)
class PairGraph:
    n: int
    vertices: tuple[PairVertex, ...]
    edges: tuple[tuple[PairVertex, PairVertex, int], ...]

    @cached_property
    def connected(self) -> bool:
        adj: dict = {v: [] for v in self.vertices}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {self.vertices[0]}
        todo = deque(seen)
        while todo:
            for w in adj[todo.popleft()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def to_dot(self) -> str:
        lines = [f"digraph pair_graph_n{self.n} {{"]
        for v in self.vertices:
            lines.append(f'  "{v.label()}";')
        for a, b, i in self.edges:
            lines.append(f'  "{a.label()}" -> "{b.label()}" [label={i}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [v.label() for v in self.vertices],
            "edges": [{"source": a.label(), "target": b.label(), "label": i}
                      for a, b, i in self.edges],
            "connected": self.connected,
        }


def pair_vertices(n: int) -> list[PairVertex]:
    boxes = [BoxVertex(l, k) for l in range(n) for k in range(n)]
    return [PairVertex(a, b) for a in boxes for b in boxes]


def pair_graph(n: int) -> PairGraph:
    """All f_i-edges of the pair crystal, in deterministic order."""
    c = pair_crystal(n)
    verts = pair_vertices(n)
    edges = []
    for v in verts:
        for i in range(n):
            w = c.f(i, v)
            if w is not None:
                edges.append((v, w, i))
    return PairGraph(n, tuple(verts), tuple(edges))
