"""Independent reference computations used as test oracles.

Nothing here imports the package's arithmetic; polynomials are plain dicts
from exponent tuples to integers and everything is multiplied out naively.
"""

from collections import defaultdict
from itertools import product


def poly_mul(a: dict, b: dict, trunc: int | None = None) -> dict:
    out = defaultdict(int)
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            if trunc is None or k[0] <= trunc:
                out[k] += ca * cb
    return {k: c for k, c in out.items() if c}


def poly_add(a: dict, b: dict) -> dict:
    out = defaultdict(int, a)
    for k, c in b.items():
        out[k] += c
    return {k: c for k, c in out.items() if c}


def one(width: int) -> dict:
    return {(0,) * width: 1}


def factor(width: int, key: tuple, coef: int) -> dict:
    """``1 + coef * monomial``."""
    return poly_add(one(width), {key: coef})


def partitions(m: int, largest: int | None = None):
    """All partitions of m as non-increasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for p in range(min(m, largest), 0, -1):
        for rest in partitions(m - p, p):
            yield (p,) + rest


def partition_counts(N: int) -> list[int]:
    return [sum(1 for _ in partitions(m)) for m in range(N + 1)]


def pentagonal(N: int) -> list[int]:
    """Coefficients of (q;q)_inf from Euler's pentagonal number theorem."""
    c = [0] * (N + 1)
    k = 0
    while True:
        hit = False
        for j in ((k, -k) if k else (0,)):
            e = j * (3 * j - 1) // 2
            if e <= N:
                c[e] += -1 if j % 2 else 1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return c


def delta_closed(k: int, l: int, k2: int, l2: int) -> int:
    """Minimal difference between a part coloured a_k b_l and a following part a_k2 b_l2."""
    chi = lambda p: 1 if p else 0
    return chi(k >= k2) - chi(k == l == k2) + chi(l <= l2) - chi(l == k2 == l2)


def brute_primc(n: int, N: int, allowed=None):
    """Every coloured partition of weight <= N obeying the minimal differences, by filtering.

    Colours are pairs (k, l); parts are (size, (k, l)).  Sequences are grown
    without any pruning except the weight bound, then filtered.
    """
    cols = [(k, l) for k in range(n) for l in range(n)]
    if allowed is not None:
        cols = [c for c in cols if allowed(c)]
    out = []

    def grow(seq, total):
        if all(x[0] - y[0] >= delta_closed(*x[1], *y[1]) for x, y in zip(seq, seq[1:])):
            out.append(tuple(seq))
        else:
            return
        for s in range(1, N - total + 1):
            for c in cols:
                seq.append((s, c))
                grow(seq, total + s)
                seq.pop()

    grow([], 0)
    return out


def colour_monomial(n: int, seq) -> tuple:
    e = [0] * n
    for _, (k, l) in seq:
        e[l] += 1
        e[k] -= 1
    return tuple(e)


def gf_dict(n: int, seqs) -> dict:
    out = defaultdict(int)
    for seq in seqs:
        out[(sum(p for p, _ in seq), *colour_monomial(n, seq), 0)] += 1
    return dict(out)


def all_vectors(n: int, lo: int, hi: int):
    return product(range(lo, hi + 1), repeat=n)


def brute_grounded(n: int, level: int, N: int, minimal: bool):
    """Grounded partitions of weight <= N, grown from the first part downwards.

    Returns the non-ground parts only.  Relations use the closed-form minimal
    difference; the ground part 0 at colour (level, level) is checked last.
    Raises if a sequence reaches the length cap, so a result is never silently
    incomplete.
    """
    cols = [(k, l) for k in range(n) for l in range(n)]
    g = (0, (level, level))
    cap = N + n * n + 2
    out = []

    def related(x, y):
        d = delta_closed(*x[1], *y[1])
        return x[0] - y[0] == d if minimal else x[0] - y[0] >= d

    def grow(seq, total):
        if not seq or (seq[-1] != g and related(seq[-1], g)):
            out.append(tuple(seq))
        if len(seq) == cap:
            raise RuntimeError("length cap reached")
        for s in range(0, N - total + 1):
            for c in cols:
                p = (s, c)
                if seq and not related(seq[-1], p):
                    continue
                # a colour repeated in a zero-size block would give infinitely
                # many partitions of one weight, so the block has distinct colours
                if s == 0 and p in seq:
                    continue
                seq.append(p)
                grow(seq, total + s)
                seq.pop()

    grow([], 0)
    return out


def _span(lo: int, hi: int) -> set:
    return set(range(lo + 1, hi + 1))


def capparelli_params(n: int):
    """Every (delta, gamma) pair allowed by the two conditions, keyed by (k, l) tuples."""
    bound = [(k, l) for k in range(n) for l in range(n) if k != l]
    delta_choices = [[(c, v) for v in range(min(c) + 1, max(c) + 1)] for c in bound]
    gamma_choices = []
    for c1 in bound:
        for c2 in bound:
            (k1, l1), (k2, l2) = c1, c2
            if max(k1, l2) < min(k2, l1):
                vals = _span(max(k1, l2), min(k2, l1))
            elif k1 > l1 and k2 > l2 and _span(l2, k2) - _span(l1, k1):
                vals = _span(l2, k2) - _span(l1, k1)
            elif k1 < l1 and k2 < l2 and _span(k1, l1) - _span(k2, l2):
                vals = _span(k1, l1) - _span(k2, l2)
            else:
                continue
            gamma_choices.append([((c1, c2), v) for v in sorted(vals)])
    for d in product(*delta_choices):
        for g in product(*gamma_choices):
            yield dict(d), dict(g)


def contains_capparelli_pattern(seq, delta: dict, gamma: dict) -> bool:
    """Literal scan for the forbidden patterns; parts are (size, (k, l))."""
    free = lambda c: c[0] == c[1]
    m = len(seq)
    for j in range(m - 1):
        (p, c), (p2, c2) = seq[j], seq[j + 1]
        if free(c) and c == c2 and p == p2 and c[0] >= 1:
            return True
        # start of the partition, u infinite
        if j == 0 and p == p2 and c2[0] > c2[1] and c == (delta[c2],) * 2:
            return True
        # end of the partition, u infinite
        if j == m - 2 and p == p2 and c[0] < c[1] and c2 == (delta[c],) * 2:
            return True
    for j in range(m - 2):
        (x, (k1, l1)), (y, cy), (z, (k2, l2)) = seq[j:j + 3]
        if not free(cy):
            continue
        i = cy[0]
        g = gamma.get(((k1, l1), (k2, l2)))
        if x == y == z and max(k1, l2) < min(k2, l1) and i == g:
            return True
        if k2 > l2 and y == z:
            if x - y >= 2 and i == delta[(k2, l2)]:
                return True
            if x - y == 1 and k1 <= l1 and i == delta[(k2, l2)]:
                return True
            if x - y == 1 and k1 > l1 and _span(l2, k2) - _span(l1, k1) and i == g:
                return True
        if k1 < l1 and x == y:
            if y - z >= 2 and i == delta[(k1, l1)]:
                return True
            if y - z == 1 and k2 >= l2 and i == delta[(k1, l1)]:
                return True
            if y - z == 1 and k2 < l2 and _span(k1, l1) - _span(k2, l2) and i == g:
                return True
    return False


def brute_capparelli(n: int, N: int, delta: dict, gamma: dict):
    seqs = brute_primc(n, N, allowed=lambda c: c != (0, 0))
    return [s for s in seqs if not contains_capparelli_pattern(s, delta, gamma)]
