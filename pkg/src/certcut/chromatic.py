"""Coloring-based cuts: constructive Ramsey independent sets, clique-free
colorings with a sublinear class count, the derandomized two-group class
split, and the randomized refinement of a 2-cut into t parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CliqueFound, ImproperColoring, LabelSizeMismatch, TooFewVertices
from .embedding import CutCertificate
from .graphcore import Cut, Graph, cut_value


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring with class ids 0..classes-1, every class nonempty."""

    color: tuple[int, ...]
    classes: int

    def class_members(self, c: int) -> tuple[int, ...]:
        return tuple(v for v, col in enumerate(self.color) if col == c)


@dataclass(frozen=True)
class TPartition:
    """A t-way vertex labeling with its separated-edge count."""

    part: tuple[int, ...]
    value: int


def t_partition_value(g: Graph, part) -> int:
    return sum(1 for u, v in g.edges if part[u] != part[v])


def _ramsey_bound(r: int, s: int) -> int:
    # binomial upper bound for the off-diagonal Ramsey number R(r, s)
    return math.comb(r + s - 2, s - 1)


def _ramsey(g: Graph, verts: list[int], r: int, s: int) -> set[int]:
    if s <= 0:
        return set()
    if len(verts) < _ramsey_bound(r, s):
        raise TooFewVertices(
            f"{len(verts)} vertices cannot certify an independent set of size {s} "
            f"(need {_ramsey_bound(r, s)})"
        )
    vset = set(verts)
    if r == 2:
        for v in verts:
            for w in g.adjacency[v]:
                if w > v and w in vset:
                    raise CliqueFound((v, w))
        return set(verts[:s])
    if s == 1:
        return {verts[0]}
    pivot = max(verts, key=lambda v: (sum(1 for w in g.adjacency[v] if w in vset), -v))
    nbrs = sorted(w for w in g.adjacency[pivot] if w in vset)
    if len(nbrs) >= _ramsey_bound(r - 1, s):
        try:
            return _ramsey(g, nbrs, r - 1, s)
        except CliqueFound as found:
            # a clique inside the pivot's neighborhood extends by the pivot
            raise CliqueFound((*found.witness, pivot)) from None
    nbr_set = set(nbrs)
    non = [v for v in verts if v != pivot and v not in nbr_set]
    return _ramsey(g, non, r, s - 1) | {pivot}


def ramsey_independent_set(g: Graph, r: int, s: int) -> frozenset[int]:
    """Independent set of size >= s in a K_r-free graph by pivot recursion.

    Picks a maximum-degree pivot; if its neighborhood is large enough the
    recursion descends there with r-1, otherwise it finds s-1 vertices in the
    non-neighborhood and adds the pivot. Raises CliqueFound (with a verified
    witness) if an r-clique is discovered, or TooFewVertices when the vertex
    count is below the binomial Ramsey bound.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if s < 0:
        raise ValueError("s must be >= 0")
    return frozenset(_ramsey(g, list(range(g.n)), r, s))


def _grow_maximal(g: Graph, ind: set[int], verts: list[int]) -> set[int]:
    # greedy maximal extension inside verts, lowest id first
    blocked = set()
    for v in ind:
        blocked.update(g.adjacency[v])
    for v in verts:
        if v not in ind and v not in blocked:
            ind.add(v)
            blocked.update(g.adjacency[v])
    return ind


def _floor_root(n: int, k: int) -> int:
    if k == 1:
        return n
    s = max(1, int(round(n ** (1.0 / k))))
    while s**k > n:
        s -= 1
    while (s + 1) ** k <= n:
        s += 1
    return s


def kr_free_coloring(g: Graph, r: int) -> Coloring:
    """Proper coloring of a K_r-free graph with at most 4 n^((r-2)/(r-1)) classes.

    Peels one Ramsey independent set of size floor(n_res^(1/(r-1))) per class
    (grown to a maximal independent set, which only reduces the class count);
    residuals of at most 4^(r-1) vertices are finished by greedy coloring,
    which uses at most that many classes and keeps the bound valid.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    color = [-1] * g.n
    residual = list(range(g.n))
    next_class = 0
    base_threshold = 4 ** (r - 1)
    while residual:
        if len(residual) <= base_threshold:
            top = next_class
            for v in residual:
                used = {color[w] for w in g.adjacency[v] if color[w] >= next_class}
                c = next_class
                while c in used:
                    c += 1
                color[v] = c
                top = max(top, c + 1)
            next_class = top
            residual = []
        else:
            s = _floor_root(len(residual), r - 1)
            ind = _ramsey(g, residual, r, s)
            ind = _grow_maximal(g, set(ind), residual)
            for v in ind:
                color[v] = next_class
            next_class += 1
            residual = [v for v in residual if v not in ind]
    return Coloring(tuple(color), next_class)


def coloring_class_bound(n: int, r: int) -> float:
    """The class-count guarantee 4 n^((r-2)/(r-1)) for K_r-free colorings."""
    return 4.0 * n ** ((r - 2) / (r - 1))


def split_probability(t: int) -> Fraction:
    """Probability a class pair is separated by a random floor/ceil grouping."""
    if t < 2:
        return Fraction(0)
    return Fraction((t // 2) * ((t + 1) // 2), t * (t - 1) // 2)


def coloring_cut(g: Graph, col: Coloring) -> tuple[Cut, CutCertificate]:
    """Derandomized class split into groups of ceil(t/2) and floor(t/2) classes.

    Classes are assigned one at a time (heaviest incident weight first) to
    whichever capacity-feasible group maximizes the exact conditional
    expectation of the final cut, so the result is always at least the random
    split's expectation m * floor(t/2) * ceil(t/2) / C(t,2).
    """
    if len(col.color) != g.n:
        raise ImproperColoring(f"coloring covers {len(col.color)} of {g.n} vertices")
    for u, v in g.edges:
        if col.color[u] == col.color[v]:
            raise ImproperColoring(f"edge ({u}, {v}) is monochromatic")
    t = col.classes
    if t <= 1:
        cut = cut_value(g, [0] * g.n)
        return cut, CutCertificate(0.0, None, "coloring_bound", 0.0)

    weights = [[0] * t for _ in range(t)]
    for u, v in g.edges:
        cu, cv = col.color[u], col.color[v]
        weights[cu][cv] += 1
        weights[cv][cu] += 1
    cap_a, cap_b = (t + 1) // 2, t // 2
    assign: list[int | None] = [None] * t
    # running aggregates: weight between the two assigned groups, each
    # unassigned class's weight to either group, and weight among unassigned
    w_ab = 0
    w_to_a = [0] * t
    w_to_b = [0] * t
    w_free = sum(weights[x][y] for x in range(t) for y in range(x + 1, t))
    a_rem, b_rem = cap_a, cap_b

    def expectation_after(c: int, grp: int) -> Fraction:
        a2 = a_rem - (1 if grp == 0 else 0)
        b2 = b_rem - (1 if grp == 1 else 0)
        free = a2 + b2
        fixed = w_ab + (w_to_b[c] if grp == 0 else w_to_a[c])
        cross_c = 0
        mixed = 0
        for y in range(t):
            if assign[y] is None and y != c:
                cross_c += weights[c][y]
                wa = w_to_a[y] + (weights[c][y] if grp == 0 else 0)
                wb = w_to_b[y] + (weights[c][y] if grp == 1 else 0)
                mixed += wa * b2 + wb * a2
        total = Fraction(fixed)
        if free:
            total += Fraction(mixed, free)
        if free >= 2:
            total += (w_free - cross_c) * Fraction(2 * a2 * b2, free * (free - 1))
        return total

    order = sorted(range(t), key=lambda c: (-sum(weights[c]), c))
    for c in order:
        options = []
        if a_rem:
            options.append((expectation_after(c, 0), 0))
        if b_rem:
            options.append((expectation_after(c, 1), 1))
        grp = max(options, key=lambda o: (o[0], -o[1]))[1]
        assign[c] = grp
        if grp == 0:
            w_ab += w_to_b[c]
            a_rem -= 1
        else:
            w_ab += w_to_a[c]
            b_rem -= 1
        for y in range(t):
            if assign[y] is None:
                w_free -= weights[c][y]
                if grp == 0:
                    w_to_a[y] += weights[c][y]
                else:
                    w_to_b[y] += weights[c][y]
    side = [assign[col.color[v]] for v in range(g.n)]
    cut = cut_value(g, side)
    cert = float(g.m * split_probability(t))
    return cut, CutCertificate(cert, None, "coloring_bound", cert)


def t_cut_expected_value(m: int, base_value: int, t: int) -> float:
    """Exact expectation of the random t-way refinement of a 2-cut.

    With c cut and i = m - c uncut base edges: even t = 2s gives m - i/s;
    odd t = 2s+1 gives m - (c + (4s+1) i) / t^2.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    c = base_value
    i = m - c
    s, odd = divmod(t, 2)
    if odd:
        return m - (c + (4 * s + 1) * i) / (t * t)
    return m - i / s


def max_t_cut(
    g: Graph,
    base: Cut,
    t: int,
    rng,
    repeats: int = 32,
) -> tuple[TPartition, CutCertificate]:
    """Refine a 2-cut into t parts by random splitting; best of ``repeats``.

    Even t = 2s scatters each side uniformly over its own s parts. Odd
    t = 2s+1 sends side-A vertices to each of parts 0..s-1 with probability
    2/(2s+1) and to the shared part 2s with probability 1/(2s+1) (side B
    symmetrically on parts s..2s-1), using exact integer draws. The
    certificate is the exact closed-form expectation; the headline reference
    is ((t-1)/t) m.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if len(base.side) != g.n:
        raise LabelSizeMismatch(f"base cut covers {len(base.side)} of {g.n} vertices")
    s, odd = divmod(t, 2)
    cert = t_cut_expected_value(g.m, base.value, t)
    best_part, best_val = None, -1
    for _ in range(max(1, repeats)):
        part = [0] * g.n
        if odd:
            draws = rng.integers(0, t, size=g.n) if g.n else []
            for v in range(g.n):
                k = int(draws[v])
                if k >= 2 * s:
                    part[v] = 2 * s
                elif base.side[v] == 0:
                    part[v] = k // 2
                else:
                    part[v] = s + k // 2
        else:
            draws = rng.integers(0, s, size=g.n) if g.n else []
            for v in range(g.n):
                part[v] = int(draws[v]) + (0 if base.side[v] == 0 else s)
        val = t_partition_value(g, part)
        if val > best_val:
            best_part, best_val = tuple(part), val
    return (
        TPartition(best_part, best_val),
        CutCertificate(cert, None, "tcut_headline", (t - 1) / t * g.m),
    )
