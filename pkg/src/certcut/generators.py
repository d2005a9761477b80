"""Test-instance factories: random regular graphs via the configuration
model, Erdos-Renyi graphs, short-cycle destruction, and the standard dense
clique-free families. Every generator is deterministic given its seed: the
same spec always produces the same edge list, byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._rng import make_rng
from .errors import BudgetExceeded, InfeasibleDegree, InfeasibleSpec, RetryLimitExceeded
from .graphcore import Graph


def random_regular(n: int, d: int, seed: int = 0, max_restarts: int = 1000) -> Graph:
    """Simple d-regular graph from the stub-pairing model.

    Pairings producing self-loops or multi-edges are rejected wholesale and
    the pairing restarts (up to ``max_restarts`` times). The acceptance rate
    decays like exp(-(d-1)/2 - (d-1)^2/4), so degrees beyond ~5 need a much
    larger restart budget.
    """
    if d < 0 or (n * d) % 2 != 0 or (d >= n and n > 0):
        raise InfeasibleDegree(f"no simple {d}-regular graph on {n} vertices")
    rng = make_rng(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_restarts):
        perm = rng.permutation(len(stubs)) if stubs else []
        edges = set()
        ok = True
        for k in range(0, len(stubs), 2):
            u, v = stubs[int(perm[k])], stubs[int(perm[k + 1])]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, sorted(edges))
    raise RetryLimitExceeded(f"no simple pairing found in {max_restarts} restarts")


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi graph: each pair appears independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = make_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def _find_cycle(adj: dict, n: int, r: int, steps: list, budget: int):
    # first r-cycle in lexicographic path order: the start vertex is the
    # cycle's minimum, interior vertices are explored in increasing id order
    for start in range(n):
        path = [start]
        on_path = {start}

        def dfs():
            steps[0] += 1
            if steps[0] > budget:
                raise BudgetExceeded(f"cycle search exceeded {budget} steps")
            v = path[-1]
            if len(path) == r:
                return start in adj[v]
            for w in sorted(adj[v]):
                if w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if dfs():
                        return True
                    path.pop()
                    on_path.remove(w)
            return False

        if len(adj[start]) >= 2 and dfs():
            return path
    return None


def make_cr_free(g: Graph, r: int, budget: int = 10**8) -> Graph:
    """Delete one edge per detected r-cycle until none of length exactly r
    remains. The deleted edge is the lexicographically smallest of the found
    cycle, so the output is deterministic; the final rescan certifies it.
    """
    if r < 3:
        raise ValueError("cycle length r must be >= 3")
    adj = {v: set(g.adjacency[v]) for v in range(g.n)}
    steps = [0]
    while True:
        cycle = _find_cycle(adj, g.n, r, steps, budget)
        if cycle is None:
            break
        cycle_edges = [
            tuple(sorted((cycle[i], cycle[(i + 1) % r]))) for i in range(r)
        ]
        u, v = min(cycle_edges)
        adj[u].discard(v)
        adj[v].discard(u)
    edges = sorted((u, v) for u in adj for v in adj[u] if u < v)
    return Graph.from_edges(g.n, edges)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InfeasibleSpec("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def random_bipartite(a: int, b: int, p: float, seed: int = 0) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = make_rng(seed)
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    if not pairs:
        return Graph.from_edges(a + b, [])
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(a + b, [e for e, k in zip(pairs, keep) if k])


def turan(n: int, classes: int) -> Graph:
    """Complete multipartite graph with balanced classes (v's class is v mod
    classes); the canonical dense K_(classes+1)-free instance."""
    if classes < 1:
        raise InfeasibleSpec("need at least one class")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if u % classes != v % classes
    ]
    return Graph.from_edges(n, edges)


def blowup(base: Graph, k: int) -> Graph:
    """Replace every base vertex with an independent k-set, every base edge
    with the complete bipartite join of the two sets."""
    if k < 1:
        raise InfeasibleSpec("blowup factor must be >= 1")
    edges = []
    for u, v in base.edges:
        for i in range(k):
            for j in range(k):
                edges.append((u * k + i, v * k + j))
    return Graph.from_edges(base.n * k, edges)


def disjoint_cliques(count: int, size: int) -> Graph:
    edges = []
    for c in range(count):
        base = c * size
        edges.extend(
            (base + u, base + v) for u in range(size) for v in range(u + 1, size)
        )
    return Graph.from_edges(count * size, edges)


@dataclass(frozen=True)
class GenSpec:
    """Declarative generator spec: model name, parameters, seed."""

    model: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def family(spec: GenSpec) -> Graph:
    """Dispatch a GenSpec to its factory; unknown models or bad parameters
    raise InfeasibleSpec."""
    p = dict(spec.params)
    try:
        if spec.model == "regular":
            return random_regular(p.pop("n"), p.pop("d"), spec.seed, **p)
        if spec.model == "gnp":
            return gnp(p.pop("n"), p.pop("p"), spec.seed)
        if spec.model == "bipartite":
            prob = p.pop("p", 1.0)
            a, b = p.pop("a"), p.pop("b")
            if prob >= 1.0:
                return complete_bipartite(a, b)
            return random_bipartite(a, b, prob, spec.seed)
        if spec.model == "turan":
            return turan(p.pop("n"), p.pop("classes"))
        if spec.model == "blowup":
            return blowup(cycle(p.pop("cycle")), p.pop("k"))
        if spec.model == "disjoint-cliques":
            return disjoint_cliques(p.pop("count"), p.pop("size"))
    except KeyError as missing:
        raise InfeasibleSpec(f"model {spec.model!r} is missing parameter {missing}") from None
    except (ValueError, TypeError) as bad:
        raise InfeasibleSpec(f"model {spec.model!r}: {bad}") from None
    raise InfeasibleSpec(f"unknown model {spec.model!r}")
