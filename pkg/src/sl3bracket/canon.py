"""Canonical labeling of connected webs.

Colour refinement followed by individualization backtracking; the
canonical form is the lexicographically least sorted edge list over all
leaves of the search tree.  Sources always receive labels ``0..n-1`` and
sinks ``n..2n-1``, so isomorphisms never swap the two parts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .web import Web, WebError, components, validate


@dataclass(frozen=True, order=True)
class CanonicalWeb:
    n: int
    edges: tuple

    @property
    def key(self) -> str:
        return f"{self.n};" + ",".join(f"({s},{t})" for s, t in self.edges)

    def __str__(self):
        return self.key

    def to_web(self) -> Web:
        return Web(range(self.n), range(self.n, 2 * self.n), self.edges)

    @classmethod
    def parse(cls, text: str) -> CanonicalWeb:
        head, _, body = text.strip().partition(";")
        pairs = []
        for tok in body.replace(" ", "").split("),("):
            tok = tok.strip("()")
            if tok:
                s, t = tok.split(",")
                pairs.append((int(s), int(t)))
        return cls(int(head), tuple(sorted(pairs)))


def _refine(colors: list[int], nbrs: list[tuple]) -> list[int]:
    """Equitable refinement; colours stay ordered consistently with the input."""
    ncls = len(set(colors))
    n = len(colors)
    while True:
        sigs = [(colors[v], sorted([colors[x] for x in nbrs[v]])) for v in range(n)]
        keys = sorted(set((c, tuple(s)) for c, s in sigs))
        rank = {k: i for i, k in enumerate(keys)}
        colors = [rank[c, tuple(s)] for c, s in sigs]
        if len(keys) == ncls or len(keys) == n:
            return colors
        ncls = len(keys)


def canonical_form(w: Web) -> CanonicalWeb:
    if w.circles:
        raise WebError("circles", "canonical_form needs a circle-free web")
    validate(w)
    if len(components(w)[0]) != 1:
        raise WebError("connectivity", "canonical_form needs a connected web")

    verts = sorted(w.sources) + sorted(w.sinks)
    index = {v: i for i, v in enumerate(verts)}
    n = len(w.sources)
    nbrs: list[list[int]] = [[] for _ in verts]
    edges = [(index[s], index[t]) for s, t in w.edges]
    for s, t in edges:
        nbrs[s].append(t)
        nbrs[t].append(s)
    nbrs_t = [tuple(x) for x in nbrs]

    size = len(verts)
    best_cert: list = [None]
    best_inv: list = [None]   # label -> vertex at the best leaf
    autos: list[list[int]] = []

    def orbit_rep(path: list[int]) -> list[int]:
        # orbits of the automorphisms found so far that fix ``path`` pointwise
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in autos:
            if all(g[p] == p for p in path):
                for x in range(size):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(size)]

    def search(colors: list[int], path: list[int]) -> None:
        colors = _refine(colors, nbrs_t)
        counts = Counter(colors)
        if len(counts) == size:
            # sources hold the n smallest colours by construction
            cert = tuple(sorted((colors[s], colors[t]) for s, t in edges))
            if best_cert[0] is None or cert < best_cert[0]:
                best_cert[0] = cert
                inv = [0] * size
                for v, c in enumerate(colors):
                    inv[c] = v
                best_inv[0] = inv
            elif cert == best_cert[0]:
                autos.append([best_inv[0][colors[v]] for v in range(size)])
            return
        target = min(c for c, k in counts.items() if k > 1)
        done: set = set()
        for v in range(size):
            if colors[v] != target:
                continue
            if done and autos:
                reps = orbit_rep(path)
                if reps[v] in {reps[u] for u in done}:
                    continue
            done.add(v)
            split = [2 * c + (1 if c == target and u != v else 0)
                     if c >= target else 2 * c for u, c in enumerate(colors)]
            search(split, path + [v])

    search([0] * n + [1] * n, [])
    return CanonicalWeb(n, best_cert[0])


def is_isomorphic(a: Web, b: Web) -> bool:
    if len(a.sources) != len(b.sources) or len(a.edges) != len(b.edges):
        # still validate so bad input is reported consistently
        canonical_form(a)
        canonical_form(b)
        return False
    return canonical_form(a) == canonical_form(b)
