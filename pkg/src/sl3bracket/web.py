"""Closed trivalent bipartite directed webs.

Every edge runs from a source (out-degree 3) to a sink (in-degree 3).
Vertex-free closed loops are kept as a plain counter in ``circles``.
Edge instances are identified by their index in ``Web.edges``, which is
always stored sorted so equal webs have equal edge tuples.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple


class WebError(ValueError):
    """Raised when a web violates the trivalent bipartite invariants."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


@dataclass(frozen=True)
class Web:
    sources: frozenset = frozenset()
    sinks: frozenset = frozenset()
    edges: tuple = ()
    circles: int = 0
    _adj: dict = field(default=None, init=False, repr=False, compare=False,
                       hash=False)

    def __post_init__(self):
        object.__setattr__(self, "sources", frozenset(self.sources))
        object.__setattr__(self, "sinks", frozenset(self.sinks))
        object.__setattr__(self, "edges",
                           tuple(sorted((int(s), int(t)) for s, t in self.edges)))

    @classmethod
    def from_edges(cls, edges, circles: int = 0) -> Web:
        """Build a web whose parts are read off the edge endpoints."""
        edges = list(edges)
        return cls(frozenset(s for s, _ in edges), frozenset(t for _, t in edges),
                   edges, circles)

    @property
    def vertices(self) -> frozenset:
        return self.sources | self.sinks

    def num_vertices(self) -> int:
        return len(self.sources) + len(self.sinks)

    def incidence(self) -> dict[int, list[int]]:
        """Vertex -> indices of incident edge instances."""
        if self._adj is None:
            adj: dict[int, list[int]] = {v: [] for v in self.vertices}
            for i, (s, t) in enumerate(self.edges):
                adj.setdefault(s, []).append(i)
                adj.setdefault(t, []).append(i)
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def to_json(self) -> dict:
        return {"sources": sorted(self.sources), "sinks": sorted(self.sinks),
                "edges": [list(e) for e in self.edges], "circles": self.circles}

    @classmethod
    def from_json(cls, data: dict | str) -> Web:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            w = cls(data.get("sources", []), data.get("sinks", []),
                    [tuple(e) for e in data.get("edges", [])],
                    int(data.get("circles", 0)))
        except (TypeError, ValueError) as exc:
            raise WebError("format", str(exc)) from None
        for v in w.vertices:
            if v < 0:
                raise WebError("format", f"vertex id {v} is negative")
        return w

    def relabel(self, mapping) -> Web:
        return Web([mapping[v] for v in self.sources],
                   [mapping[v] for v in self.sinks],
                   [(mapping[s], mapping[t]) for s, t in self.edges], self.circles)

    def to_dot(self) -> str:
        lines = ["digraph web {"]
        for v in sorted(self.sources):
            lines.append(f"  {v} [shape=circle];")
        for v in sorted(self.sinks):
            lines.append(f"  {v} [shape=doublecircle];")
        for s, t in self.edges:
            lines.append(f"  {s} -> {t};")
        if self.circles:
            lines.append(f'  // circles: {self.circles}')
        lines.append("}")
        return "\n".join(lines)


class BigonSite(NamedTuple):
    u: int           # source
    v: int           # sink
    pair: tuple      # two parallel edge indices


class SquareSite(NamedTuple):
    cycle: tuple     # (s1, t1, s2, t2)
    edges: tuple     # edge indices s1->t1, s2->t1, s2->t2, s1->t2


def validate(w: Web) -> None:
    """Raise :class:`WebError` on the first violated invariant."""
    if w.circles < 0:
        raise WebError("circles", "circle count is negative")
    both = w.sources & w.sinks
    if both:
        raise WebError("part", f"vertex {min(both)} is both source and sink")
    outdeg = Counter(s for s, _ in w.edges)
    indeg = Counter(t for _, t in w.edges)
    for s, t in w.edges:
        if s not in w.sources or t not in w.sinks:
            raise WebError("orientation",
                           f"edge ({s},{t}) does not run from a source to a sink")
    for v in sorted(w.sources):
        if outdeg[v] != 3:
            raise WebError("degree", f"source {v} has out-degree {outdeg[v]}")
    for v in sorted(w.sinks):
        if indeg[v] != 3:
            raise WebError("degree", f"sink {v} has in-degree {indeg[v]}")
    if len(w.sources) != len(w.sinks):
        raise WebError("part", "source and sink counts differ")


def is_valid(w: Web) -> bool:
    try:
        validate(w)
    except WebError:
        return False
    return True


def _parallel_classes(w: Web) -> dict[tuple, list[int]]:
    groups: dict[tuple, list[int]] = defaultdict(list)
    for i, e in enumerate(w.edges):
        groups[e].append(i)
    return groups


def find_bigons(w: Web) -> list[BigonSite]:
    sites = []
    for (s, t), idx in sorted(_parallel_classes(w).items()):
        for a, b in combinations(idx, 2):
            sites.append(BigonSite(s, t, (a, b)))
    return sites


def find_squares(w: Web) -> list[SquareSite]:
    """All 4-cycles on four distinct vertices, one per dihedral class."""
    first_edge: dict[tuple, int] = {}
    sinks_of: dict[int, set] = defaultdict(set)
    for i, (s, t) in enumerate(w.edges):
        first_edge.setdefault((s, t), i)
        sinks_of[s].add(t)
    sites = []
    for s1, s2 in combinations(sorted(sinks_of), 2):
        common = sorted(sinks_of[s1] & sinks_of[s2])
        for t1, t2 in combinations(common, 2):
            sites.append(SquareSite(
                (s1, t1, s2, t2),
                (first_edge[s1, t1], first_edge[s2, t1],
                 first_edge[s2, t2], first_edge[s1, t2])))
    return sites


def components(w: Web) -> tuple[list[Web], int]:
    """Split into connected vertex-bearing pieces plus the circle count."""
    adj = w.incidence()
    seen: set = set()
    parts = []
    for start in sorted(w.vertices):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        verts = [start]
        eidx: set = set()
        while queue:
            v = queue.popleft()
            for i in adj[v]:
                eidx.add(i)
                for x in w.edges[i]:
                    if x not in seen:
                        seen.add(x)
                        verts.append(x)
                        queue.append(x)
        vs = set(verts)
        parts.append(Web(vs & w.sources, vs & w.sinks, [w.edges[i] for i in eidx]))
    return parts, w.circles


def is_connected(w: Web) -> bool:
    parts, _ = components(w)
    return len(parts) <= 1


def disjoint_union(a: Web, b: Web) -> Web:
    """Union with ``b`` shifted past ``a``'s largest vertex id."""
    shift = (max(a.vertices) + 1) if a.vertices else 0
    return Web(a.sources | {v + shift for v in b.sources},
               a.sinks | {v + shift for v in b.sinks},
               list(a.edges) + [(s + shift, t + shift) for s, t in b.edges],
               a.circles + b.circles)


def web_girth(w: Web) -> float:
    """Shortest cycle length; parallel edges count as 2-cycles."""
    if not w.vertices:
        raise WebError("empty", "girth is undefined for a vertex-free web")
    if any(len(idx) > 1 for idx in _parallel_classes(w).values()):
        return 2
    nbrs: dict[int, set] = defaultdict(set)
    for s, t in w.edges:
        nbrs[s].add(t)
        nbrs[t].add(s)
    return simple_graph_girth(nbrs)


def simple_graph_girth(nbrs: dict) -> float:
    best = float("inf")
    for root in nbrs:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for x in nbrs[v]:
                if x not in dist:
                    dist[x] = dist[v] + 1
                    parent[x] = v
                    queue.append(x)
                elif parent[v] != x:
                    best = min(best, dist[v] + dist[x] + 1)
    return best


# ------------------------------------------------------------- named webs

def circle_web(n: int = 1) -> Web:
    return Web(circles=n)


def theta() -> Web:
    return Web({0}, {1}, [(0, 1)] * 3)


def k33() -> Web:
    return Web({0, 1, 2}, {3, 4, 5}, [(s, t) for s in range(3) for t in range(3, 6)])


def heawood() -> Web:
    """Incidence graph of the Fano plane, points as sources."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    return Web(range(7), range(7, 14),
               [(p, 7 + j) for j, line in enumerate(lines) for p in line])


def mobius_kantor() -> Web:
    """Generalized Petersen graph GP(8,3), bipartitioned by parity."""
    und = []
    for i in range(8):
        und.append((i, (i + 1) % 8))
        und.append((i, 8 + i))
        und.append((8 + i, 8 + (i + 3) % 8))
    color = {}
    nbrs = defaultdict(list)
    for a, b in und:
        nbrs[a].append(b)
        nbrs[b].append(a)
    color[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for x in nbrs[v]:
            if x not in color:
                color[x] = 1 - color[v]
                queue.append(x)
    edges = [(a, b) if color[a] == 0 else (b, a) for a, b in und]
    return Web([v for v in color if color[v] == 0],
               [v for v in color if color[v] == 1], edges)


def ladder() -> Web:
    """Two-rung closed ladder: a 4-cycle with two opposite edges doubled."""
    return Web({0, 2}, {1, 3}, [(0, 1), (0, 1), (2, 3), (2, 3), (2, 1), (0, 3)])


def cube() -> Web:
    """The 3-cube with even-parity vertices as sources."""
    edges = []
    for v in range(8):
        if bin(v).count("1") % 2 == 0:
            for b in range(3):
                edges.append((v, v ^ (1 << b)))
    return Web.from_edges(edges)
