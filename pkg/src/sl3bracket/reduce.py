"""Confluent reduction of webs to the graph module.

Three rules: a circle becomes ``loop_value()``, a bigon collapses with
coefficient ``bigon_value()``, and a square on four distinct vertices
splits into its two reconnections with coefficient 1 each.  Each rule
removes vertices, so every strategy terminates; the rules are confluent,
so every strategy lands on the same :class:`ModuleElement`.

Internally a result is kept as a counter over ``(bigons, circles,
monomial)``.  Every coefficient the rules produce is ``B**b * L**c`` for
the bigon and loop values, so polynomials are only expanded once at the
end (or evaluated at ``A = +-1`` for free knots).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .algebra import (ONE, LaurentPoly, ModuleElement, bigon_value, loop_value,
                      lp_eval, make_monomial, square_values)
from .canon import canonical_form
from .web import (BigonSite, SquareSite, Web, WebError, components, find_bigons,
                  find_squares)

Expansion = Counter  # (bigons, circles, monomial) -> multiplicity


@dataclass(frozen=True)
class ReductionStrategy:
    """``seed=None`` is the deterministic least-site strategy."""

    seed: int | None = None

    @classmethod
    def deterministic(cls) -> ReductionStrategy:
        return cls(None)

    @classmethod
    def seeded(cls, seed: int) -> ReductionStrategy:
        return cls(seed)


class StaleSite(WebError):
    def __init__(self, message: str):
        super().__init__("stale-site", message)


def _splice(w: Web, deleted: set, internal: set, pairing: dict,
            circles_extra: int = 0) -> Web:
    """Delete vertices and internal edges, then reconnect through ``pairing``.

    Each deleted vertex has exactly one external edge.  ``pairing`` sends a
    deleted sink to the deleted source whose outgoing external edge continues
    the strand that entered the sink.  Strands that never reach a surviving
    vertex close up into circles.
    """
    adj = w.incidence()
    ext = {}
    for x in deleted:
        outside = [i for i in adj[x] if i not in internal]
        if len(outside) != 1:
            raise StaleSite(f"vertex {x} does not have exactly one external edge")
        ext[x] = outside[0]
    drop = internal | set(ext.values())
    edges = [e for i, e in enumerate(w.edges) if i not in drop]
    visited = set()
    for t in pairing:
        y = w.edges[ext[t]][0]
        if y in deleted:
            continue
        cur = t
        while True:
            visited.add(cur)
            x = w.edges[ext[pairing[cur]]][1]
            if x not in deleted:
                edges.append((y, x))
                break
            cur = x
    circles = w.circles + circles_extra
    for t in pairing:
        if t in visited:
            continue
        circles += 1
        cur = t
        while cur not in visited:
            visited.add(cur)
            cur = w.edges[ext[pairing[cur]]][1]
    return Web(w.sources - deleted, w.sinks - deleted, edges, circles)


def _check_edge(w: Web, i: int, s: int, t: int) -> None:
    if not (0 <= i < len(w.edges)) or w.edges[i] != (s, t):
        raise StaleSite(f"edge #{i} is not ({s},{t})")


def reduce_bigon(w: Web, site: BigonSite) -> tuple[LaurentPoly, Web]:
    u, v, (a, b) = site
    if u not in w.sources or v not in w.sinks or a == b:
        raise StaleSite(f"bigon ({u},{v}) is not present")
    _check_edge(w, a, u, v)
    _check_edge(w, b, u, v)
    return bigon_value(), _splice(w, {u, v}, {a, b}, {v: u})


def resolve_square(w: Web, site: SquareSite) -> list[tuple[LaurentPoly, Web]]:
    (s1, t1, s2, t2), (e1, e2, e3, e4) = site
    if len({s1, t1, s2, t2}) != 4:
        raise WebError("degenerate-square", "square vertices must be distinct")
    if not {s1, s2} <= w.sources or not {t1, t2} <= w.sinks:
        raise StaleSite(f"square {site.cycle} is not present")
    for i, (s, t) in zip((e1, e2, e3, e4), ((s1, t1), (s2, t1), (s2, t2), (s1, t2))):
        _check_edge(w, i, s, t)
    deleted = {s1, t1, s2, t2}
    internal = {e1, e2, e3, e4}
    c1, c2 = square_values()
    return [(c1, _splice(w, deleted, internal, {t1: s1, t2: s2})),
            (c2, _splice(w, deleted, internal, {t1: s2, t2: s1}))]


def strip_circles(w: Web) -> tuple[LaurentPoly, Web]:
    if not w.circles:
        return ONE, w
    return loop_value() ** w.circles, Web(w.sources, w.sinks, w.edges, 0)


def _sites(w: Web) -> list:
    bigons = [(0, tuple(sorted((b.u, b.v))), b.pair, b) for b in find_bigons(w)]
    squares = [(1, tuple(sorted(s.cycle)), s.edges, s) for s in find_squares(w)]
    return sorted(bigons + squares, key=lambda x: x[:3])


def _apply(w: Web, site) -> list[tuple[int, Web]]:
    """Apply a site; returns ``(bigons consumed, web)`` pairs."""
    if isinstance(site, BigonSite):
        return [(1, reduce_bigon(w, site)[1])]
    return [(0, r) for _, r in resolve_square(w, site)]


def _irreducible_monomial(w: Web, canon_cache: dict | None = None) -> tuple:
    parts, _ = components(w)
    factors = []
    for p in parts:
        if canon_cache is None:
            factors.append(canonical_form(p))
            continue
        cf = canon_cache.get(p.edges)
        if cf is None:
            cf = canon_cache[p.edges] = canonical_form(p)
        factors.append(cf)
    return make_monomial(factors)


def expand(w: Web, strategy: ReductionStrategy | None = None,
           trace: Callable[[str, object, LaurentPoly], None] | None = None) -> Expansion:
    """Worklist reduction of ``w``; returns the symbolic expansion counter."""
    rng = None if strategy is None or strategy.seed is None else random.Random(strategy.seed)
    out: Expansion = Counter()
    work = [(0, 0, 1, w)]
    while work:
        b, c, mult, web = work.pop()
        if web.circles:
            if trace:
                trace("loop", web.circles, strip_circles(web)[0])
            c += web.circles
            web = Web(web.sources, web.sinks, web.edges, 0)
        sites = _sites(web)
        if not sites:
            out[(b, c, _irreducible_monomial(web))] += mult
            continue
        chosen = sites[0] if rng is None else rng.choice(sites)
        site = chosen[3]
        if trace:
            coeff = bigon_value() if isinstance(site, BigonSite) else ONE
            trace("bigon" if isinstance(site, BigonSite) else "square", site, coeff)
        for db, r in _apply(web, site):
            work.append((b + db, c, mult, r))
    return out


def expansion_to_element(exp: Expansion, a: int | None = None) -> ModuleElement:
    """Collapse a symbolic expansion; ``a`` in {+1,-1} specializes ``A``."""
    terms: dict = {}
    if a is None:
        bigon, loop = bigon_value(), loop_value()
    else:
        bigon, loop = lp_eval(bigon_value(), a), lp_eval(loop_value(), a)
    pows: dict = {}
    for (b, c, mono), mult in exp.items():
        key = (b, c)
        if key not in pows:
            pows[key] = bigon ** b * loop ** c
        val = pows[key] * mult
        terms[mono] = terms[mono] + val if mono in terms else val
    return ModuleElement(terms)


def normal_form(w: Web, strategy: ReductionStrategy | None = None,
                trace=None) -> ModuleElement:
    return expansion_to_element(expand(w, strategy, trace))


class Reducer:
    """Memoizing reducer for many webs built over the same vertex ids.

    Results are cached per connected, labelled, circle-free component, which
    is sound because the normal form is multiplicative over components.  The
    work is done on bare sorted edge tuples rather than :class:`Web` values.
    """

    def __init__(self, max_entries: int = 200_000):
        self.max_entries = max_entries
        self._nf: dict = {}
        self._canon: dict = {}

    def expand(self, w: Web) -> Expansion:
        return self.expand_edges(w.edges, w.circles)

    def expand_edges(self, edges: tuple, circles: int = 0) -> Expansion:
        result: Expansion = Counter({(0, circles, ()): 1})
        for part in _edge_components(edges):
            result = multiply(result, self._component(part))
        return result

    def _component(self, edges: tuple) -> Expansion:
        hit = self._nf.get(edges)
        if hit is not None:
            return hit
        site = _first_site(edges)
        if site is None:
            cf = self._canon.get(edges)
            if cf is None:
                cf = self._canon[edges] = canonical_form(Web.from_edges(edges))
            res = Counter({(0, 0, (cf,)): 1})
        else:
            res = Counter()
            for db, (r, c) in _edge_apply(edges, site):
                for (b, cc, m), k in self.expand_edges(r, c).items():
                    res[(b + db, cc, m)] += k
        if len(self._nf) >= self.max_entries:
            self._nf.clear()
        self._nf[edges] = res
        return res


def _edge_components(edges: tuple) -> list[tuple]:
    """Connected pieces of a sorted edge tuple, each again sorted."""
    if not edges:
        return []
    adj: dict = {}
    for s, t in edges:
        adj.setdefault(s, []).append(t)
        adj.setdefault(t, []).append(s)
    comp: dict = {}
    label = 0
    for v in adj:
        if v in comp:
            continue
        comp[v] = label
        stack = [v]
        while stack:
            for y in adj[stack.pop()]:
                if y not in comp:
                    comp[y] = label
                    stack.append(y)
        label += 1
    if label == 1:
        return [edges]
    groups: list = [[] for _ in range(label)]
    for e in edges:
        groups[comp[e[0]]].append(e)
    return [tuple(g) for g in groups]


def _first_site(edges: tuple):
    """Least bigon (as two edge indices), else least square, else None."""
    for i in range(1, len(edges)):
        if edges[i] == edges[i - 1]:
            return ("b", i - 1, i)
    sinks_of: dict = {}
    for s, t in edges:
        sinks_of.setdefault(s, []).append(t)
    srcs = sorted(sinks_of)
    for i, s1 in enumerate(srcs):
        n1 = sinks_of[s1]
        for s2 in srcs[i + 1:]:
            common = [t for t in n1 if t in sinks_of[s2]]
            if len(common) >= 2:
                return ("s", s1, common[0], s2, common[1])
    return None


def _edge_splice(edges, deleted, internal, pairing):
    ext = {}
    for i, (s, t) in enumerate(edges):
        if i in internal:
            continue
        if s in deleted:
            ext[s] = i
        if t in deleted:
            ext[t] = i
    drop = internal | set(ext.values())
    out = [e for i, e in enumerate(edges) if i not in drop]
    visited = set()
    for t in pairing:
        y = edges[ext[t]][0]
        if y in deleted:
            continue
        cur = t
        while True:
            visited.add(cur)
            x = edges[ext[pairing[cur]]][1]
            if x not in deleted:
                out.append((y, x))
                break
            cur = x
    circles = 0
    for t in pairing:
        if t in visited:
            continue
        circles += 1
        cur = t
        while cur not in visited:
            visited.add(cur)
            cur = edges[ext[pairing[cur]]][1]
    out.sort()
    return tuple(out), circles


def _edge_apply(edges: tuple, site) -> list:
    if site[0] == "b":
        _, i, j = site
        u, v = edges[i]
        return [(1, _edge_splice(edges, {u, v}, {i, j}, {v: u}))]
    _, s1, t1, s2, t2 = site
    internal = {edges.index((s1, t1)), edges.index((s2, t1)),
                edges.index((s2, t2)), edges.index((s1, t2))}
    deleted = {s1, t1, s2, t2}
    return [(0, _edge_splice(edges, deleted, internal, {t1: s1, t2: s2})),
            (0, _edge_splice(edges, deleted, internal, {t1: s2, t2: s1}))]


def multiply(x: Expansion, y: Expansion) -> Expansion:
    out: Expansion = Counter()
    for (b1, c1, m1), k1 in x.items():
        for (b2, c2, m2), k2 in y.items():
            m = make_monomial(m1 + m2) if m1 and m2 else (m1 or m2)
            out[(b1 + b2, c1 + c2, m)] += k1 * k2
    return out
