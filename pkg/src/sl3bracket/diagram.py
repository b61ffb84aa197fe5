"""Gauss-code diagrams of virtual and free links.

A code is a tuple of components; each component is a cyclic tuple of
:class:`Passage`.  Signed codes carry an over/under role and a sign on each
passage; free codes carry neither.  Virtual crossings are never stored:
detour moves do not change the code.
"""

from __future__ import annotations

import math
import random
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple

from .algebra import LaurentPoly
from .web import Web, simple_graph_girth

SIGNED = "signed"
FREE = "free"
ORIENTED = "oriented"
UNORIENTED = "unoriented"


class GaussCodeError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class Passage(NamedTuple):
    crossing: int
    role: str | None = None   # "O", "U" or None in free mode
    sign: int | None = None   # +1, -1 or None in free mode

    def __str__(self):
        if self.role is None:
            return str(self.crossing)
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple
    mode: str = SIGNED

    def __post_init__(self):
        object.__setattr__(self, "components",
                           tuple(tuple(Passage(*p) for p in c) for c in self.components))
        _check(self)

    def __str__(self):
        return ";".join(",".join(str(p) for p in c) for c in self.components)

    def crossings(self) -> list[int]:
        return sorted({p.crossing for c in self.components for p in c})

    def num_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def positions(self) -> dict[int, list[tuple[int, int]]]:
        """Crossing id -> its two (component, index) positions in reading order."""
        pos: dict[int, list] = defaultdict(list)
        for ci, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                pos[p.crossing].append((ci, i))
        return pos

    def sign(self, k: int) -> int:
        for comp in self.components:
            for p in comp:
                if p.crossing == k:
                    return p.sign
        raise KeyError(k)

    def signs(self) -> dict[int, int]:
        return {p.crossing: p.sign for c in self.components for p in c}

    def forget(self) -> GaussCode:
        """The underlying free code."""
        return GaussCode(tuple(tuple(Passage(p.crossing) for p in c)
                               for c in self.components), FREE)


def _check(code: GaussCode) -> None:
    if code.mode not in (SIGNED, FREE):
        raise GaussCodeError("mode", f"unknown mode {code.mode!r}")
    seen: dict[int, list[Passage]] = defaultdict(list)
    for comp in code.components:
        for p in comp:
            if code.mode == FREE and (p.role is not None or p.sign is not None):
                raise GaussCodeError("mixed-mode", f"free code has decorated passage {p}")
            if code.mode == SIGNED and (p.role not in ("O", "U") or p.sign not in (1, -1)):
                raise GaussCodeError("mixed-mode", f"signed code has bare passage {p}")
            seen[p.crossing].append(p)
    for k, ps in sorted(seen.items()):
        if len(ps) > 2:
            raise GaussCodeError("duplicate", f"crossing {k} occurs {len(ps)} times")
        if code.mode == FREE and len(ps) < 2:
            raise GaussCodeError("missing", f"crossing {k} occurs only once")
    if code.mode == FREE:
        return
    # report all missing over passages before any missing under passage
    for role, name in (("O", "over"), ("U", "under")):
        for k, ps in sorted(seen.items()):
            if role not in [p.role for p in ps]:
                raise GaussCodeError("missing", f"crossing {k} missing {name} passage")
    for k, ps in sorted(seen.items()):
        if ps[0].sign != ps[1].sign:
            raise GaussCodeError("sign-mismatch", f"crossing {k} has passages of opposite sign")


_SIGNED_TOKEN = re.compile(r"^([OU])(\d+)([+\-])$")


def parse_gauss(text: str) -> GaussCode:
    """Parse ``O1+,U2-,...;...`` (signed) or ``1,2,1,2;...`` (free)."""
    text = re.sub(r"\s+", "", text).replace("−", "-")
    comps = []
    modes = set()
    for chunk in text.split(";"):
        comp = []
        for tok in chunk.split(",") if chunk else []:
            m = _SIGNED_TOKEN.match(tok)
            if m:
                modes.add(SIGNED)
                comp.append(Passage(int(m.group(2)), m.group(1),
                                    1 if m.group(3) == "+" else -1))
            elif tok.isdigit():
                modes.add(FREE)
                comp.append(Passage(int(tok)))
            else:
                raise GaussCodeError("syntax", f"bad passage token {tok!r}")
        comps.append(tuple(comp))
    if len(modes) > 1:
        raise GaussCodeError("mixed-mode", "code mixes signed and bare passages")
    return GaussCode(tuple(comps), modes.pop() if modes else SIGNED)


def writhe(code: GaussCode) -> int:
    if code.mode != SIGNED:
        raise GaussCodeError("mode", "writhe needs a signed code")
    return sum(code.signs().values())


# ------------------------------------------------------------------ states

def states(code: GaussCode) -> Iterator[dict[int, str]]:
    """All 2**n states, oriented-first lexicographic over sorted crossing ids."""
    ks = code.crossings()
    for choice in product((ORIENTED, UNORIENTED), repeat=len(ks)):
        yield dict(zip(ks, choice))


def state_weight(code: GaussCode, s: dict[int, str]) -> LaurentPoly:
    """Product of ``A^{2e}`` (oriented) and ``-A^{-e}`` (unoriented) factors."""
    if code.mode != SIGNED:
        raise GaussCodeError("mode", "state weights need a signed code")
    exp, neg = 0, 0
    for k, e in code.signs().items():
        if s[k] == ORIENTED:
            exp += 2 * e
        else:
            exp -= e
            neg ^= 1
    return LaurentPoly.monomial(exp, -1 if neg else 1)


class _Skeleton:
    """Arc structure of a code, shared by every state web of that code."""

    def __init__(self, code: GaussCode):
        ks = code.crossings()
        self.index = {k: j for j, k in enumerate(ks)}
        self.empty = sum(1 for c in code.components if not c)
        # flat passage numbering; arc p runs from passage p to nxt[p]
        self.crossing_of: list[int] = []
        self.nxt: list[int] = []
        for comp in code.components:
            base = len(self.crossing_of)
            m = len(comp)
            for i, p in enumerate(comp):
                self.crossing_of.append(self.index[p.crossing])
                self.nxt.append(base + (i + 1) % m)
        n = len(self.crossing_of)
        self.partner = [0] * n
        first: dict[int, int] = {}
        for p, j in enumerate(self.crossing_of):
            if j in first:
                self.partner[p] = first[j]
                self.partner[first[j]] = p
            else:
                first[j] = p

    def web(self, unoriented: frozenset | set) -> Web:
        """``unoriented`` holds crossing indices (not ids) resolved with a rung."""
        edges, circles = self.raw(unoriented)
        srcs = [2 * j for j in unoriented]
        return Web(srcs, [v + 1 for v in srcs], edges, circles)

    def raw(self, unoriented: frozenset | set) -> tuple[tuple, int]:
        """Sorted edge tuple and circle count of a state web."""
        nxt, cross, partner = self.nxt, self.crossing_of, self.partner
        n = len(nxt)
        edges = [(2 * j, 2 * j + 1) for j in unoriented]
        visited = [False] * n
        for p in range(n):
            if cross[p] not in unoriented:
                continue
            # arc leaving passage p starts at the source of its crossing
            q = p
            while True:
                visited[q] = True
                r = nxt[q]
                if cross[r] in unoriented:
                    edges.append((2 * cross[p], 2 * cross[r] + 1))
                    break
                q = partner[r]
        circles = self.empty
        for p in range(n):
            if visited[p]:
                continue
            circles += 1
            q = p
            while not visited[q]:
                visited[q] = True
                q = partner[nxt[q]]
        edges.sort()
        return tuple(edges), circles


@lru_cache(maxsize=256)
def skeleton(code: GaussCode) -> _Skeleton:
    return _Skeleton(code)


def state_web(code: GaussCode, s: dict[int, str]) -> Web:
    """Web of a state; crossing with sorted index j owns source 2j and sink 2j+1."""
    sk = skeleton(code)
    return sk.web({sk.index[k] for k, c in s.items() if c == UNORIENTED})


def unoriented_state_web(code: GaussCode) -> Web:
    return state_web(code, {k: UNORIENTED for k in code.crossings()})


def diagram_girth(code: GaussCode) -> float:
    """Girth of the 4-valent graph whose vertices are crossings and edges arcs."""
    if code.num_crossings() == 0:
        raise GaussCodeError("empty", "girth needs at least one crossing")
    nbrs: dict[int, set] = defaultdict(set)
    mult: dict[tuple, int] = defaultdict(int)
    for comp in code.components:
        m = len(comp)
        for i in range(m):
            a, b = comp[i].crossing, comp[(i + 1) % m].crossing
            if a == b:
                return 1
            mult[min(a, b), max(a, b)] += 1
            nbrs[a].add(b)
            nbrs[b].add(a)
    if any(k > 1 for k in mult.values()):
        return 2
    return simple_graph_girth(nbrs)


# ------------------------------------------------------------------- moves

class MoveError(ValueError):
    kind = "inapplicable-move"


@dataclass(frozen=True)
class MoveRecord:
    """A move and its location.

    Kinds: ``R1+``/``R1-`` insert/delete a kink, ``R2+``/``R2-`` insert/delete
    a bigon, ``R3`` triangle, ``Z`` virtualization, ``switch`` crossing change.
    ``args`` is a tuple of ints and short strings; ``str()`` is the transcript
    line and :meth:`parse` reads it back.
    """

    kind: str
    args: tuple = ()

    def __str__(self):
        return " ".join([self.kind, *map(str, self.args)])

    @classmethod
    def parse(cls, line: str) -> MoveRecord:
        head, *rest = line.split()
        return cls(head, tuple(int(x) if re.fullmatch(r"-?\d+", x) else x for x in rest))


def _fresh(code: GaussCode, k: int = 1) -> list[int]:
    top = max(code.crossings(), default=0)
    return list(range(top + 1, top + 1 + k))


def _insert(comps: list[list], where: list[tuple[int, int, list]]) -> None:
    # later gaps first so earlier indices stay valid; equal gaps keep list order
    for ci, gap, seq in sorted(where, key=lambda w: (w[0], w[1]), reverse=True):
        comps[ci][gap:gap] = seq


def _remove(code: GaussCode, ks: set) -> GaussCode:
    return GaussCode(tuple(tuple(p for p in c if p.crossing not in ks)
                           for c in code.components), code.mode)


def _adjacent(code: GaussCode, a: tuple[int, int], b: tuple[int, int]) -> bool:
    if a[0] != b[0] or a == b:
        return False
    m = len(code.components[a[0]])
    return (a[1] + 1) % m == b[1] or (b[1] + 1) % m == a[1]


def _passage(code: GaussCode, pos: tuple[int, int]) -> Passage:
    return code.components[pos[0]][pos[1]]


def _mk(code: GaussCode, k: int, role: str, sign: int) -> Passage:
    return Passage(k) if code.mode == FREE else Passage(k, role, sign)


def _r1_insert(code, ci, gap, sign, order):
    (k,) = _fresh(code)
    first, second = ("O", "U") if order == "OU" else ("U", "O")
    comps = [list(c) for c in code.components]
    _insert(comps, [(ci, gap, [_mk(code, k, first, sign), _mk(code, k, second, sign)])])
    return GaussCode(tuple(map(tuple, comps)), code.mode)


def _r1_delete(code, k):
    pos = code.positions().get(k)
    if not pos or not _adjacent(code, pos[0], pos[1]):
        raise MoveError(f"crossing {k} is not a kink")
    return _remove(code, {k})


def _r2_insert(code, c1, g1, c2, g2, sign, parallel, over_first):
    a, b = _fresh(code, 2)
    sa, sb = sign, -sign
    top = [_mk(code, a, "O", sa), _mk(code, b, "O", sb)]
    bot = [_mk(code, a, "U", sa), _mk(code, b, "U", sb)]
    if not parallel:
        bot.reverse()
    comps = [list(c) for c in code.components]
    if (c1, g1) == (c2, g2):
        _insert(comps, [(c1, g1, top + bot if over_first else bot + top)])
    else:
        _insert(comps, [(c1, g1, top), (c2, g2, bot)])
    return GaussCode(tuple(map(tuple, comps)), code.mode)


def _r2_pairs(code, a, b):
    """The two adjacent passage pairs pairing ``a`` with ``b``, if any."""
    pa, pb = code.positions().get(a), code.positions().get(b)
    if not pa or not pb or a == b:
        return None
    if code.mode == SIGNED:
        if code.sign(a) != -code.sign(b):
            return None
        ra = {_passage(code, p).role: p for p in pa}
        rb = {_passage(code, p).role: p for p in pb}
        if _adjacent(code, ra["O"], rb["O"]) and _adjacent(code, ra["U"], rb["U"]):
            return True
        return None
    (x1, x2), (y1, y2) = pa, pb
    if (_adjacent(code, x1, y1) and _adjacent(code, x2, y2)) or \
            (_adjacent(code, x1, y2) and _adjacent(code, x2, y1)):
        return True
    return None


def _r2_delete(code, a, b):
    if not _r2_pairs(code, a, b):
        raise MoveError(f"crossings {a},{b} do not bound a bigon")
    return _remove(code, {a, b})


def _flip(code, k, flip_sign):
    if code.mode != SIGNED:
        raise MoveError("Z and switch moves act on signed codes")
    if k not in code.positions():
        raise MoveError(f"no crossing {k}")

    def f(p):
        if p.crossing != k:
            return p
        return Passage(k, "U" if p.role == "O" else "O", -p.sign if flip_sign else p.sign)

    return GaussCode(tuple(tuple(f(p) for p in c) for c in code.components), code.mode)


# R3: three strands top/middle/bottom meeting pairwise.  A site is
# realizable iff it occurs for three straight lines in general position;
# the pattern is (T meets M first, M meets T first, B meets T first,
# sign TM, sign TB, sign MB).

@lru_cache(maxsize=1)
def r3_patterns() -> frozenset:
    rng = random.Random(20240601)
    found = set()
    for _ in range(4000):
        lines = []
        for _ in range(3):
            th = rng.uniform(0, 2 * math.pi)
            lines.append(((rng.uniform(-1, 1), rng.uniform(-1, 1)),
                          (math.cos(th), math.sin(th))))

        def meet(i, j):
            (p, d), (q, e) = lines[i], lines[j]
            det = d[0] * (-e[1]) + e[0] * d[1]
            if abs(det) < 1e-6:
                return None
            rx, ry = q[0] - p[0], q[1] - p[1]
            ti = (rx * (-e[1]) + e[0] * ry) / det
            tj = (d[0] * ry - d[1] * rx) / det
            return ti, tj, d[0] * e[1] - d[1] * e[0]

        T, M, B = 0, 1, 2
        tm, tb, mb = meet(T, M), meet(T, B), meet(M, B)
        if None in (tm, tb, mb):
            continue

        def sg(x):
            return 1 if x[2] > 0 else -1

        found.add((tm[0] < tb[0], tm[1] < mb[0], tb[1] < mb[1], sg(tm), sg(tb), sg(mb)))
    return frozenset(found)


@lru_cache(maxsize=1)
def _flat_r3_patterns() -> frozenset:
    return frozenset(p[:3] for p in r3_patterns())


def _triangles(code: GaussCode) -> list[tuple]:
    """Three disjoint adjacent passage pairs over three crossings."""
    pos = code.positions()
    pairs = []
    for ci, comp in enumerate(code.components):
        m = len(comp)
        if m < 2:
            continue
        for i in range(m if m > 2 else 1):
            j = (i + 1) % m
            if comp[i].crossing != comp[j].crossing:
                pairs.append(((ci, i), (ci, j)))
    by_pos = defaultdict(list)
    for pr in pairs:
        for p in pr:
            by_pos[p].append(pr)
    out = set()

    def other(k, p):
        a, b = pos[k]
        return b if a == p else a

    for pr in pairs:
        p0, p1 = pr
        x, y = _passage(code, p0).crossing, _passage(code, p1).crossing
        for pr2 in by_pos[other(x, p0)]:
            if pr2 == pr:
                continue
            z_pos = pr2[0] if pr2[1] == other(x, p0) else pr2[1]
            z = _passage(code, z_pos).crossing
            if z in (x, y):
                continue
            a, b = other(y, p1), other(z, z_pos)
            if not _adjacent(code, a, b):
                continue
            pr3 = (a, b)
            tri = frozenset([frozenset(pr), frozenset(pr2), frozenset(pr3)])
            if len({p for q in tri for p in q}) == 6:
                out.add(tri)
    return sorted((tuple(sorted(tuple(sorted(q)) for q in tri)) for tri in out))


def _ordered(code, pair):
    """Order an adjacent pair along the strand direction."""
    a, b = pair
    m = len(code.components[a[0]])
    return (a, b) if (a[1] + 1) % m == b[1] else (b, a)


def _is_r3(code: GaussCode, tri) -> bool:
    strands = [_ordered(code, pr) for pr in tri]
    if code.mode == FREE:
        # realizable for some choice of heights and signs
        cs = [[_passage(code, p).crossing for p in s] for s in strands]
        for t, mid, bot in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            common = lambda i, j: (set(cs[i]) & set(cs[j])).pop()
            tm, tb, mb = common(t, mid), common(t, bot), common(mid, bot)
            pat = (cs[t][0] == tm, cs[mid][0] == tm, cs[bot][0] == tb)
            if pat in _flat_r3_patterns():
                return True
        return False
    roles = ["".join(_passage(code, p).role for p in s) for s in strands]
    by_kind = {}
    for s, r in zip(strands, roles):
        kind = {"OO": "T", "UU": "B"}.get(r, "M")
        if kind in by_kind:
            return False
        by_kind[kind] = s
    if set(by_kind) != {"T", "M", "B"}:
        return False
    cr = {k: [_passage(code, p).crossing for p in s] for k, s in by_kind.items()}
    tm = (set(cr["T"]) & set(cr["M"])).pop()
    tb = (set(cr["T"]) & set(cr["B"])).pop()
    mb = (set(cr["M"]) & set(cr["B"])).pop()
    pat = (cr["T"][0] == tm, cr["M"][0] == tm, cr["B"][0] == tb,
           code.sign(tm), code.sign(tb), code.sign(mb))
    return pat in r3_patterns()


def _r3(code, x, y, z):
    ks = {x, y, z}
    for tri in _triangles(code):
        if {_passage(code, p).crossing for q in tri for p in q} == ks and _is_r3(code, tri):
            comps = [list(c) for c in code.components]
            for (ca, ia), (cb, ib) in tri:
                comps[ca][ia], comps[cb][ib] = code.components[cb][ib], code.components[ca][ia]
            return GaussCode(tuple(map(tuple, comps)), code.mode)
    raise MoveError(f"crossings {x},{y},{z} do not form a third-move triangle")


def apply_move(code: GaussCode, m: MoveRecord) -> GaussCode:
    a = m.args
    try:
        if m.kind == "R1+":
            ci, gap, sign, order = a
            return _r1_insert(code, ci, gap, 1 if sign == "+" else -1, order)
        if m.kind == "R1-":
            return _r1_delete(code, *a)
        if m.kind == "R2+":
            c1, g1, c2, g2, sign, par, first = a
            return _r2_insert(code, c1, g1, c2, g2, 1 if sign == "+" else -1,
                              par == "par", first == "O")
        if m.kind == "R2-":
            return _r2_delete(code, *a)
        if m.kind == "R3":
            return _r3(code, *a)
        if m.kind == "Z":
            return _flip(code, a[0], False)
        if m.kind == "switch":
            return _flip(code, a[0], True)
    except (IndexError, ValueError, TypeError) as exc:
        if isinstance(exc, MoveError):
            raise
        raise MoveError(f"cannot apply {m}: {exc}") from None
    raise MoveError(f"unknown move kind {m.kind!r}")


def enumerate_moves(code: GaussCode, switches: bool = True) -> list[MoveRecord]:
    """Every applicable deletion, R3 site, insertion template, Z and switch."""
    return insertion_moves(code) + local_moves(code, switches)


def _gaps(code: GaussCode) -> list[tuple[int, int]]:
    return [(ci, g) for ci, comp in enumerate(code.components)
            for g in range(max(len(comp), 1))]


def insertion_moves(code: GaussCode) -> list[MoveRecord]:
    moves = []
    signs = ("+", "-") if code.mode == SIGNED else ("+",)
    orders = ("OU", "UO") if code.mode == SIGNED else ("OU",)
    gaps = _gaps(code)
    for ci, g in gaps:
        for s in signs:
            for order in orders:
                moves.append(MoveRecord("R1+", (ci, g, s, order)))
    for (c1, g1), (c2, g2) in product(gaps, repeat=2):
        for s in signs:
            for par in ("par", "anti"):
                firsts = ("O", "U") if (c1, g1) == (c2, g2) else ("O",)
                for first in firsts:
                    moves.append(MoveRecord("R2+", (c1, g1, c2, g2, s, par, first)))
    return moves


def random_insertion(code: GaussCode, kind: str, rng: random.Random) -> MoveRecord:
    """Uniform-ish sample from the ``R1+`` or ``R2+`` templates."""
    gaps = _gaps(code)
    sign = rng.choice(("+", "-")) if code.mode == SIGNED else "+"
    if kind == "R1+":
        ci, g = rng.choice(gaps)
        order = rng.choice(("OU", "UO")) if code.mode == SIGNED else "OU"
        return MoveRecord("R1+", (ci, g, sign, order))
    (c1, g1), (c2, g2) = rng.choice(gaps), rng.choice(gaps)
    return MoveRecord("R2+", (c1, g1, c2, g2, sign, rng.choice(("par", "anti")),
                              rng.choice(("O", "U"))))


def local_moves(code: GaussCode, switches: bool = True) -> list[MoveRecord]:
    """Deletions, R3 sites, and (signed codes) Z and switch at each crossing."""
    moves = []
    ks = code.crossings()
    pos = code.positions()
    for k in ks:
        if _adjacent(code, pos[k][0], pos[k][1]):
            moves.append(MoveRecord("R1-", (k,)))
    for i, a in enumerate(ks):
        for b in ks[i + 1:]:
            if _r2_pairs(code, a, b):
                moves.append(MoveRecord("R2-", (a, b)))
    seen = set()
    for tri in _triangles(code):
        trip = tuple(sorted({_passage(code, p).crossing for q in tri for p in q}))
        if trip not in seen and _is_r3(code, tri):
            seen.add(trip)
            moves.append(MoveRecord("R3", trip))
    if code.mode == SIGNED:
        for k in ks:
            moves.append(MoveRecord("Z", (k,)))
            if switches:
                moves.append(MoveRecord("switch", (k,)))
    return moves


def inverse_move(before: GaussCode, m: MoveRecord, after: GaussCode) -> MoveRecord:
    """A move taking ``after`` back to ``before``."""
    if m.kind == "R1+":
        (k,) = set(after.crossings()) - set(before.crossings())
        return MoveRecord("R1-", (k,))
    if m.kind == "R2+":
        a, b = sorted(set(after.crossings()) - set(before.crossings()))
        return MoveRecord("R2-", (a, b))
    if m.kind in ("R3", "Z", "switch"):
        return m
    raise MoveError(f"{m.kind} deletions are inverted by re-insertion; use canonical_code")


def canonical_code(code: GaussCode) -> tuple:
    """Key equal for codes that differ by component rotation and crossing renaming."""
    best = None
    comps = code.components
    # components keep their order; each is rotated independently
    rotations = [[c[i:] + c[:i] for i in range(len(c))] or [c] for c in comps]
    for choice in product(*rotations):
        rename: dict[int, int] = {}
        out = []
        for c in choice:
            row = []
            for p in c:
                if p.crossing not in rename:
                    rename[p.crossing] = len(rename) + 1
                row.append((rename[p.crossing], p.role or "", p.sign or 0))
            out.append(tuple(row))
        key = tuple(out)
        if best is None or key < best:
            best = key
    return best


def split_union(a: GaussCode, b: GaussCode) -> GaussCode:
    """Distant union; ``b``'s crossings are renumbered above ``a``'s."""
    shift = max(a.crossings(), default=0)
    comps = a.components + tuple(
        tuple(Passage(p.crossing + shift, p.role, p.sign) for p in c) for c in b.components)
    return GaussCode(comps, a.mode)


def mirror(code: GaussCode) -> GaussCode:
    """Flip every sign and swap every over/under role."""
    return GaussCode(tuple(tuple(Passage(p.crossing, "U" if p.role == "O" else "O", -p.sign)
                                 for p in c) for c in code.components), SIGNED)


def lift(code: GaussCode, sign: int = 1) -> GaussCode:
    """Signed code over a free one: first passage over, all signs ``sign``."""
    if code.mode == SIGNED:
        return code
    seen: set = set()
    comps = []
    for c in code.components:
        row = []
        for p in c:
            role = "U" if p.crossing in seen else "O"
            seen.add(p.crossing)
            row.append(Passage(p.crossing, role, sign))
        comps.append(tuple(row))
    return GaussCode(tuple(comps), SIGNED)
