"""State-sum bracket of signed and free Gauss codes, plus derived analyses."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import (LaurentPoly, ModuleElement, bigon_value, format_element,
                      format_monomial, loop_value, lp_eval, me_is_scalar,
                      me_specialize, monomial_key)
from .canon import canonical_form
from .diagram import (SIGNED, GaussCode, GaussCodeError, diagram_girth,
                      skeleton, unoriented_state_web, writhe)
from .reduce import Reducer
from .web import components, find_bigons, find_squares


def _chunk_sum(code: GaussCode, lo: int, hi: int, signed: bool,
               reducer: Reducer | None = None) -> Counter:
    """Sum states ``lo <= mask < hi``; bit j set means crossing j is unoriented.

    Signed keys are ``(A-exponent, bigons, circles, monomial)`` and carry the
    weight sign in the count; free keys drop the exponent and count the number
    of unoriented crossings' parity in ``exp`` instead.
    """
    sk = skeleton(code)
    ks = code.crossings()
    n = len(ks)
    eps = [code.sign(k) for k in ks] if signed else [0] * n
    reducer = reducer or Reducer()
    acc: Counter = Counter()
    for mask in range(lo, hi):
        exp = 0
        neg = 0
        unor = []
        for j in range(n):
            if mask >> j & 1:
                unor.append(j)
                exp -= eps[j]
                neg ^= 1
            else:
                exp += 2 * eps[j]
        sgn = -1 if neg else 1
        if not signed:
            exp = len(unor)
        for (b, c, mono), k in reducer.expand_edges(*sk.raw(frozenset(unor))).items():
            acc[(exp, b, c, mono)] += sgn * k
    return acc


def _state_sum(code: GaussCode, signed: bool, workers: int = 1,
               reducer: Reducer | None = None) -> Counter:
    total = 1 << code.num_crossings()
    if workers <= 1 or total < 1024:
        return _chunk_sum(code, 0, total, signed, reducer)
    step = -(-total // (4 * workers))
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    acc: Counter = Counter()
    with ProcessPoolExecutor(workers) as pool:
        futures = [pool.submit(_chunk_sum, code, lo, hi, signed) for lo, hi in bounds]
        for f in futures:
            acc.update(f.result())
    return acc


def bracket(code: GaussCode, workers: int = 1,
            reducer: Reducer | None = None) -> ModuleElement:
    """Sum over states of weight times the reduced state web.

    Passing one ``reducer`` to many calls shares its memo table.
    """
    if code.mode != SIGNED:
        raise GaussCodeError("mode", "bracket needs a signed code; use free_bracket")
    acc = _state_sum(code, True, workers, reducer)
    bigon, loop = bigon_value(), loop_value()
    grouped: dict = {}
    for (e, b, c, mono), k in acc.items():
        if k:
            grouped.setdefault((b, c, mono), Counter())[e] += k
    terms: dict = {}
    pows: dict = {}
    for (b, c, mono), by_exp in grouped.items():
        if (b, c) not in pows:
            pows[b, c] = bigon ** b * loop ** c
        coeff = LaurentPoly(by_exp) * pows[b, c]
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return ModuleElement(terms)


def normalized_bracket(code: GaussCode, workers: int = 1,
                       reducer: Reducer | None = None) -> ModuleElement:
    return bracket(code, workers, reducer) * LaurentPoly.monomial(-8 * writhe(code))


def free_bracket(code: GaussCode, a: int, workers: int = 1,
                 reducer: Reducer | None = None) -> ModuleElement:
    """Bracket at ``A = a``; signs are ignored, so free codes are accepted."""
    if a not in (1, -1):
        raise ValueError(f"A may only be specialized to +1 or -1, got {a!r}")
    return _free_value(_state_sum(code, False, workers, reducer), a)


def free_bracket_pair(code: GaussCode, workers: int = 1,
                      reducer: Reducer | None = None) -> tuple[ModuleElement, ModuleElement]:
    """``(free_bracket(code, 1), free_bracket(code, -1))`` from a single state sum."""
    acc = _state_sum(code, False, workers, reducer)
    return _free_value(acc, 1), _free_value(acc, -1)


def _free_value(acc: Counter, a: int) -> ModuleElement:
    bigon, loop = lp_eval(bigon_value(), a), lp_eval(loop_value(), a)
    terms: dict = {}
    for (nu, b, c, mono), k in acc.items():
        # unoriented weight is -a; the (-1)**nu part is already in k
        val = k * a ** nu * bigon ** b * loop ** c
        terms[mono] = terms.get(mono, 0) + val
    return ModuleElement(terms)


def classicality_obstruction(code: GaussCode) -> bool:
    """True when the bracket has a graph monomial, so the link is not classical."""
    return not me_is_scalar(bracket(code))


@dataclass(frozen=True)
class MinimalityCertificate:
    verdict: str             # "certified-minimal" | "inconclusive"
    reason: str              # "kus-irreducible" | "girth-at-least-5" | "none"
    kus: tuple = ()          # canonical components of the all-unoriented web
    kus_circles: int = 0
    girth: float = 0

    def __str__(self):
        return f"{self.verdict} ({self.reason})" if self.reason != "none" else self.verdict


def minimality_certificate(code: GaussCode) -> MinimalityCertificate:
    if code.num_crossings() == 0:
        raise GaussCodeError("empty", "minimality needs at least one crossing")
    kus = unoriented_state_web(code)
    parts, circles = components(kus)
    canon = tuple(sorted((canonical_form(p) for p in parts), key=lambda w: (w.n, w.key)))
    girth = diagram_girth(code)
    if not find_bigons(kus) and not find_squares(kus):
        return MinimalityCertificate("certified-minimal", "kus-irreducible", canon, circles, girth)
    if girth >= 5:
        return MinimalityCertificate("certified-minimal", "girth-at-least-5", canon, circles, girth)
    return MinimalityCertificate("inconclusive", "none", canon, circles, girth)


@dataclass
class BracketReport:
    code: str
    raw: ModuleElement
    normalized: ModuleElement
    writhe: int
    free_at_plus1: ModuleElement
    free_at_minus1: ModuleElement
    scalar: bool
    summands: list = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"code: {self.code}",
            f"writhe: {self.writhe}",
            f"raw: {format_element(self.raw)}",
            f"normalized: {format_element(self.normalized)}",
            f"free(A=1): {format_element(self.free_at_plus1)}",
            f"free(A=-1): {format_element(self.free_at_minus1)}",
            f"scalar: {'true' if self.scalar else 'false'}",
            f"summands: {len(self.summands)}",
        ]
        for mono, sizes in self.summands:
            lines.append(f"  {format_monomial(mono)} vertices={list(sizes)}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "code": self.code,
            "writhe": self.writhe,
            "raw": format_element(self.raw),
            "normalized": format_element(self.normalized),
            "free_at_plus1": format_element(self.free_at_plus1),
            "free_at_minus1": format_element(self.free_at_minus1),
            "scalar": self.scalar,
            "summands": [{"monomial": format_monomial(m), "vertices": list(s)}
                         for m, s in self.summands],
        }, indent=2)


def report(code: GaussCode, workers: int = 1) -> BracketReport:
    raw = bracket(code, workers)
    wr = writhe(code)
    normalized = raw * LaurentPoly.monomial(-8 * wr)
    summands = [(m, tuple(2 * w.n for w in m))
                for m in sorted(normalized.terms, key=monomial_key) if m]
    return BracketReport(str(code), raw, normalized, wr,
                         me_specialize(raw, 1), me_specialize(raw, -1),
                         me_is_scalar(normalized), summands)
