"""Laurent polynomials in A and the graph module they coefficient.

A :class:`LaurentPoly` is a sparse ``{exponent: coefficient}`` map with no
zero entries, so structural equality is polynomial equality.  A
:class:`ModuleElement` maps monomials (sorted tuples of canonical irreducible
webs) to nonzero Laurent polynomials; the empty monomial is the scalar part.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .canon import CanonicalWeb


class LaurentPoly:
    """Immutable integer Laurent polynomial in one variable ``A``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        return lp_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return lp_add(self, -_coerce(other))

    def __rsub__(self, other):
        return lp_add(_coerce(other), -self)

    def __mul__(self, other):
        return lp_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    terms = dict(p._terms)
    for e, c in q._terms.items():
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    terms: dict[int, int] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(terms)


def _check_unit(a: int) -> None:
    if a not in (1, -1):
        raise ValueError(f"A may only be specialized to +1 or -1, got {a!r}")


def lp_eval(p: LaurentPoly, a: int) -> int:
    """Substitute ``A = a`` for ``a`` in {+1, -1}."""
    _check_unit(a)
    if a == 1:
        return sum(p._terms.values())
    return sum(c if e % 2 == 0 else -c for e, c in p._terms.items())


def lp_mirror(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({-e: c for e, c in p._terms.items()})


def format_poly(p: LaurentPoly) -> str:
    """Render as ``A^6+1+A^-6`` style text, exponents descending."""
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.items():
        if e == 0:
            tok = str(abs(c))
        elif abs(c) == 1:
            tok = f"A^{e}"
        else:
            tok = f"{abs(c)}*A^{e}"
        if not out:
            out.append(tok if c > 0 else "-" + tok)
        else:
            out.append(("+" if c > 0 else "-") + tok)
    return "".join(out)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


def loop_value() -> LaurentPoly:
    """Value of a vertex-free circle."""
    return LaurentPoly({6: 1, 0: 1, -6: 1})


def bigon_value() -> LaurentPoly:
    """Coefficient produced by collapsing a bigon.

    The only choice compatible with the first Reidemeister move given the
    loop value and the crossing weights ``A^{2e}`` / ``-A^{-e}``.
    """
    return LaurentPoly({3: 1, -3: 1})


def square_values() -> tuple[LaurentPoly, LaurentPoly]:
    return ONE, ONE


# ---------------------------------------------------------------- monomials

Monomial = tuple  # sorted tuple of CanonicalWeb; () is the scalar monomial

SCALAR: Monomial = ()


def make_monomial(factors: Iterable[CanonicalWeb]) -> Monomial:
    return tuple(sorted(factors, key=_factor_key))


def _factor_key(w) -> tuple:
    return (2 * w.n, w.key)


def monomial_key(m: Monomial) -> tuple:
    """Total order on monomials: vertex count, then serialization."""
    return (sum(2 * w.n for w in m), format_monomial(m))


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"[{w.key}]" for w in m)


class ModuleElement:
    """Immutable finite sum ``sum_m c_m * m`` with Laurent coefficients.

    Coefficients may be plain ints when the element has been specialized at
    ``A = +-1``; the two kinds are never mixed inside one element.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, LaurentPoly | int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, c: LaurentPoly | int) -> ModuleElement:
        return cls({SCALAR: c})

    @classmethod
    def of(cls, m: Monomial, c: LaurentPoly | int = ONE) -> ModuleElement:
        return cls({m: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def coefficient(self, m: Monomial = SCALAR):
        return self._terms.get(m, 0)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return me_add(self, other)

    def __neg__(self):
        return ModuleElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return me_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return ModuleElement({m: c * other for m, c in self._terms.items()})
        return me_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"ModuleElement({format_element(self)})"

    def __str__(self):
        return format_element(self)


def me_add(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    terms = dict(x._terms)
    for m, c in y._terms.items():
        terms[m] = terms[m] + c if m in terms else c
    return ModuleElement(terms)


def me_mul(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    terms: dict = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            m = make_monomial(m1 + m2)
            c = c1 * c2
            terms[m] = terms[m] + c if m in terms else c
    return ModuleElement(terms)


def me_specialize(x: ModuleElement, a: int) -> ModuleElement:
    """Evaluate every coefficient at ``A = a``; result has int coefficients."""
    _check_unit(a)
    return ModuleElement(
        {m: (lp_eval(c, a) if isinstance(c, LaurentPoly) else c)
         for m, c in x._terms.items()})


def me_mirror(x: ModuleElement) -> ModuleElement:
    return ModuleElement({m: lp_mirror(c) for m, c in x._terms.items()})


def me_is_scalar(x: ModuleElement) -> bool:
    return all(m == SCALAR for m in x._terms)


def _format_coefficient(c) -> str:
    return format_poly(c) if isinstance(c, LaurentPoly) else str(c)


def format_element(x: ModuleElement) -> str:
    """Deterministic text form; the scalar monomial prints as its coefficient."""
    if x.is_zero():
        return "0"
    parts = []
    for m, c in x.items():
        coeff = _format_coefficient(c)
        if m == SCALAR:
            parts.append(coeff)
        else:
            parts.append(f"({coeff})*{format_monomial(m)}")
    return " + ".join(parts)
