"""sl(3) web bracket for virtual and free link diagrams.

Webs reduce confluently to a module over Laurent polynomials in ``A``; the
state sum of a signed Gauss code over oriented and unoriented smoothings
gives a bracket whose normalization is a virtual link invariant.
"""

from .algebra import (LaurentPoly, ModuleElement, bigon_value, format_element, format_poly,
                      loop_value, lp_eval, lp_mirror, me_add, me_mirror, me_mul)
from .bracket import (bracket, classicality_obstruction, free_bracket, minimality_certificate,
                      normalized_bracket, report)
from .canon import CanonicalWeb, canonical_form, is_isomorphic
from .diagram import GaussCode, GaussCodeError, mirror, parse_gauss, split_union, writhe
from .reduce import Reducer, ReductionStrategy, normal_form
from .web import Web, WebError

__all__ = [
    "LaurentPoly", "ModuleElement", "bigon_value", "format_element", "format_poly",
    "loop_value", "lp_eval", "lp_mirror", "me_add", "me_mirror", "me_mul",
    "bracket", "classicality_obstruction", "free_bracket", "minimality_certificate",
    "normalized_bracket", "report", "CanonicalWeb", "canonical_form", "is_isomorphic",
    "GaussCode", "GaussCodeError", "mirror", "parse_gauss", "split_union", "writhe",
    "Reducer", "ReductionStrategy", "normal_form", "Web", "WebError",
]
