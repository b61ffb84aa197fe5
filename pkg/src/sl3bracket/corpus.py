"""Named diagrams used by the CLI and the test suites."""

from __future__ import annotations

from .diagram import FREE, GaussCode, Passage, lift, parse_gauss

UNKNOT = ""
POSITIVE_KINK = "O1+,U1+"
NEGATIVE_KINK = "O1-,U1-"
R2_UNKNOT = "O1+,U2-,U1+,O2-"
TREFOIL = "O1+,U2+,O3+,U1+,O2+,U3+"
FIGURE_EIGHT = "O1+,U4-,O3-,U1+,O2+,U3-,O4-,U2+"
VIRTUAL_TREFOIL = "O1+,O2+,U1+,U2+"
HOPF = "O1+,U2+;U1+,O2+"
VIRTUAL_HOPF = "O1+;U1+"
WHITEHEAD_LIKE = "O1+,U2-,O3+,U4-;U1+,O2-,U3+,O4-"


def ngon_free(n: int) -> GaussCode:
    """Free knot whose chord i is linked with exactly chords i-1 and i+1."""
    if n < 3:
        raise ValueError("the n-gon family starts at n = 3")
    seq = []
    for i in range(1, n + 1):
        seq += [i, i - 1 if i > 1 else n]
    return GaussCode((tuple(Passage(k) for k in seq),), FREE)


def ngon_signed(n: int, sign: int = 1) -> GaussCode:
    return lift(ngon_free(n), sign)


def braid_closure(word: list[int], strands: int) -> GaussCode:
    """Closure of a braid word; ``i`` is sigma_i and ``-i`` its inverse.

    Strands run downward.  In sigma_i the strand moving from position i+1 to
    i passes over and the crossing is positive; sigma_i^-1 is the mirror.
    """
    if any(not 1 <= abs(g) < strands for g in word):
        raise ValueError(f"generators must lie in 1..{strands - 1}")
    at = list(range(strands))            # position -> strand
    passes: list[list] = [[] for _ in range(strands)]
    for k, g in enumerate(word, start=1):
        i = abs(g) - 1
        sign = 1 if g > 0 else -1
        left, right = at[i], at[i + 1]   # right moves left, left moves right
        over, under = (right, left) if g > 0 else (left, right)
        passes[over].append(Passage(k, "O", sign))
        passes[under].append(Passage(k, "U", sign))
        at[i], at[i + 1] = right, left
    # strand s ends at the position where strand at[...] starts next round
    succ = {at[p]: p for p in range(strands)}
    comps, seen = [], set()
    for s0 in range(strands):
        if s0 in seen:
            continue
        seq, s = [], s0
        while s not in seen:
            seen.add(s)
            seq += passes[s]
            s = succ[s]
        comps.append(tuple(seq))
    return GaussCode(tuple(comps))


CLASSICAL = {
    "unknot": UNKNOT,
    "positive-kink": POSITIVE_KINK,
    "negative-kink": NEGATIVE_KINK,
    "r2-unknot": R2_UNKNOT,
    "trefoil": TREFOIL,
    "figure-eight": FIGURE_EIGHT,
    "hopf": HOPF,
}


def named(name: str) -> GaussCode:
    """Look up ``trefoil``, ``K7``, ``K7-free`` and friends."""
    table = {**CLASSICAL, "virtual-trefoil": VIRTUAL_TREFOIL,
             "virtual-hopf": VIRTUAL_HOPF, "whitehead-like": WHITEHEAD_LIKE}
    if name in table:
        return parse_gauss(table[name])
    if name.startswith("K") and name[1:].split("-")[0].isdigit():
        n = int(name[1:].split("-")[0])
        return ngon_free(n) if name.endswith("-free") else ngon_signed(n)
    raise KeyError(name)


def invariance_corpus() -> dict[str, GaussCode]:
    """At least twenty signed codes: classical, virtual, n-gons and links."""
    out = {name: parse_gauss(code) for name, code in CLASSICAL.items()}
    out["virtual-trefoil"] = parse_gauss(VIRTUAL_TREFOIL)
    out["virtual-hopf"] = parse_gauss(VIRTUAL_HOPF)
    out["whitehead-like"] = parse_gauss(WHITEHEAD_LIKE)
    out["two-unknots"] = parse_gauss(";")
    out["kink-and-circle"] = parse_gauss("O1+,U1+;")
    out["trefoil-mixed"] = parse_gauss("O1+,U2-,O3+,U1+,O2-,U3+")
    out["virtual-knot-3"] = parse_gauss("O1-,U2+,O3+,U1-,U3+,O2+")
    for n in range(5, 10):
        out[f"K{n}"] = ngon_signed(n)
    out["K5-neg"] = ngon_signed(5, -1)
    return out
