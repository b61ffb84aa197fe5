"""Random Reidemeister/virtualization orbits and replayable transcripts.

A transcript is plain text: ``#``-prefixed header lines for the starting
code, mode and seed, then one move per line in :class:`MoveRecord` syntax.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

from .algebra import format_element
from .bracket import free_bracket_pair, normalized_bracket
from .reduce import Reducer
from .diagram import (FREE, GaussCode, MoveRecord, apply_move, canonical_code, lift,
                      local_moves, parse_gauss, random_insertion)


@dataclass
class FuzzResult:
    passed: bool
    transcript: list[str]
    steps: int = 0
    failure: str | None = None
    orbit: list[str] = field(default_factory=list)

    def to_text(self) -> str:
        head = "pass" if self.passed else "fail"
        lines = [f"{head}: {self.steps} moves checked"]
        if self.failure:
            lines.append(self.failure)
        lines.extend(self.transcript)
        return "\n".join(lines)


class _Invariant:
    """Memoized invariant of a code: normalized bracket, or both free values."""

    def __init__(self, free: bool):
        self.free = free
        self._memo: dict = {}
        self._reducer = Reducer()

    def __call__(self, code: GaussCode):
        key = canonical_code(code)
        if key not in self._memo:
            if self.free:
                self._memo[key] = free_bracket_pair(code, reducer=self._reducer)
            else:
                self._memo[key] = (normalized_bracket(code, reducer=self._reducer),)
        return self._memo[key]

    @staticmethod
    def show(value) -> str:
        return " | ".join(format_element(v) for v in value)


def random_move(code: GaussCode, rng: random.Random, *, switches: bool,
                max_crossings: int) -> MoveRecord:
    """Pick a move kind uniformly among those available, then a site."""
    by_kind = defaultdict(list)
    for m in local_moves(code, switches):
        by_kind[m.kind].append(m)
    kinds = sorted(by_kind)
    if code.num_crossings() + 1 <= max_crossings:
        kinds.append("R1+")
    if code.num_crossings() + 2 <= max_crossings:
        kinds.append("R2+")
    kinds.sort()
    kind = rng.choice(kinds)
    if kind in ("R1+", "R2+"):
        return random_insertion(code, kind, rng)
    return rng.choice(by_kind[kind])


def header(code: GaussCode, seed: int | None) -> list[str]:
    lines = [f"# code: {code}", f"# mode: {code.mode}"]
    if seed is not None:
        lines.append(f"# seed: {seed}")
    return lines


def run_fuzz(code: GaussCode, moves: int, seed: int, *, max_crossings: int | None = None,
             invariant: _Invariant | None = None) -> FuzzResult:
    """Apply ``moves`` random moves, checking the invariant after each one.

    Signed codes use the normalized bracket and Z-moves.  Free codes are lifted
    to signed codes and additionally allow crossing switches; the invariant is
    then the pair of specializations at ``A = +1`` and ``A = -1``.
    """
    free = code.mode == FREE
    inv = invariant or _Invariant(free)
    rng = random.Random(seed)
    cur = lift(code) if free else code
    cap = max_crossings if max_crossings is not None else max(cur.num_crossings() + 2, 6)
    transcript = header(code, seed)
    ref = inv(cur)
    orbit = [str(cur)]
    for step in range(moves):
        m = random_move(cur, rng, switches=free, max_crossings=cap)
        cur = apply_move(cur, m)
        transcript.append(str(m))
        orbit.append(str(cur))
        got = inv(cur)
        if got != ref:
            return FuzzResult(False, transcript, step + 1,
                              f"mismatch after move {step + 1} ({m}) at {cur}: "
                              f"expected {inv.show(ref)} got {inv.show(got)}", orbit)
    return FuzzResult(True, transcript, moves, None, orbit)


def parse_transcript(text: str) -> tuple[GaussCode, list[MoveRecord], int | None]:
    code_text, mode, seed = None, None, None
    moves = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            key, val = key.strip(), val.strip()
            if key == "code":
                code_text = val
            elif key == "mode":
                mode = val
            elif key == "seed":
                seed = int(val)
            continue
        if line in ("pass", "fail") or line.startswith(("pass:", "fail:", "mismatch")):
            continue
        moves.append(MoveRecord.parse(line))
    if code_text is None:
        raise ValueError("transcript has no '# code:' header")
    code = parse_gauss(code_text)
    if mode == FREE and code.num_crossings() == 0:
        code = code.forget()
    if mode and mode != code.mode:
        raise ValueError(f"transcript mode {mode} does not match its code")
    return code, moves, seed


def replay(text: str) -> FuzzResult:
    """Re-run a transcript move for move, checking the invariant throughout."""
    code, moves, seed = parse_transcript(text)
    free = code.mode == FREE
    inv = _Invariant(free)
    cur = lift(code) if free else code
    ref = inv(cur)
    transcript = header(code, seed)
    orbit = [str(cur)]
    for step, m in enumerate(moves):
        cur = apply_move(cur, m)
        transcript.append(str(m))
        orbit.append(str(cur))
        got = inv(cur)
        if got != ref:
            return FuzzResult(False, transcript, step + 1,
                              f"mismatch after move {step + 1} ({m}) at {cur}: "
                              f"expected {inv.show(ref)} got {inv.show(got)}", orbit)
    return FuzzResult(True, transcript, len(moves), None, orbit)
