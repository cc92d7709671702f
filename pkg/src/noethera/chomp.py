"""Positions of transfinite chomp on the board w x alpha.

A finite constraint set ``S`` of points ``(d, a)`` determines the position
``{y : y < x in some coordinate for every x in S}``.  Column ``d`` of that
position has height ``min({alpha} | {a : (d', a) in S, d' <= d})``, so every
position is a staircase that is weakly decreasing and eventually constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Tuple

from .ordinal import (
    OMEGA, ZERO, Ordinal, left_sub, nat_prod, nat_sum, parse_ordinal,
    format_ordinal,
)

__all__ = [
    "ConstraintSet", "Staircase", "normalize", "position_lt", "size", "chop",
    "parse_cuts", "parse_points", "format_cuts", "IllegalMove",
]

Point = Tuple[int, Ordinal]


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True)
class ConstraintSet:
    alpha: Ordinal
    pairs: FrozenSet[Point] = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset((int(d), Ordinal.from_int(a) if isinstance(a, int) else a)
                          for d, a in self.pairs)
        for d, a in pairs:
            if d < 0:
                raise ValueError(f"negative column {d}")
            if not a < self.alpha:
                raise ValueError(f"height {a} is not below alpha={self.alpha}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def empty(cls, alpha) -> "ConstraintSet":
        return cls(_ord(alpha), frozenset())

    def with_point(self, d: int, a) -> "ConstraintSet":
        return ConstraintSet(self.alpha, self.pairs | {(d, _ord(a))})


@dataclass(frozen=True)
class Staircase:
    """Column heights as runs: ``steps`` are (width, height) with strictly
    decreasing heights, followed by ``tail_height`` for all remaining columns."""

    steps: Tuple[Tuple[int, Ordinal], ...]
    tail_height: Ordinal

    def height(self, d: int) -> Ordinal:
        for width, h in self.steps:
            if d < width:
                return h
            d -= width
        return self.tail_height

    def breakpoints(self) -> List[int]:
        out, at = [0], 0
        for width, _ in self.steps:
            at += width
            out.append(at)
        return out

    def contains(self, d: int, a) -> bool:
        return _ord(a) < self.height(d)

    def constraints(self, alpha) -> ConstraintSet:
        """A constraint set whose position is this staircase."""
        alpha = _ord(alpha)
        pts, at = set(), 0
        for width, h in self.steps + ((0, self.tail_height),):
            if h != alpha:
                pts.add((at, h))
            at += width
        return ConstraintSet(alpha, frozenset(pts))


def _ord(x) -> Ordinal:
    return Ordinal.from_int(x) if isinstance(x, int) else x


def normalize(s: ConstraintSet) -> Staircase:
    cuts = {}
    for d, a in s.pairs:
        if d not in cuts or a < cuts[d]:
            cuts[d] = a
    runs = []  # (start column, height)
    current = s.alpha
    runs.append((0, current))
    for d in sorted(cuts):
        a = cuts[d]
        if a < current:
            current = a
            if runs[-1][0] == d:
                runs[-1] = (d, a)
            else:
                runs.append((d, a))
    steps = tuple(
        (runs[i + 1][0] - runs[i][0], runs[i][1]) for i in range(len(runs) - 1)
    )
    return Staircase(steps, runs[-1][1])


def _check_alpha(s: ConstraintSet, t: ConstraintSet):
    if s.alpha != t.alpha:
        raise ValueError(f"board mismatch: alpha {s.alpha} vs {t.alpha}")


def position_lt(s: ConstraintSet, t: ConstraintSet) -> bool:
    """Strict inclusion of the position of ``s`` in that of ``t``."""
    _check_alpha(s, t)
    ss, ts = normalize(s), normalize(t)
    strict = False
    for d in sorted(set(ss.breakpoints()) | set(ts.breakpoints())):
        hs, ht = ss.height(d), ts.height(d)
        if ht < hs:
            return False
        if hs < ht:
            strict = True
    return strict


def staircase_size(st: Staircase) -> Ordinal:
    """Natural sum over horizontal bands of (band width) (x) (band thickness)."""
    heights = [h for _, h in st.steps] + [st.tail_height]
    total = ZERO
    width = 0
    for i, (w, h) in enumerate(st.steps):
        width += w
        total = nat_sum(total, nat_prod(width, left_sub(heights[i + 1], h)))
    return nat_sum(total, nat_prod(OMEGA, st.tail_height))


def size(s: ConstraintSet) -> Ordinal:
    return staircase_size(normalize(s))


def chop(s: ConstraintSet, point) -> ConstraintSet:
    d, a = point
    a = _ord(a)
    if not normalize(s).contains(d, a):
        raise IllegalMove(f"({d}, {format_ordinal(a)}) is outside the position")
    return s.with_point(d, a)


def parse_points(text: str) -> List[Point]:
    """``"0:5,3:2"`` -> [(0, 5), (3, 2)], in the given order."""
    pts = []
    text = text.strip()
    if text:
        for item in text.split(","):
            d, sep, a = item.partition(":")
            d = d.strip()
            if not sep or not d.isdigit():
                raise ValueError(f"expected 'column:height', got {item.strip()!r}")
            pts.append((int(d), parse_ordinal(a)))
    return pts


def parse_cuts(text: str, alpha) -> ConstraintSet:
    """``"0:5,3:2"`` -> ConstraintSet on the board w x alpha."""
    return ConstraintSet(_ord(alpha), frozenset(parse_points(text)))


def format_cuts(s: ConstraintSet) -> str:
    return ",".join(f"{d}:{format_ordinal(a)}" for d, a in sorted(s.pairs, key=lambda p: (p[0], p[1].terms)))
