"""Piecewise-linear homeomorphisms with dyadic breakpoints and power-of-2 slopes.

Two domains are supported:

* ``unit`` -- homeomorphisms of [0, 1].  Only the interior breakpoints are
  stored; (0, 0) and (1, 1) are implicit.
* ``real`` -- homeomorphisms of the real line that are integer translations
  outside a compact interval.  The breakpoints are stored together with the
  two integer tails: ``f(t) = t + left_tail`` left of the first breakpoint and
  ``f(t) = t + right_tail`` right of the last one.

Products follow the convention ``(u * v)(t) == u(v(t))``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .dyadic import Dyadic, DyadicLike, as_dyadic

__all__ = [
    "UNIT",
    "REAL",
    "PLMap",
    "Interval",
    "PLMapError",
    "identity",
    "translation",
    "compose",
    "inverse",
    "evaluate",
    "equals",
    "support",
    "membership",
    "dyadic_interpolate",
    "extend_to_real",
    "restrict_to_unit",
    "GROUP_CLASSES",
]

UNIT = "unit"
REAL = "real"

Point = Tuple[Dyadic, Dyadic]

ZERO = Dyadic(0)
ONE = Dyadic(1)


class PLMapError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Interval:
    lo: Dyadic
    hi: Dyadic

    def __post_init__(self):
        object.__setattr__(self, "lo", as_dyadic(self.lo))
        object.__setattr__(self, "hi", as_dyadic(self.hi))
        if not self.lo < self.hi:
            raise PLMapError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Dyadic:
        return self.hi - self.lo

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _slope_exp(p: Point, q: Point) -> int:
    e = (q[1] - p[1]).log2_ratio(q[0] - p[0])
    if e is None:
        raise PLMapError(f"slope between {_fmt_pt(p)} and {_fmt_pt(q)} is not a power of 2")
    return e


def _fmt_pt(p: Point) -> str:
    return f"({p[0]}, {p[1]})"


class PLMap:
    """An element of F (``unit``) or of its real-line model (``real``).

    The constructor validates and canonicalizes: coordinates must be
    strictly increasing, every slope a power of 2, and breakpoints where the
    slope does not change are dropped.
    """

    __slots__ = ("domain", "points", "left_tail", "right_tail", "_xs", "_slopes", "_hash")

    def __init__(
        self,
        domain: str,
        points: Iterable[Tuple[DyadicLike, DyadicLike]] = (),
        left_tail: int = 0,
        right_tail: int = 0,
    ):
        if domain not in (UNIT, REAL):
            raise PLMapError(f"unknown domain {domain!r}")
        pts = [(as_dyadic(x), as_dyadic(y)) for x, y in points]
        for p, q in zip(pts, pts[1:]):
            if not (p[0] < q[0] and p[1] < q[1]):
                raise PLMapError(f"breakpoints not strictly increasing at {_fmt_pt(p)}, {_fmt_pt(q)}")

        if domain == UNIT:
            if left_tail or right_tail:
                raise PLMapError("unit-interval maps have no tails")
            if pts and pts[0][0] == ZERO:
                if pts[0][1] != ZERO:
                    raise PLMapError("unit-interval map must fix 0")
                pts.pop(0)
            if pts and pts[-1][0] == ONE:
                if pts[-1][1] != ONE:
                    raise PLMapError("unit-interval map must fix 1")
                pts.pop()
            for x, y in pts:
                if not (ZERO < x < ONE and ZERO < y < ONE):
                    raise PLMapError(f"breakpoint {_fmt_pt((x, y))} outside the open unit square")
            nodes = [(ZERO, ZERO)] + pts + [(ONE, ONE)]
            slopes = [_slope_exp(p, q) for p, q in zip(nodes, nodes[1:])]
            keep = [pts[i] for i in range(len(pts)) if slopes[i] != slopes[i + 1]]
        else:
            if not isinstance(left_tail, int) or not isinstance(right_tail, int):
                raise PLMapError("tails must be integers")
            if not pts:
                if left_tail != right_tail:
                    raise PLMapError("a map without breakpoints needs equal tails")
            else:
                if pts[0][1] - pts[0][0] != left_tail:
                    raise PLMapError(f"first breakpoint {_fmt_pt(pts[0])} inconsistent with left tail {left_tail}")
                if pts[-1][1] - pts[-1][0] != right_tail:
                    raise PLMapError(f"last breakpoint {_fmt_pt(pts[-1])} inconsistent with right tail {right_tail}")
            slopes = [0] + [_slope_exp(p, q) for p, q in zip(pts, pts[1:])] + [0]
            keep = [pts[i] for i in range(len(pts)) if slopes[i] != slopes[i + 1]]

        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "points", tuple(keep))
        object.__setattr__(self, "left_tail", left_tail)
        object.__setattr__(self, "right_tail", right_tail)
        self._index()

    def _index(self):
        nodes = self.nodes()
        object.__setattr__(self, "_xs", [p[0] for p in nodes])
        object.__setattr__(self, "_slopes", [_slope_exp(p, q) for p, q in zip(nodes, nodes[1:])])
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, domain, points, left_tail=0, right_tail=0) -> "PLMap":
        # points already canonical
        self = object.__new__(cls)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "left_tail", left_tail)
        object.__setattr__(self, "right_tail", right_tail)
        self._index()
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PLMap is immutable")

    def nodes(self) -> Tuple[Point, ...]:
        """Breakpoints including the pinned endpoints of a unit-interval map."""
        if self.domain == UNIT:
            return ((ZERO, ZERO),) + self.points + ((ONE, ONE),)
        return self.points

    # -- evaluation -------------------------------------------------------

    def __call__(self, t: DyadicLike) -> Dyadic:
        t = as_dyadic(t)
        xs = self._xs
        if self.domain == UNIT:
            if not ZERO <= t <= ONE:
                raise PLMapError(f"{t} outside [0, 1]")
            i = min(bisect_right(xs, t) - 1, len(xs) - 2)
        else:
            if not xs or t <= xs[0]:
                return t + self.left_tail
            if t >= xs[-1]:
                return t + self.right_tail
            i = bisect_right(xs, t) - 1
        x0, y0 = self.nodes()[i]
        return y0 + (t - x0).mul_pow2(self._slopes[i])

    def slope_at_left(self) -> int:
        """log2 of the slope of the leftmost piece (0 for real maps)."""
        return self._slopes[0] if self.domain == UNIT else 0

    def slope_at_right(self) -> int:
        return self._slopes[-1] if self.domain == UNIT else 0

    # -- group structure --------------------------------------------------

    def inverse(self) -> "PLMap":
        return PLMap._trusted(
            self.domain, [(y, x) for x, y in self.points], -self.left_tail, -self.right_tail
        )

    def __mul__(self, other: "PLMap") -> "PLMap":
        if not isinstance(other, PLMap):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, e: int) -> "PLMap":
        if e < 0:
            return self.inverse() ** -e
        result = identity(self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_identity(self) -> bool:
        return not self.points and self.left_tail == 0 and self.right_tail == 0

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.left_tail == other.left_tail
            and self.right_tail == other.right_tail
            and self.points == other.points
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.domain, self.left_tail, self.right_tail, self.points)))
        return self._hash

    def __repr__(self):
        pts = ", ".join(_fmt_pt(p) for p in self.points)
        if self.domain == UNIT:
            return f"PLMap(unit, [{pts}])"
        return f"PLMap(real, [{pts}], tails=({self.left_tail}, {self.right_tail}))"

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"domain: {self.domain}"]
        if self.domain == REAL:
            lines.append(f"tails: {self.left_tail} {self.right_tail}")
        lines.extend(f"bp: {x} {y}" for x, y in self.points)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PLMap":
        domain = None
        tails = (0, 0)
        pts = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            if not sep:
                raise PLMapError(f"line {lineno}: expected 'key: value'")
            key, fields = key.strip(), rest.split()
            if key == "domain":
                if domain is not None or len(fields) != 1:
                    raise PLMapError(f"line {lineno}: bad domain line")
                domain = fields[0]
            elif key == "tails":
                if len(fields) != 2:
                    raise PLMapError(f"line {lineno}: tails needs two integers")
                try:
                    tails = (int(fields[0]), int(fields[1]))
                except ValueError:
                    raise PLMapError(f"line {lineno}: tails must be integers") from None
            elif key == "bp":
                if len(fields) != 2:
                    raise PLMapError(f"line {lineno}: bp needs two dyadics")
                pts.append((Dyadic.parse(fields[0]), Dyadic.parse(fields[1])))
            else:
                raise PLMapError(f"line {lineno}: unknown key {key!r}")
        if domain is None:
            raise PLMapError("missing domain line")
        if domain == UNIT and tails != (0, 0):
            raise PLMapError("unit-interval maps have no tails")
        return cls(domain, pts, *tails)


def identity(domain: str = REAL) -> PLMap:
    return PLMap._trusted(domain, ())


def translation(c: int) -> PLMap:
    return PLMap._trusted(REAL, (), c, c)


def compose(u: PLMap, v: PLMap) -> PLMap:
    """The product ``u * v``, i.e. ``t -> u(v(t))``."""
    if u.domain != v.domain:
        raise PLMapError(f"cannot compose {u.domain} map with {v.domain} map")
    if v.is_identity():
        return u
    if u.is_identity():
        return v
    vinv = v.inverse()
    xs = {x for x, _ in v.points}
    xs.update(vinv(x) for x, _ in u.points)
    pts = [(x, u(v(x))) for x in sorted(xs)]
    if u.domain == UNIT:
        return PLMap(UNIT, pts)
    return PLMap(REAL, pts, u.left_tail + v.left_tail, u.right_tail + v.right_tail)


def inverse(f: PLMap) -> PLMap:
    return f.inverse()


def evaluate(f: PLMap, t: DyadicLike) -> Dyadic:
    return f(t)


def equals(f: PLMap, g: PLMap) -> bool:
    if f.domain != g.domain:
        raise PLMapError(f"cannot compare {f.domain} map with {g.domain} map")
    return f == g


def support(f: PLMap) -> Optional[Interval]:
    """Smallest closed interval outside which ``f`` is the identity; None if ``f`` is."""
    if f.domain == REAL and (f.left_tail or f.right_tail):
        raise PLMapError("non-compact support")
    nodes = f.nodes()
    moving = [
        (p[0], q[0])
        for p, q in zip(nodes, nodes[1:])
        if p[0] != p[1] or q[0] != q[1]
    ]
    if not moving:
        return None
    return Interval(moving[0][0], moving[-1][1])


GROUP_CLASSES = ("F", "F'", "D", "Ft", "Ft'", "F(a,b)")


def membership(f: PLMap, cls: str, interval: Optional[Interval] = None) -> bool:
    """Exact membership predicate.

    ``F``, ``F'`` and ``D`` take unit-interval maps; ``Ft`` and ``Ft'`` take
    real-line maps.  ``D`` also accepts a real-line map, meaning the image of
    D under the standard conjugation to the line (right tail 0).  ``F(a,b)``
    accepts either domain and needs ``interval``.
    """
    if cls in ("F", "F'") and f.domain != UNIT:
        raise PLMapError(f"class {cls} expects a unit-interval map")
    if cls in ("Ft", "Ft'") and f.domain != REAL:
        raise PLMapError(f"class {cls} expects a real-line map")
    if cls in ("F", "Ft"):
        return True
    if cls == "Ft'":
        return f.left_tail == 0 and f.right_tail == 0
    if cls == "F'":
        # pinned endpoints: slope 1 at an end means identity near it
        return f.slope_at_left() == 0 and f.slope_at_right() == 0
    if cls == "D":
        if f.domain == REAL:
            return f.right_tail == 0
        return f.slope_at_right() == 0
    if cls == "F(a,b)":
        if interval is None:
            raise PLMapError("F(a,b) needs an interval")
        if f.domain == REAL and (f.left_tail or f.right_tail):
            return False
        s = support(f)
        return s is None or (interval.lo <= s.lo and s.hi <= interval.hi)
    raise PLMapError(f"unknown class {cls!r}")


def _binary_terms(length: Dyadic) -> list:
    """Powers of two summing to ``length``, largest first, as exponents."""
    n, e = length.num, length.exp
    return [b - e for b in range(n.bit_length() - 1, -1, -1) if n >> b & 1]


def dyadic_interpolate(src: Interval, dst: Interval) -> Tuple[Point, ...]:
    """Deterministic order-preserving PL bijection ``src -> dst``.

    Both lengths are written as decreasing sums of powers of two; the
    largest (leftmost on ties) term of the shorter list is halved until the
    counts agree, and the pieces are then matched in order.  Returns the
    breakpoints from ``(src.lo, dst.lo)`` to ``(src.hi, dst.hi)`` with
    collinear interior points removed.
    """
    a, b = _binary_terms(src.length), _binary_terms(dst.length)
    while len(a) != len(b):
        short = a if len(a) < len(b) else b
        # the list stays sorted, so the largest term is always first
        e = short.pop(0)
        short[:0] = [e - 1, e - 1]
    pts = [(src.lo, dst.lo)]
    x, y = src.lo, dst.lo
    for ea, eb in zip(a, b):
        x, y = x + Dyadic(1, -ea), y + Dyadic(1, -eb)
        pts.append((x, y))
    out = [pts[0]]
    for i in range(1, len(pts) - 1):
        if a[i - 1] - b[i - 1] != a[i] - b[i]:
            out.append(pts[i])
    out.append(pts[-1])
    return tuple(out)


def extend_to_real(f: PLMap) -> PLMap:
    """The extension of a unit-interval map by the identity outside [0, 1]."""
    if f.domain != UNIT:
        raise PLMapError("expected a unit-interval map")
    return PLMap(REAL, f.nodes() if f.points else ())


def restrict_to_unit(g: PLMap) -> PLMap:
    """Inverse of :func:`extend_to_real`; ``g`` must be supported in [0, 1]."""
    if g.domain != REAL:
        raise PLMapError("expected a real-line map")
    s = support(g)
    if s is None:
        return identity(UNIT)
    if s.lo < ZERO or s.hi > ONE:
        raise PLMapError(f"support {s} not inside [0, 1]")
    return PLMap(UNIT, g.points)

