"""Shift automorphisms, the conjugators h_{k,n} and sigma_m, commutators."""

from __future__ import annotations

from functools import lru_cache
from typing import Union

from .plmap import REAL, Interval, PLMap, dyadic_interpolate
from .words import Word, WordError

__all__ = ["rho", "support_bound", "commutator", "make_h", "sigma"]


def _require_G(w: Word):
    for sym in w.symbols():
        if sym.family != "G":
            raise WordError(f"expected a word in G[i], found {sym}")


def rho(n: int, w: Word) -> Word:
    """Shift every index: ``G[i] -> G[i+n]``."""
    _require_G(w)
    return Word(tuple((sym.shifted(n), e) for sym, e in w.letters))


def support_bound(w: Word) -> int:
    """Largest absolute index occurring in ``w`` (0 for the empty word)."""
    _require_G(w)
    return max((abs(sym.index) for sym in w.symbols()), default=0)


Element = Union[Word, PLMap]


def commutator(u: Element, v: Element) -> Element:
    """``u v u^-1 v^-1``."""
    if isinstance(u, Word) and isinstance(v, Word):
        return u * v * ~u * ~v
    if isinstance(u, PLMap) and isinstance(v, PLMap):
        return u * v * u.inverse() * v.inverse()
    raise TypeError("commutator needs two words or two maps")


@lru_cache(maxsize=None)
def make_h(k: int, n: int) -> PLMap:
    """A compactly supported map with ``h^-1 G_i h = G_{i+n}`` for ``|i| <= k``.

    ``h`` is ``t -> t - n`` on ``[n-k-1, n+k+1]``, the identity outside
    ``[-k-2, n+k+2]``, and the deterministic dyadic interpolation on the two
    ramps in between.
    """
    if k < 0 or n < 1:
        raise ValueError(f"make_h needs k >= 0 and n >= 1, got k={k}, n={n}")
    left = dyadic_interpolate(Interval(-k - 2, n - k - 1), Interval(-k - 2, -k - 1))
    right = dyadic_interpolate(Interval(n + k + 1, n + k + 2), Interval(k + 1, n + k + 2))
    # ramp endpoints are shared with the plateau
    return PLMap(REAL, left + right)


def sigma(m: int, w: Element) -> Element:
    """Conjugation by ``h_{m,2m+2}^-1``, i.e. ``f -> h^-1 f h``.

    On words this is only defined for support bound ``<= m``, where it is
    the index shift by ``2m+2``.
    """
    if m < 1:
        raise ValueError(f"sigma_m needs m >= 1, got {m}")
    if isinstance(w, Word):
        if support_bound(w) > m:
            raise WordError(f"sigma_{m} on words needs support bound <= {m}")
        return rho(2 * m + 2, w)
    h = make_h(m, 2 * m + 2)
    return h.inverse() * w * h
