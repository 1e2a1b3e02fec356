"""Named generator families and the conjugations between the two models of F.

Families on the unit interval: ``x_n`` and the finite family ``g_k`` at level
``n`` (``g_k = x_k x_{k+1}^-1`` for k < n, ``g_n = x_n``).

Families on the real line: ``xt_n`` (the conjugated ``x_n``), ``y_n`` (the
conjugated extension of ``x_n`` to all integers), ``Gt_i = y_i y_{i+1}^-1``
and the translation-based family ``s, rx_i, rG_i``.

The conjugating charts:

* ``phi``: (0, 1) -> R, affine between the nodes ``t_k -> k``, k in Z,
  where ``t_k = 1 - 2^-(k+1)`` for k >= 0 and ``t_k = 2^(k-1)`` for k < 0.
* ``phi_n``: R -> R, ``s_k -> k`` for k = -1..n+1 with ``s_k = 1 - 2^-(k+1)``
  and ``s_{n+1} = 1``, translation by -1 left of 0 and by n right of 1.
* ``phi_inf``: [0, 1) -> [-1, inf), ``gamma_k -> k`` for k >= -1 with
  ``gamma_k = 1 - 2^-(k+1)``.

``phi`` and ``phi_inf`` have infinitely many breakpoints, so conjugation by
them is done through the closed-form chart on the finitely many cells where
the conjugate is not a translation.  ``phi_n`` is an honest element of the
real-line group and is used as a :class:`PLMap`.
"""

from __future__ import annotations

from functools import lru_cache

from .dyadic import Dyadic, DyadicLike, as_dyadic, pow2
from .plmap import (
    REAL,
    UNIT,
    Interval,
    PLMap,
    PLMapError,
    extend_to_real,
    identity,
    membership,
    restrict_to_unit,
    translation,
)

ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def _ceil_log2(d: Dyadic) -> int:
    return (d.num - 1).bit_length() - d.exp


# -- charts ---------------------------------------------------------------


def t_node(k: int) -> Dyadic:
    """The node ``t_k`` with ``phi(t_k) = k``."""
    return ONE - pow2(-k - 1) if k >= 0 else pow2(k - 1)


def s_node(k: int, n: int) -> Dyadic:
    """The node ``s_k`` with ``phi_n(s_k) = k``, for -1 <= k <= n+1."""
    if not -1 <= k <= n + 1:
        raise ValueError(f"s_k defined for -1 <= k <= {n + 1}")
    return ONE if k == n + 1 else ONE - pow2(-k - 1)


def gamma_node(k: int) -> Dyadic:
    if k < -1:
        raise ValueError("gamma_k defined for k >= -1")
    return ONE - pow2(-k - 1)


def phi(t: DyadicLike) -> Dyadic:
    t = as_dyadic(t)
    if not Dyadic(0) < t < ONE:
        raise ValueError(f"phi is defined on (0, 1), got {t}")
    if t >= HALF:
        d = ONE - t
        n = -_ceil_log2(d) - 1
        return Dyadic(n + 2) - d.mul_pow2(n + 2)
    n = _ceil_log2(t)
    return Dyadic(n - 1) + t.mul_pow2(1 - n)


def phi_inv(u: DyadicLike) -> Dyadic:
    u = as_dyadic(u)
    n = u.floor()
    if n >= 0:
        return t_node(n) + (u - n).mul_pow2(-n - 2)
    return (u - n + 1).mul_pow2(n - 1)


def phi_inf(t: DyadicLike) -> Dyadic:
    t = as_dyadic(t)
    if not Dyadic(0) <= t < ONE:
        raise ValueError(f"phi_inf is defined on [0, 1), got {t}")
    return phi(t) if t >= HALF else t.mul_pow2(1) - 1


def phi_inf_inv(u: DyadicLike) -> Dyadic:
    u = as_dyadic(u)
    if u < -1:
        raise ValueError(f"phi_inf^-1 is defined on [-1, inf), got {u}")
    return phi_inv(u) if u >= 0 else (u + 1).mul_pow2(-1)


@lru_cache(maxsize=None)
def phi_n_map(n: int) -> PLMap:
    """``phi_n`` as an element of the real-line group."""
    if n < 0:
        raise ValueError("phi_n needs n >= 0")
    return PLMap(REAL, [(s_node(k, n), Dyadic(k)) for k in range(-1, n + 2)], -1, n)


# -- unit-interval families -----------------------------------------------


@lru_cache(maxsize=None)
def gen_x(n: int) -> PLMap:
    """The generator ``x_n`` of F as a map of [0, 1]; ``x_0 = A``, ``x_1 = B``."""
    if n < 0:
        raise ValueError(f"x_n needs n >= 0, got {n}")
    a = ONE - pow2(-n)
    b = ONE - pow2(-n - 1)
    c = ONE - pow2(-n - 2)
    # pieces: t | t/2 + a/2 | t - 2^-(n+2) | 2t - 1
    return PLMap(UNIT, [(a, a), (b, (b + a).mul_pow2(-1)), (c, c - pow2(-n - 2))])


@lru_cache(maxsize=None)
def gen_g_finite(k: int, n: int) -> PLMap:
    if n < 4:
        raise ValueError(f"finite g family needs level n >= 4, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"g_k at level {n} needs 0 <= k <= {n}, got {k}")
    if k == n:
        return gen_x(n)
    return gen_x(k) * gen_x(k + 1).inverse()


# -- real-line families ---------------------------------------------------


@lru_cache(maxsize=None)
def gen_xt(n: int) -> PLMap:
    if n < 0:
        raise ValueError(f"xt_n needs n >= 0, got {n}")
    if n == 0:
        return translation(-1)
    return PLMap(REAL, [(n - 1, n - 1), (n + 1, n)], 0, -1)


@lru_cache(maxsize=None)
def gen_y(n: int) -> PLMap:
    """``y_n``, from ``y_1 = xt_1`` and ``y_{n+1} = xt_0^-1 y_n xt_0``."""
    s = gen_xt(0)
    if n == 1:
        return gen_xt(1)
    if n > 1:
        return s.inverse() * gen_y(n - 1) * s
    return s * gen_y(n + 1) * s.inverse()


@lru_cache(maxsize=None)
def gen_Gt(i: int) -> PLMap:
    return gen_y(i) * gen_y(i + 1).inverse()


def gen_rs() -> PLMap:
    return translation(-1)


@lru_cache(maxsize=None)
def gen_rx(i: int) -> PLMap:
    """``s^-i x_0 s^i`` where ``x_0`` is t, t/2, t-1 with breakpoints 0 and 2."""
    x0 = PLMap(REAL, [(0, 0), (2, 1)], 0, -1)
    s = gen_rs()
    return (s ** -i) * x0 * (s ** i)


@lru_cache(maxsize=None)
def gen_rG(i: int) -> PLMap:
    return gen_rx(i) * gen_rx(i + 1).inverse()


def gen_remark(kind: str, i: int = 0) -> PLMap:
    if kind == "s":
        return gen_rs()
    if kind == "x":
        return gen_rx(i)
    if kind == "G":
        return gen_rG(i)
    raise ValueError(f"unknown family member {kind!r}")


# -- conjugations ---------------------------------------------------------


def _dy(values):
    return {as_dyadic(v) for v in values}


def conj_phi(f: PLMap) -> PLMap:
    """``phi f phi^-1``, an element of the real-line group."""
    if f.domain != UNIT:
        raise PLMapError("conj_phi expects an element of F (unit interval)")
    if f.is_identity():
        return identity(REAL)
    a, b = f.slope_at_left(), f.slope_at_right()
    # below t_m the map is t -> 2^a t on the dyadic-scaled part of phi,
    # above t_M it is 1 - 2^b (1 - t) on the other end
    m = min(0, -a)
    while t_node(m) > f.points[0][0]:
        m -= 1
    M = max(0, b)
    while t_node(M) < f.points[-1][0]:
        M += 1
    finv = f.inverse()
    us = _dy(range(m, M + 1))
    us |= {phi(x) for x, _ in f.points}
    us |= {phi(finv(t_node(k))) for k in range(m + a, M - b + 1)}
    pts = [(u, phi(f(phi_inv(u)))) for u in sorted(us)]
    return PLMap(REAL, pts, a, -b)


def conj_phi_inverse(g: PLMap) -> PLMap:
    """``phi^-1 g phi``, an element of F."""
    if g.domain != REAL:
        raise PLMapError("conj_phi_inverse expects a real-line map")
    if g.is_identity():
        return identity(UNIT)
    L, R = g.left_tail, g.right_tail
    m, M = min(0, -L), max(0, -R)
    if g.points:
        m = min(m, g.points[0][0].floor())
        M = max(M, g.points[-1][0].ceil())
    ginv = g.inverse()
    ts = {t_node(k) for k in range(m, M + 1)}
    ts |= {phi_inv(x) for x, _ in g.points}
    ts |= {phi_inv(ginv(Dyadic(k))) for k in range(m + L, M + R + 1)}
    pts = [(t, phi_inv(g(phi(t)))) for t in sorted(ts)]
    return PLMap(UNIT, pts)


def conj_phi_n(f: PLMap, n: int) -> PLMap:
    """``phi_n f' phi_n^-1`` where ``f'`` extends ``f`` by the identity."""
    if n < 4:
        raise ValueError(f"phi_n conjugation needs n >= 4, got {n}")
    if f.domain != UNIT:
        raise PLMapError("conj_phi_n expects an element of F (unit interval)")
    p = phi_n_map(n)
    return p * extend_to_real(f) * p.inverse()


def conj_phi_n_inverse(g: PLMap, n: int) -> PLMap:
    if n < 4:
        raise ValueError(f"phi_n conjugation needs n >= 4, got {n}")
    if g.domain != REAL or not membership(g, "F(a,b)", Interval(-1, n + 1)):
        raise PLMapError(f"expected an element of F(-1, {n + 1})")
    p = phi_n_map(n)
    return restrict_to_unit(p.inverse() * g * p)


def conj_phi_inf(f: PLMap) -> PLMap:
    """``h_f``: ``phi_inf f phi_inf^-1`` on [-1, inf), the identity below -1."""
    if f.domain != UNIT or not membership(f, "D"):
        raise PLMapError("conj_phi_inf expects an element of D")
    if f.is_identity():
        return identity(REAL)
    M = 0
    while gamma_node(M) < f.points[-1][0]:
        M += 1
    finv = f.inverse()
    us = _dy(range(-1, M + 1))
    us |= {phi_inf(x) for x, _ in f.points}
    us |= {phi_inf(finv(gamma_node(k))) for k in range(-1, M + 1)}
    pts = [(u, phi_inf(f(phi_inf_inv(u)))) for u in sorted(us)]
    return PLMap(REAL, pts, 0, 0)


def conj_phi_inf_inverse(h: PLMap) -> PLMap:
    if h.domain != REAL or h.left_tail or h.right_tail:
        raise PLMapError("expected a compactly supported real-line map")
    if h.is_identity():
        return identity(UNIT)
    if h.points[0][0] < -1:
        raise PLMapError("support must lie in [-1, inf)")
    M = h.points[-1][0].ceil()
    hinv = h.inverse()
    ts = {gamma_node(k) for k in range(-1, M + 1)}
    ts |= {phi_inf_inv(x) for x, _ in h.points}
    ts |= {phi_inf_inv(hinv(Dyadic(k))) for k in range(-1, M + 1)}
    pts = [(t, phi_inf_inv(h(phi_inf(t)))) for t in sorted(ts)]
    return PLMap(UNIT, pts)
