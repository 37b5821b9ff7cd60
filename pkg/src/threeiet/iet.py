"""Exact three-interval exchange with permutation (3,2,1) and its codings.

For parameters ``(eps, l, c)`` the domain ``[c, c+l)`` splits into

    I_A = [c, c+l-1+eps)        T(x) = x + 1 - eps
    I_B = [c+l-1+eps, c+eps)    T(x) = x + 1 - 2*eps
    I_C = [c+eps, c+l)          T(x) = x - eps

and the images are ``T(I_C) = [c, c+l-eps)``, ``T(I_B) = [c+l-eps, c+1-eps)``,
``T(I_A) = [c+1-eps, c+l)``, which gives the inverse branch by branch.
Orbits always start at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParams, MixedFields, OutsideDomain
from .qfield import Quadratic, as_quadratic, in_Z_eps
from .words import BINARY, TERNARY, BiWindow


@dataclass(frozen=True)
class IetParams:
    eps: Quadratic
    l: Quadratic
    c: Quadratic

    def __post_init__(self):
        eps, l, c = (as_quadratic(x) for x in (self.eps, self.l, self.c))
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "c", c)
        if eps.is_rational:
            raise InvalidParams("eps must be irrational")
        for name, x in (("l", l), ("c", c)):
            if x.d is not None and x.d != eps.d:
                raise MixedFields(f"{name}={x} is not in Q(sqrt({eps.d}))")
        if not 0 < eps < 1:
            raise InvalidParams(f"eps={eps} not in (0, 1)")
        if not (max(eps, 1 - eps) < l < 1):
            raise InvalidParams(f"l={l} violates max(eps, 1-eps) < l < 1")
        if not (c <= 0 < c + l):
            raise InvalidParams(f"0 not in [c, c+l) for c={c}, l={l}")
        object.__setattr__(self, "_bounds", (c + l - 1 + eps, c + eps, c + l))

    @property
    def I_A(self) -> tuple[Quadratic, Quadratic]:
        return self.c, self._bounds[0]

    @property
    def I_B(self) -> tuple[Quadratic, Quadratic]:
        return self._bounds[0], self._bounds[1]

    @property
    def I_C(self) -> tuple[Quadratic, Quadratic]:
        return self._bounds[1], self._bounds[2]

    def letter(self, x: Quadratic) -> str:
        ab, bc, end = self._bounds
        if x < self.c or x >= end:
            raise OutsideDomain(f"{x} not in [{self.c}, {end})")
        if x < ab:
            return "A"
        return "B" if x < bc else "C"


@dataclass(frozen=True)
class SturmianParams:
    alpha: Quadratic
    beta: Quadratic

    def __post_init__(self):
        alpha, beta = as_quadratic(self.alpha), as_quadratic(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if alpha.is_rational or not 0 < alpha < 1:
            raise InvalidParams(f"slope {alpha} must be irrational in (0, 1)")
        if not 0 <= beta < 1:
            raise InvalidParams(f"intercept {beta} not in [0, 1)")


def transform(p: IetParams, x) -> tuple[Quadratic, str]:
    x = as_quadratic(x)
    a = p.letter(x)
    if a == "A":
        return x + 1 - p.eps, a
    if a == "B":
        return x + 1 - 2 * p.eps, a
    return x - p.eps, a


def inverse(p: IetParams, y) -> tuple[Quadratic, str]:
    """``(T^-1(y), letter of T^-1(y))``."""
    y = as_quadratic(y)
    if y < p.c or y >= p.c + p.l:
        raise OutsideDomain(f"{y} not in [{p.c}, {p.c + p.l})")
    if y < p.c + p.l - p.eps:
        return y + p.eps, "C"
    if y < p.c + 1 - p.eps:
        return y - 1 + 2 * p.eps, "B"
    return y - 1 + p.eps, "A"


def _isign(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for integers."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    return sa if a * a > b * b * d else sb


class _Walk:
    """Points ``base + k + j*eps`` compared against fixed cuts in pure integer arithmetic.

    Orbits of both exchanges stay in ``base + Z + eps*Z``, so a point is the
    pair ``(k, j)``; everything is scaled by one common denominator.
    """

    def __init__(self, eps: Quadratic, base: Quadratic, cuts):
        vals = [eps, base, *cuts]
        den = math.lcm(*(q.a.denominator for q in vals), *(q.b.denominator for q in vals))
        self.d, self.den = eps.d, den
        self.ea, self.eb = int(eps.a * den), int(eps.b * den)
        self.ba, self.bb = int(base.a * den), int(base.b * den)
        self.cuts = [(int(q.a * den), int(q.b * den)) for q in cuts]

    def below(self, k: int, j: int, i: int) -> bool:
        ca, cb = self.cuts[i]
        a = self.ba + k * self.den + j * self.ea - ca
        b = self.bb + j * self.eb - cb
        return _isign(a, b, self.d) < 0


def _iet_walk(p: IetParams) -> _Walk:
    # forward cuts I_A | I_B | I_C, then the cuts of the image intervals for T^-1
    eps, l, c = p.eps, p.l, p.c
    return _Walk(eps, as_quadratic(0), (c + l - 1 + eps, c + eps, c + l - eps, c + 1 - eps))


def _iet_steps(p: IetParams, frm: int, to: int):
    """``(k, j, letter)`` for ``n = frm .. to``; the point ``T^n(0)`` is ``k + j*eps``."""
    if not frm <= 0 <= to:
        raise ValueError("need frm <= 0 <= to")
    walk = _iet_walk(p)
    back = []
    k = j = 0
    for _ in range(-frm):
        if walk.below(k, j, 2):
            k, j, a = k, j + 1, "C"
        elif walk.below(k, j, 3):
            k, j, a = k - 1, j + 2, "B"
        else:
            k, j, a = k - 1, j + 1, "A"
        back.append((k, j, a))
    fwd = []
    k = j = 0
    for _ in range(to + 1):
        if walk.below(k, j, 0):
            a, dk, dj = "A", 1, -1
        elif walk.below(k, j, 1):
            a, dk, dj = "B", 1, -2
        else:
            a, dk, dj = "C", 0, -1
        fwd.append((k, j, a))
        k, j = k + dk, j + dj
    return back[::-1] + fwd


def orbit(p: IetParams, frm: int, to: int) -> list[Quadratic]:
    """Points ``T^n(0)`` for ``n = frm .. to``."""
    return [k + j * p.eps for k, j, _ in _iet_steps(p, frm, to)]


def code(p: IetParams, frm: int, to: int) -> BiWindow:
    """Letters ``u_n`` for ``n = frm .. to`` of the coding of the orbit of 0."""
    letters = "".join(a for _, _, a in _iet_steps(p, frm, to))
    return BiWindow(letters[: -frm], letters[-frm:], TERNARY)


def is_nondegenerate(p: IetParams) -> bool:
    return not in_Z_eps(p.l, p.eps)


def sturmian_params(p: IetParams, side: str) -> SturmianParams:
    """Slope and intercept of the image of the coding under sigma01 / sigma10."""
    side = side.removeprefix("sigma")
    if side == "01":
        return SturmianParams(p.eps, -p.c)
    if side == "10":
        return SturmianParams(p.eps, 1 - p.c - p.l)
    raise ValueError(f"side must be '01' or '10', got {side!r}")


def two_iet_code(s: SturmianParams, frm: int, to: int) -> BiWindow:
    """Coding of the orbit of ``beta`` under the rotation of ``[0, 1)`` by ``1 - alpha``.

    ``[0, alpha)`` is coded 0 and moves by ``1 - alpha``; ``[alpha, 1)`` is
    coded 1 and moves by ``-alpha``.
    """
    if not frm <= 0 <= to:
        raise ValueError("need frm <= 0 <= to")
    walk = _Walk(s.alpha, s.beta, (s.alpha, 1 - s.alpha))
    left = []
    k = j = 0  # y = beta + k + j*alpha
    for _ in range(-frm):
        if walk.below(k, j, 1):
            j, a = j + 1, "1"
        else:
            k, j, a = k - 1, j + 1, "0"
        left.append(a)
    right = []
    k = j = 0
    for _ in range(to + 1):
        if walk.below(k, j, 0):
            k, j, a = k + 1, j - 1, "0"
        else:
            j, a = j - 1, "1"
        right.append(a)
    return BiWindow("".join(reversed(left)), "".join(right), BINARY)


def t01(p: IetParams, x, eps=None) -> Quadratic:
    """Two-interval exchange on ``[c, c+1)`` underlying sigma01 of the coding."""
    eps = p.eps if eps is None else as_quadratic(eps)
    x = as_quadratic(x)
    if not p.c <= x < p.c + 1:
        raise OutsideDomain(f"{x} not in [{p.c}, {p.c + 1})")
    return x + 1 - eps if x < p.c + eps else x - eps


def check_two_step(p: IetParams, n_max: int, eps01=None) -> bool:
    """On the orbit window, ``T = T01`` off ``I_B`` and ``T = T01^2`` on ``I_B``.

    ``eps01`` replaces the slope used for ``T01`` (for negative tests).
    """
    if eps01 is not None:
        for x in orbit(p, -n_max, n_max):
            tx, a = transform(p, x)
            y = t01(p, x, eps01)
            if a == "B":
                if not p.c <= y < p.c + 1 or t01(p, y, eps01) != tx:
                    return False
            elif y != tx:
                return False
        return True
    # same check on lattice coordinates: x = k + j*eps, and 1, eps are independent
    walk = _Walk(p.eps, as_quadratic(0), (p.c, p.c + 1, p.c + p.eps))

    def step01(k, j):
        if walk.below(k, j, 0) or not walk.below(k, j, 1):
            return None
        return (k + 1, j - 1) if walk.below(k, j, 2) else (k, j - 1)

    shift = {"A": (1, -1), "B": (1, -2), "C": (0, -1)}
    for k, j, a in _iet_steps(p, -n_max, n_max):
        tx = (k + shift[a][0], j + shift[a][1])
        y = step01(k, j)
        if a == "B":
            y = step01(*y) if y else None
        if y != tx:
            return False
    return True
