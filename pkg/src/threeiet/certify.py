"""Executable certificates for substitution invariance.

Each check evaluates its criterion clause by clause with exact conjugates
and returns a :class:`Certificate` carrying every intermediate value, so a
failed clause can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .amicability import is_amicable_morphisms, ternarize_morphisms
from .errors import (
    ConjugateNotPositive,
    Degenerate,
    InterceptOutOfRange,
    InvalidParams,
    MixedFields,
    NotDecomposable,
    NotPrimitive,
    NotQuadratic,
    NotThreeIetCompatible,
)
from .iet import IetParams, is_nondegenerate
from .morphism import SIGMA01, SIGMA10, Morphism, incidence, is_primitive, matvec, perron
from .qfield import Quadratic, as_quadratic, in_Z_eps, is_quadratic_unit, is_sturm
from .words import BINARY, TERNARY


@dataclass(frozen=True)
class Certificate:
    verdict: bool
    failed_clause: str | None = None
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.verdict and self.failed_clause is None:
            raise ValueError("a failed certificate must name the failed clause")

    def __bool__(self) -> bool:
        return self.verdict


def _conj_window(x: Quadratic) -> tuple[Quadratic, Quadratic]:
    xc = x.conjugate()
    return min(xc, 1 - xc), max(xc, 1 - xc)


def _same_field(x: Quadratic, base: Quadratic) -> bool:
    return x.d is None or x.d == base.d


def yasutomi_check(alpha, beta) -> Certificate:
    """Substitution invariance of the Sturmian word with slope ``alpha``, intercept ``beta``."""
    alpha, beta = as_quadratic(alpha), as_quadratic(beta)
    if alpha.is_rational or not 0 < alpha < 1:
        raise InvalidParams(f"slope {alpha} must be irrational in (0, 1)")
    if not 0 <= beta < 1:
        raise InterceptOutOfRange(f"intercept {beta} not in [0, 1)")
    wit = {"alpha_conj": alpha.conjugate()}
    if not is_sturm(alpha):
        return Certificate(False, "sturm", wit)
    if not _same_field(beta, alpha):
        return Certificate(False, "field_membership", wit)
    lo, hi = _conj_window(alpha)
    bc = beta.conjugate()
    wit.update(beta_conj=bc, lower=lo, upper=hi)
    inside = lo <= bc <= hi
    # the window is symmetric under x -> 1 - x
    if inside != (lo <= 1 - bc <= hi):
        raise AssertionError("conjugate window is not symmetric")
    return Certificate(inside, None if inside else "intercept_window", wit)


def invariance_3iet_check(p: IetParams) -> Certificate:
    """Substitution invariance of the non-degenerate 3iet word with parameters ``p``."""
    if not is_nondegenerate(p):
        raise Degenerate(f"l={p.l} lies in Z[eps]")
    eps = p.eps
    wit = {"eps_conj": eps.conjugate()}
    if not is_sturm(eps):
        return Certificate(False, "sturm", wit)
    if not (_same_field(p.c, eps) and _same_field(p.l, eps)):
        return Certificate(False, "field_membership", wit)
    lo, hi = _conj_window(eps)
    mc = -p.c.conjugate()
    cl = (p.c + p.l).conjugate()
    wit.update(minus_c_conj=mc, c_plus_l_conj=cl, lower=lo, upper=hi)
    if not lo <= mc <= hi:
        return Certificate(False, "c_window", wit)
    if not lo <= cl <= hi:
        return Certificate(False, "c_plus_l_window", wit)
    return Certificate(True, None, wit)


def cross_check(p: IetParams) -> bool:
    """The 3iet criterion agrees with the Sturmian criterion applied to both images."""
    ternary = invariance_3iet_check(p).verdict
    s01 = yasutomi_check(p.eps, -p.c).verdict
    s10 = yasutomi_check(p.eps, 1 - p.c - p.l).verdict
    return ternary == (s01 and s10)


def _require_primitive_ternary(eta: Morphism) -> None:
    if eta.source is not TERNARY or eta.target is not TERNARY:
        raise NotThreeIetCompatible(f"{eta} is not a morphism of {{A,B,C}}*")
    if not is_primitive(eta):
        raise NotPrimitive(f"{eta} is not primitive")


def matrix_necessary_check(eta: Morphism, eps) -> Certificate:
    """Dominant eigenvalue is a quadratic unit and ``(1-eps, 1-2eps, -eps)`` is a ``lam'``-eigenvector."""
    _require_primitive_ternary(eta)
    eps = as_quadratic(eps)
    pd = perron(eta)
    vec = [1 - eps, 1 - 2 * eps, -eps]
    wit = {"lam": pd.lam, "lam_conj": pd.lam_conj}
    if not is_quadratic_unit(pd.lam):
        return Certificate(False, "quadratic_unit", wit)
    try:
        lhs = matvec(incidence(eta), vec)
        rhs = [pd.lam_conj * x for x in vec]
        ok = lhs == rhs
    except MixedFields:  # eps outside Q(lam) cannot give an eigenvector
        ok = False
    wit.update(v_A=vec[0], v_B=vec[1], v_C=vec[2])
    return Certificate(ok, None if ok else "eigenvector", wit)


def spectral_orbit_check(eta: Morphism, p: IetParams) -> Certificate:
    """Lattice conditions linking ``lam'`` with the discontinuities ``c`` and ``c+l-1+eps``."""
    base = matrix_necessary_check(eta, p.eps)
    if not base.verdict:
        return Certificate(False, "matrix_necessary", dict(base.witnesses))
    lam, lam_c = base.witnesses["lam"], base.witnesses["lam_conj"]
    if lam_c <= 0:
        raise ConjugateNotPositive(f"lam' = {lam_c} is not positive")
    eps, c = p.eps, p.c
    b = c + p.l - 1 + eps
    wit = dict(base.witnesses)
    wit.update(lam_eps=lam * eps, lam_one=lam, shift_c=lam_c * c - c, shift_b=lam_c * b - b)
    if not (in_Z_eps(lam * eps, eps) and in_Z_eps(lam, eps)):
        return Certificate(False, "lattice_scaling", wit)
    if not in_Z_eps(wit["shift_c"], eps):
        return Certificate(False, "lattice_c", wit)
    if not in_Z_eps(wit["shift_b"], eps):
        return Certificate(False, "lattice_b", wit)
    return Certificate(True, None, wit)


def infer_epsilon(eta: Morphism) -> Quadratic:
    """Read ``eps`` off the ``lam'``-eigenvector, normalised so that ``w_A - w_C = 1``."""
    _require_primitive_ternary(eta)
    w = perron(eta).right_conj
    diff = w[0] - w[2]
    if not diff:
        raise NotThreeIetCompatible("eigenvector has w_A == w_C; cannot normalise")
    w = [x / diff for x in w]
    if w[1] != w[0] + w[2]:
        raise NotThreeIetCompatible("eigenvector violates w_B = w_A + w_C")
    return -w[2]


@dataclass(frozen=True)
class Decomposition:
    power: int
    phi: Morphism
    psi: Morphism
    lambda_conjugate_sign: int


def decompose(eta: Morphism) -> Decomposition:
    """Amicable Sturmian pair whose ternarization is ``eta`` or ``eta**2``."""
    _require_primitive_ternary(eta)
    try:
        lam_sign = perron(eta).lam_conj.sign()
    except NotQuadratic:
        lam_sign = 0
    for k in (1, 2):
        mu = eta**k
        a, b, c = mu.images
        phi = Morphism(BINARY, BINARY, (SIGMA01(a), SIGMA01(c)))
        psi = Morphism(BINARY, BINARY, (SIGMA10(a), SIGMA10(c)))
        if SIGMA01(b) != phi["0"] + phi["1"] or SIGMA10(b) != psi["1"] + psi["0"]:
            continue
        if not is_amicable_morphisms(phi, psi) or ternarize_morphisms(phi, psi) != mu:
            continue
        return Decomposition(k, phi, psi, lam_sign)
    raise NotDecomposable(f"neither {eta} nor its square is a ternarization")
