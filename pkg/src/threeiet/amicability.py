"""Amicable binary words and morphisms and their ternarization.

``u`` is amicable to ``v`` when both split into aligned blocks
``(0,0)``, ``(1,1)`` or ``(01,10)``; reading these blocks as ``A``, ``C``
and ``B`` gives the ternarization ``ter(u, v)``, the unique ternary ``w``
with ``sigma01(w) = u`` and ``sigma10(w) = v``.  The relation is not
symmetric: ``01`` is amicable to ``10`` but not the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetMismatch, LengthMismatch, NoFixedPoint, NotAmicable, NotPrimitive
from .morphism import SIGMA01, Morphism, fixed_point_prefix, is_primitive
from .words import BINARY, TERNARY


@dataclass(frozen=True)
class TernarizationResult:
    word: str
    consumed: int
    dangling: bool


def ternarize_prefix(u: str, v: str) -> TernarizationResult:
    """Ternarize as much of the common prefix of ``u`` and ``v`` as possible.

    Stops cleanly when one input runs out; ``dangling`` is set when the
    input ends one letter into a ``B`` block.
    """
    BINARY.check(u)
    BINARY.check(v)
    n = min(len(u), len(v))
    out = []
    i = 0
    while i < n:
        pair = u[i] + v[i]
        if pair == "00":
            out.append("A")
            i += 1
        elif pair == "11":
            out.append("C")
            i += 1
        elif pair == "01":
            if i + 1 == n:
                return TernarizationResult("".join(out), i, True)
            if u[i + 1] + v[i + 1] != "10":
                raise NotAmicable(f"block starting at {i} is 0{u[i + 1]} over 1{v[i + 1]}, expected 01 over 10")
            out.append("B")
            i += 2
        else:
            raise NotAmicable(f"1 over 0 at position {i}")
    return TernarizationResult("".join(out), i, False)


def ternarize_words(u: str, v: str) -> str:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} != {len(v)}")
    res = ternarize_prefix(u, v)
    if res.dangling:
        raise NotAmicable("input ends inside a 01/10 block")
    return res.word


def is_amicable(u: str, v: str) -> bool:
    try:
        ternarize_words(u, v)
    except (NotAmicable, LengthMismatch):
        return False
    return True


def _check_binary(*morphisms: Morphism) -> None:
    for m in morphisms:
        if m.source is not BINARY or m.target is not BINARY:
            raise AlphabetMismatch(f"{m} is not an endomorphism of {{0,1}}*")


def is_amicable_morphisms(phi: Morphism, psi: Morphism) -> bool:
    _check_binary(phi, psi)
    return (
        is_amicable(phi["0"], psi["0"])
        and is_amicable(phi["1"], psi["1"])
        and is_amicable(phi["0"] + phi["1"], psi["1"] + psi["0"])
    )


def ternarize_morphisms(phi: Morphism, psi: Morphism) -> Morphism:
    if not is_amicable_morphisms(phi, psi):
        raise NotAmicable(f"{phi} is not amicable to {psi}")
    return Morphism(
        TERNARY,
        TERNARY,
        (
            ternarize_words(phi["0"], psi["0"]),
            ternarize_words(phi["0"] + phi["1"], psi["1"] + psi["0"]),
            ternarize_words(phi["1"], psi["1"]),
        ),
    )


@dataclass(frozen=True)
class TernaryFixedPoint:
    eta: Morphism
    word: str
    case: str  # "A" or "B"
    seed: str  # letter of eta the fixed point grows from
    phi_seed: str
    psi_seed: str


def _has_fixed_point(m: Morphism) -> bool:
    return any(m[x].startswith(x) and len(m[x]) >= 2 for x in "01")


def ternarization_fixed_point(phi: Morphism, psi: Morphism, length: int) -> TernaryFixedPoint:
    """Fixed point of ``ter(phi, psi)`` obtained by ternarizing fixed points of ``phi``, ``psi``.

    Case A: some ``X`` starts both ``phi(X)`` and ``psi(X)``; the fixed points
    grow from ``X`` and the ternary one from ``A`` (X=0) or ``C`` (X=1).
    Case B: otherwise the fixed points grow from ``01`` and ``10`` and the
    ternary one from ``B``.
    """
    _check_binary(phi, psi)
    for m in (phi, psi):
        if not is_primitive(m):
            raise NotPrimitive(f"{m} is not primitive")
    eta = ternarize_morphisms(phi, psi)
    for m in (phi, psi):
        if not _has_fixed_point(m):
            raise NoFixedPoint(f"{m} has no right-sided fixed point")

    common = [x for x in "01" if phi[x][0] == x and psi[x][0] == x]
    if common:
        x = common[0]
        case, phi_seed, psi_seed = "A", x, x
        seed = "A" if x == "0" else "C"
    else:
        # phi(1) starting with 1 would force psi(1) to start with 0: not amicable
        if phi["1"][0] == "1":
            raise NotAmicable(f"{phi} and {psi} admit no common seed")
        case, phi_seed, psi_seed, seed = "B", "01", "10", "B"

    w = fixed_point_prefix(eta, length, seed)
    # independent route: ternarize the binary fixed points directly
    n = len(SIGMA01(w))
    u = fixed_point_prefix(phi, n, phi_seed)
    v = fixed_point_prefix(psi, n, psi_seed)
    parsed = ternarize_prefix(u, v).word
    if not w.startswith(parsed) or len(parsed) < length - 1:
        raise AssertionError("ternarized fixed points disagree with the fixed point of ter(phi, psi)")
    return TernaryFixedPoint(eta, w, case, seed, phi_seed, psi_seed)
