"""Geometric representations of fixed points.

A word ``u_0 u_1 ...`` with letter lengths ``ell`` becomes the point set
``t_0 = 0, t_{n+1} = t_n + ell(u_n)``.  A factor ``lam > 1`` is a
self-similarity factor when every stretched gap ``[lam t_n, lam t_{n+1}]``
is tiled by points of the set in a pattern depending only on ``u_n``; the
pattern spells out the image of ``u_n`` under the substitution.

Only gaps whose stretched image lies inside the computed window are
inspected (the safe window).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import AmbiguousLength, LengthMismatch, NotSelfSimilar, WindowTooShort
from .morphism import SIGMA01, SIGMA10, Morphism, perron
from .qfield import Quadratic, as_quadratic
from .words import Alphabet


@dataclass(frozen=True)
class LengthAssignment:
    lengths: tuple[tuple[str, Quadratic], ...]

    def __post_init__(self):
        values = [v for _, v in self.lengths]
        if any(v <= 0 for v in values):
            raise ValueError("letter lengths must be positive")
        if len(set(values)) != len(values):
            raise ValueError("letter lengths must be pairwise distinct")

    @classmethod
    def of(cls, mapping: Mapping[str, object]) -> LengthAssignment:
        return cls(tuple((a, as_quadratic(v)) for a, v in sorted(mapping.items())))

    def __getitem__(self, letter: str) -> Quadratic:
        for a, v in self.lengths:
            if a == letter:
                return v
        raise KeyError(letter)

    def as_dict(self) -> dict[str, Quadratic]:
        return dict(self.lengths)


@dataclass(frozen=True)
class GeoRep:
    word: str
    points: tuple[Quadratic, ...]
    lengths: LengthAssignment


@dataclass(frozen=True)
class SelfSimilarity:
    patterns: dict  # letter -> tuple of offsets, starting at 0
    checked_gaps: int  # gaps 0 .. checked_gaps-1 form the safe window

    def __getitem__(self, letter: str):
        return self.patterns[letter]


def lengths_from_perron(eta: Morphism) -> LengthAssignment:
    """Positive Perron eigenvector, scaled so the first letter has length 1."""
    v = perron(eta).right
    if v[0] < 0:
        v = tuple(-x for x in v)
    v = tuple(x / v[0] for x in v)
    return LengthAssignment.of(dict(zip(eta.source.letters, v)))


def build(word: str, lengths: LengthAssignment) -> GeoRep:
    ell = lengths.as_dict()
    pts = [as_quadratic(0)]
    for a in word:
        pts.append(pts[-1] + ell[a])
    return GeoRep(word, tuple(pts), lengths)


def check_selfsimilar(rep: GeoRep, lam) -> SelfSimilarity:
    lam = as_quadratic(lam)
    if lam <= 1:
        raise ValueError("self-similarity factor must exceed 1")
    pts = rep.points
    index = {t: i for i, t in enumerate(pts)}
    last = pts[-1]
    patterns: dict[str, tuple] = {}
    first_seen: dict[str, int] = {}
    n = 0
    while n < len(rep.word) and lam * pts[n + 1] <= last:
        lo, hi = lam * pts[n], lam * pts[n + 1]
        i, j = index.get(lo), index.get(hi)
        if i is None or j is None:
            raise NotSelfSimilar(f"stretched gap {n} does not end on points of the set", witness=(n,))
        pattern = tuple(t - lo for t in pts[i : j + 1])
        a = rep.word[n]
        if a not in patterns:
            patterns[a], first_seen[a] = pattern, n
        elif patterns[a] != pattern:
            raise NotSelfSimilar(
                f"gaps {first_seen[a]} and {n} (letter {a}) are filled differently",
                witness=(first_seen[a], n),
            )
        n += 1
    if n < 2:
        raise WindowTooShort("fewer than two gaps fit in the safe window")
    return SelfSimilarity(patterns, n)


def substitution_from_geometry(rep: GeoRep, lam) -> Morphism:
    sim = check_selfsimilar(rep, lam)
    by_length = {v: a for a, v in rep.lengths.lengths}
    letters = Alphabet.of("".join(by_length.values()))
    missing = set(letters.letters) - set(sim.patterns)
    if missing:
        raise WindowTooShort(f"letters {sorted(missing)} do not occur in the safe window")
    images = []
    for a in letters.letters:
        pat = sim.patterns[a]
        img = []
        for x, y in zip(pat, pat[1:]):
            letter = by_length.get(y - x)
            if letter is None:
                raise AmbiguousLength(f"gap {y - x} inside the pattern of {a} matches no letter length")
            img.append(letter)
        images.append("".join(img))
    return Morphism(letters, letters, tuple(images))


def sturmian_insertions(rep: GeoRep) -> tuple[GeoRep, GeoRep]:
    """Split every ``B`` gap into ``(ell(A), ell(C))`` resp. ``(ell(C), ell(A))``."""
    ell = rep.lengths.as_dict()
    if ell["B"] != ell["A"] + ell["C"]:
        raise LengthMismatch("ell(B) != ell(A) + ell(C)")
    binary = LengthAssignment.of({"0": ell["A"], "1": ell["C"]})
    rep01 = build(SIGMA01(rep.word), binary)
    rep10 = build(SIGMA10(rep.word), binary)
    return rep01, rep10


def dump_points(rep: GeoRep, digits: int = 15) -> str:
    """One ``index<TAB>exact<TAB>approx`` line per point; approximations are display-only."""
    return "\n".join(f"{i}\t{t}\t{t.approx(digits)}" for i, t in enumerate(rep.points))

