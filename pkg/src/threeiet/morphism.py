"""Morphisms of free monoids over ``{0,1}`` and ``{A,B,C}``.

Incidence matrices follow the row convention: entry ``(a, b)`` counts the
letters ``b`` in ``xi(a)``.  Under it ``M(xi o zeta) = M(zeta) @ M(xi)`` and
letter lengths of a geometric representation form a *right* eigenvector.

Convention note: ``SIGMA10`` sends ``A -> 0, B -> 10, C -> 1``.  This is the
only choice under which ``ter(0100101, 0101001) = ACABAC`` and the
ternarization of the Fibonacci pair yields ``B -> ACA``; the variant that
swaps the images of ``A`` and ``C`` contradicts both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    InvalidSeed,
    NoFixedPoint,
    NotEndomorphism,
    NotPrimitive,
    NotQuadratic,
)
from .qfield import Quadratic, make_quadratic
from .words import Alphabet, BiWindow

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word map; ``images[i]`` is the image of ``source.letters[i]``."""

    source: Alphabet
    target: Alphabet
    images: tuple[str, ...]
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.images) != len(self.source.letters):
            raise ValueError("one image per source letter required")
        for img in self.images:
            if not img:
                raise ValueError("erasing morphisms are not supported")
            self.target.check(img)
        table = str.maketrans(dict(zip(self.source.letters, self.images)))
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_dict(cls, mapping: Mapping[str, str], source=None, target=None) -> Morphism:
        keys = "".join(sorted(mapping))
        source = source or Alphabet.of(keys)
        if set(mapping) != set(source.letters):
            raise AlphabetMismatch(f"images given for {keys!r}, alphabet is {source.letters!r}")
        target = target or Alphabet.of("".join(mapping.values()))
        return cls(source, target, tuple(mapping[a] for a in source.letters))

    @classmethod
    def parse(cls, text: str) -> Morphism:
        """Parse ``"A:ACA,B:BAB,C:B"`` style literals."""
        mapping = {}
        for item in text.replace(" ", "").split(","):
            letter, sep, image = item.partition(":")
            if not sep or len(letter) != 1 or letter in mapping:
                raise ValueError(f"malformed morphism literal: {text!r}")
            mapping[letter] = image
        return cls.from_dict(mapping)

    def __str__(self) -> str:
        return ",".join(f"{a}:{img}" for a, img in zip(self.source.letters, self.images))

    def __getitem__(self, letter: str) -> str:
        return self.images[self.source.letters.index(letter)]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.source.letters, self.images))

    @property
    def is_endomorphism(self) -> bool:
        return self.source is self.target

    def __call__(self, word):
        if isinstance(word, BiWindow):
            return apply_window(self, word)
        return apply(self, word)

    def compose(self, other: Morphism) -> Morphism:
        """``self o other``: apply ``other`` first."""
        return compose(self, other)

    def __pow__(self, k: int) -> Morphism:
        if not self.is_endomorphism:
            raise NotEndomorphism("powers need an endomorphism")
        if k < 0:
            return NotImplemented
        result = identity(self.source)
        for _ in range(k):
            result = compose(self, result)
        return result


def identity(alphabet: Alphabet) -> Morphism:
    return Morphism(alphabet, alphabet, tuple(alphabet.letters))


def apply(xi: Morphism, word: str) -> str:
    xi.source.check(word)
    return word.translate(xi._table)


def apply_window(xi: Morphism, w: BiWindow) -> BiWindow:
    if w.alphabet is not xi.source:
        raise AlphabetMismatch(f"window over {w.alphabet.letters!r}, morphism expects {xi.source.letters!r}")
    return BiWindow(apply(xi, w.left), apply(xi, w.right), xi.target)


def compose(xi: Morphism, zeta: Morphism) -> Morphism:
    if zeta.target is not xi.source:
        raise AlphabetMismatch("target of the inner morphism must be the source of the outer one")
    return Morphism(zeta.source, xi.target, tuple(apply(xi, img) for img in zeta.images))


# -- incidence matrices ---------------------------------------------------

def incidence(xi: Morphism) -> Matrix:
    return tuple(tuple(img.count(b) for b in xi.target.letters) for img in xi.images)


def matmul(m: Sequence[Sequence], n: Sequence[Sequence]) -> tuple:
    cols = list(zip(*n))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in m)


def is_primitive(xi: Morphism) -> bool:
    """Some power ``M^k`` with ``k <= n^2 - 2n + 2`` is entrywise positive."""
    if not xi.is_endomorphism:
        raise NotEndomorphism("primitivity is defined for endomorphisms only")
    m = incidence(xi)
    n = len(m)
    bound = n * n - 2 * n + 2
    # work with the 0/1 pattern so entries stay small
    pattern = tuple(tuple(int(x > 0) for x in row) for row in m)
    power = pattern
    for _ in range(bound):
        if all(x > 0 for row in power for x in row):
            return True
        power = tuple(tuple(int(x > 0) for x in row) for row in matmul(power, pattern))
    return False


# -- fixed points -----------------------------------------------------------

def fixed_point_prefix(xi: Morphism, length: int, seed: str | None = None) -> str:
    """First ``length`` letters of the right-sided fixed point grown from ``seed``.

    ``seed`` may be a letter or a word ``s`` with ``xi(s)`` strictly extending
    ``s``.  Without a seed the alphabetically first letter ``a`` with
    ``xi(a)`` starting with ``a`` and ``|xi(a)| >= 2`` is used.
    """
    if not xi.is_endomorphism:
        raise NotEndomorphism("fixed points need an endomorphism")
    if seed is None:
        for a, img in zip(xi.source.letters, xi.images):
            if img[0] == a and len(img) >= 2:
                seed = a
                break
        else:
            raise NoFixedPoint(f"no letter of {xi} starts its own image")
    else:
        xi.source.check(seed)
        img = apply(xi, seed)
        if not seed or not img.startswith(seed) or len(img) <= len(seed):
            raise InvalidSeed(f"{xi} does not strictly extend {seed!r}")
    w = seed
    while len(w) < length:
        # only the part of w whose image is still needed gets expanded
        out, total = [], 0
        for c in w:
            img = xi[c]
            out.append(img)
            total += len(img)
            if total >= length:
                break
        w = "".join(out)
    return w[:length]


# -- exact Perron-Frobenius data ---------------------------------------------

def charpoly(m: Matrix) -> tuple[int, ...]:
    """Coefficients of ``det(xI - M)``, leading term first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        base = [[mk[i][j] + coeffs[-1] * ident[i][j] for j in range(n)] for i in range(n)]
        mk = [list(r) for r in matmul(m, base)]
        c = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(c)
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def _integer_roots(poly: Sequence[int]) -> tuple[list[int], list[int]]:
    """Split off integer roots of a monic integer polynomial."""
    poly = list(poly)
    roots = []
    while len(poly) > 1:
        const = poly[-1]
        if const == 0:
            candidates = [0]
        else:
            c = abs(const)
            divs = [d for d in range(1, math.isqrt(c) + 1) if c % d == 0]
            divs = sorted(set(divs + [c // d for d in divs]))
            candidates = [s * d for d in divs for s in (1, -1)]
        for r in candidates:
            if _horner(poly, r) == 0:
                roots.append(r)
                poly = _deflate(poly, r)
                break
        else:
            break
    return roots, poly


def _horner(poly, x):
    acc = 0
    for c in poly:
        acc = acc * x + c
    return acc


def _deflate(poly, r):
    out = [poly[0]]
    for c in poly[1:-1]:
        out.append(c + out[-1] * r)
    return out


def nullvector(rows: Sequence[Sequence[Quadratic]]) -> list[Quadratic]:
    """A nonzero solution of ``rows @ v = 0`` (Gauss-Jordan over the field)."""
    a = [list(r) for r in rows]
    n_rows, n_cols = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    if not free:
        raise ValueError("matrix has trivial kernel")
    v = [Quadratic(Fraction(0))] * n_cols
    v[free[0]] = Quadratic(Fraction(1))
    for i, col in enumerate(pivots):
        v[col] = -a[i][free[0]]
    return v


def matvec(m: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Quadratic(Fraction(0))) for row in m]


@dataclass(frozen=True)
class PerronData:
    charpoly: tuple[int, ...]
    lam: Quadratic
    lam_conj: Quadratic
    right: tuple[Quadratic, ...]
    right_conj: tuple[Quadratic, ...]
    other_roots: tuple[int, ...] = ()


def perron(xi: Morphism) -> PerronData:
    """Exact dominant eigenvalue (a quadratic irrational) and its eigenvectors."""
    if not is_primitive(xi):
        raise NotPrimitive(f"{xi} is not primitive")
    m = incidence(xi)
    poly = charpoly(m)
    rational, rest = _integer_roots(poly)
    if len(rest) != 3:
        raise NotQuadratic(f"characteristic polynomial {poly} has no quadratic factor with a real irrational root")
    _, p, q = rest
    disc = p * p - 4 * q
    if disc <= 0 or math.isqrt(disc) ** 2 == disc:
        raise NotQuadratic(f"quadratic factor x^2{p:+d}x{q:+d} has no real irrational roots")
    lam = make_quadratic(Fraction(-p, 2), Fraction(1, 2), disc)
    lam_conj = lam.conjugate()
    if any(abs(r) >= lam for r in rational) or not (-lam < lam_conj < lam):
        raise NotQuadratic("dominant eigenvalue is rational")
    n = len(m)
    shifted = [[m[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    v = nullvector([[Quadratic(Fraction(0)) + x for x in row] for row in shifted])
    lead = next(x for x in v if x)
    v = tuple(x / lead for x in v)
    return PerronData(
        charpoly=poly,
        lam=lam,
        lam_conj=lam_conj,
        right=v,
        right_conj=tuple(x.conjugate() for x in v),
        other_roots=tuple(rational),
    )


# -- canonical morphisms ------------------------------------------------------

SIGMA01 = Morphism.parse("A:0,B:01,C:1")
SIGMA10 = Morphism.parse("A:0,B:10,C:1")
PHI = Morphism.parse("0:01,1:0")
PSI = Morphism.parse("0:10,1:0")
E = Morphism.parse("0:1,1:0")


def constants() -> dict[str, Morphism]:
    return {"sigma01": SIGMA01, "sigma10": SIGMA10, "phi": PHI, "psi": PSI, "E": E}
