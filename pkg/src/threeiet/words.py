"""Finite words, bidirectional windows and factor complexity.

Words are plain strings over one of two closed alphabets: ``"01"`` for
Sturmian words and ``"ABC"`` for 3iet words.  Complexity results computed
on a finite window are evidence only; the window should be much longer
than the largest factor length inspected (``DEFAULT_WINDOW_FACTOR * n_max``
is a reasonable floor).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import AlphabetMismatch

DEFAULT_WINDOW_FACTOR = 200


class Alphabet(str, enum.Enum):
    BINARY = "01"
    TERNARY = "ABC"

    @property
    def letters(self) -> str:
        return self.value

    def check(self, word: str) -> str:
        bad = set(word) - set(self.value)
        if bad:
            raise AlphabetMismatch(f"letters {sorted(bad)} not in alphabet {self.value!r}")
        return word

    @classmethod
    def of(cls, word: str) -> Alphabet:
        """Smallest alphabet containing every letter of ``word``."""
        letters = set(word)
        for alpha in cls:
            if letters <= set(alpha.value):
                return alpha
        raise AlphabetMismatch(f"{word!r} mixes letters from different alphabets")


BINARY = Alphabet.BINARY
TERNARY = Alphabet.TERNARY


@dataclass(frozen=True)
class BiWindow:
    """Letters ``u_{-m} .. u_{-1} | u_0 .. u_n`` of a bidirectional word."""

    left: str
    right: str
    alphabet: Alphabet

    def __post_init__(self):
        self.alphabet.check(self.left)
        self.alphabet.check(self.right)

    @property
    def word(self) -> str:
        return self.left + self.right

    @property
    def origin(self) -> int:
        """Position of ``u_0`` inside :attr:`word`."""
        return len(self.left)

    def __len__(self) -> int:
        return len(self.left) + len(self.right)

    def __getitem__(self, n: int) -> str:
        """Letter ``u_n`` (``n`` may be negative)."""
        if n >= 0:
            return self.right[n]
        if -n > len(self.left):
            raise IndexError(n)
        return self.left[n]

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet | None = None) -> BiWindow:
        left, sep, right = text.partition("|")
        if not sep:
            left, right = "", text
        alphabet = alphabet or Alphabet.of(left + right)
        return cls(left, right, alphabet)


def _letters(w) -> str:
    return w.word if isinstance(w, BiWindow) else w


def factors(w, n: int) -> set[str]:
    """All length-``n`` blocks of a word or window."""
    s = _letters(w)
    if not 0 <= n <= len(s):
        raise ValueError(f"factor length {n} outside [0, {len(s)}]")
    return {s[i : i + n] for i in range(len(s) - n + 1)}


def complexity_profile(w, n_max: int) -> list[int]:
    """``[C(1), ..., C(n_max)]`` measured on the window."""
    s = _letters(w)
    if n_max > len(s):
        raise ValueError(f"n_max={n_max} exceeds window length {len(s)}")
    return [len(factors(s, n)) for n in range(1, n_max + 1)]


def classify_profile(profile) -> str:
    """Label a measured profile as Sturmian-like, 3iet-like or neither."""
    profile = list(profile)
    if all(c == n + 1 for n, c in enumerate(profile, 1)):
        return "sturmian_consistent"
    if all(c == 2 * n + 1 for n, c in enumerate(profile, 1)):
        return "threeiet_consistent"
    return "other"
