import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairs import BASE, CASE_B, FIG4, SILVER, SQUARED, random_pair
from strategies import binary_words, ternary_words
from threeiet.amicability import (
    is_amicable,
    is_amicable_morphisms,
    ternarization_fixed_point,
    ternarize_morphisms,
    ternarize_prefix,
    ternarize_words,
)
from threeiet.errors import AlphabetMismatch, LengthMismatch, NoFixedPoint, NotAmicable, NotPrimitive
from threeiet.morphism import E, SIGMA01, SIGMA10, Morphism, compose, fixed_point_prefix, identity
from threeiet.words import BINARY, classify_profile, complexity_profile


def oracle_ternarize(u, v):
    # brute force: every ternary word with the right sigma01 length, smallest first
    from itertools import product

    for n in range(len(u) // 2, len(u) + 1):
        for t in product("ABC", repeat=n):
            w = "".join(t)
            if SIGMA01(w) == u and SIGMA10(w) == v:
                return w
    return None


# words

def test_word_examples():
    assert ternarize_words("0100101", "0101001") == "ACABAC"
    assert ternarize_words("01", "10") == "B"
    assert ternarize_words("0", "0") == "A"
    assert is_amicable("0100101", "0101001")
    assert not is_amicable("10", "01")
    with pytest.raises(NotAmicable):
        ternarize_words("10", "01")


def test_word_errors():
    with pytest.raises(LengthMismatch):
        ternarize_words("01", "0")
    with pytest.raises(NotAmicable):
        ternarize_words("0", "1")
    with pytest.raises(NotAmicable):
        ternarize_words("00", "11")
    with pytest.raises(NotAmicable):
        ternarize_words("0110", "1001")  # B, then 1 over 0
    assert ternarize_words("010", "100") == "BA"
    assert not is_amicable("0", "1")


def test_truncated_block_is_dangling():
    res = ternarize_prefix("000", "001")
    assert (res.word, res.consumed, res.dangling) == ("AA", 2, True)
    with pytest.raises(NotAmicable):
        ternarize_words("000", "001")
    res = ternarize_prefix("0010", "0011")
    assert (res.word, res.consumed, res.dangling) == ("AAC", 3, True)


@given(st.lists(st.sampled_from("ABC"), max_size=6).map("".join))
def test_matches_brute_force(w):
    u, v = SIGMA01(w), SIGMA10(w)
    assert ternarize_words(u, v) == oracle_ternarize(u, v) == w


@given(binary_words(max_size=8), binary_words(max_size=8))
def test_amicability_matches_brute_force(u, v):
    if len(u) != len(v):
        assert not is_amicable(u, v)
    else:
        assert is_amicable(u, v) == (oracle_ternarize(u, v) is not None)


@given(ternary_words())
def test_round_trip(w):
    assert ternarize_words(SIGMA01(w), SIGMA10(w)) == w


@given(ternary_words(max_size=80), ternary_words(max_size=80))
def test_concatenation_closure(w1, w2):
    u, v, u2, v2 = SIGMA01(w1), SIGMA10(w1), SIGMA01(w2), SIGMA10(w2)
    assert ternarize_words(u + u2, v + v2) == ternarize_words(u, v) + ternarize_words(u2, v2)


@given(ternary_words())
def test_abelian_consistency(w):
    u, v = SIGMA01(w), SIGMA10(w)
    assert len(u) == len(v) and Counter(u) == Counter(v)


@given(ternary_words(max_size=60), st.integers(0, 120))
def test_prefix_covers_consumed_letters(w, cut):
    u, v = SIGMA01(w), SIGMA10(w)
    cut = min(cut, len(u))
    res = ternarize_prefix(u[:cut], v[:cut])
    assert SIGMA01(res.word) == u[: res.consumed] and SIGMA10(res.word) == v[: res.consumed]
    assert res.consumed == cut - res.dangling
    assert w.startswith(res.word)


# morphisms

def test_morphism_examples():
    assert is_amicable_morphisms(*BASE)
    assert is_amicable_morphisms(*FIG4)
    assert not is_amicable_morphisms(E, E)
    assert str(ternarize_morphisms(*BASE)) == "A:B,B:ACA,C:A"
    assert str(ternarize_morphisms(*SQUARED)) == "A:ACA,B:BAB,C:B"
    assert str(ternarize_morphisms(*FIG4)) == "A:B,B:BCB,C:CAC"
    with pytest.raises(NotAmicable):
        ternarize_morphisms(E, E)
    with pytest.raises(AlphabetMismatch):
        is_amicable_morphisms(SIGMA01, SIGMA10)


def test_squared_pair_is_square_of_base():
    phi, psi = BASE
    assert (compose(phi, phi), compose(psi, psi)) == SQUARED
    eta = ternarize_morphisms(*BASE)
    assert ternarize_morphisms(*SQUARED) == compose(eta, eta)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 2**32))
def test_composition_closure(s1, s2):
    (f1, g1), (f2, g2) = random_pair(random.Random(s1), 2), random_pair(random.Random(s2), 2)
    assert is_amicable_morphisms(compose(f1, f2), compose(g1, g2))
    assert ternarize_morphisms(compose(f1, f2), compose(g1, g2)) == compose(
        ternarize_morphisms(f1, g1), ternarize_morphisms(f2, g2)
    )


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), ternary_words(max_size=40))
def test_images_of_amicable_words_stay_amicable(seed, w):
    phi, psi = random_pair(random.Random(seed), 2)
    eta = ternarize_morphisms(phi, psi)
    u, v = SIGMA01(w), SIGMA10(w)
    assert is_amicable(phi(u), psi(v))
    assert ternarize_words(phi(u), psi(v)) == eta(ternarize_words(u, v))


# fixed points

def test_fixed_point_fig4():
    fp = ternarization_fixed_point(*FIG4, 30)
    assert str(fp.eta) == "A:B,B:BCB,C:CAC"
    assert (fp.case, fp.seed) == ("A", "C")
    assert fp.word.startswith("CACBCAC")


def test_fixed_point_squared_pair():
    fp = ternarization_fixed_point(*SQUARED, 30)
    assert (fp.case, fp.seed) == ("A", "A")
    assert fp.word.startswith("ACABACABAB")


def test_fixed_point_case_b():
    fp = ternarization_fixed_point(*CASE_B, 40)
    assert (fp.case, fp.seed, fp.phi_seed, fp.psi_seed) == ("B", "B", "01", "10")
    assert str(fp.eta) == "A:B,B:BACA,C:BA"
    assert fp.eta(fp.word).startswith(fp.word)


def test_fixed_point_errors():
    ident = identity(BINARY)
    with pytest.raises(NotPrimitive):
        ternarization_fixed_point(ident, ident, 10)
    with pytest.raises(NoFixedPoint):
        ternarization_fixed_point(*BASE, 10)  # psi(0) = 10, psi(1) = 0: nothing starts its own image
    with pytest.raises(NotAmicable):
        ternarization_fixed_point(Morphism.parse("0:01,1:10"), Morphism.parse("0:01,1:10"), 10)


@pytest.mark.parametrize("pair", [FIG4, SQUARED, SILVER, CASE_B], ids=["fig4", "squared", "silver", "case_b"])
def test_fixed_point_images_are_sturmian(pair):
    fp = ternarization_fixed_point(*pair, 4000)
    w = fp.word
    assert fp.eta(w).startswith(w)
    assert fixed_point_prefix(pair[0], 2000, fp.phi_seed) == SIGMA01(w)[:2000]
    assert fixed_point_prefix(pair[1], 2000, fp.psi_seed) == SIGMA10(w)[:2000]
    for image in (SIGMA01(w), SIGMA10(w)):
        assert classify_profile(complexity_profile(image, 20)) == "sturmian_consistent"


def test_fixed_point_complexity_dichotomy():
    # regular words give 2n+1; the others settle into n+K
    regular = {"silver": SILVER, "case_b": CASE_B}
    for name, pair in {"fig4": FIG4, "squared": SQUARED, **regular}.items():
        prof = complexity_profile(ternarization_fixed_point(*pair, 4000).word, 15)
        if name in regular:
            assert classify_profile(prof) == "threeiet_consistent"
        else:
            tail = [c - n for n, c in enumerate(prof, 1)][5:]
            assert len(set(tail)) == 1
