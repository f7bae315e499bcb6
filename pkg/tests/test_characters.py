"""The q=1 character layer."""
from itertools import product

import pytest

from bklkit.characters import (
    IRREDUCIBLE,
    TILTING,
    irreducible_character,
    odd_reflection_check,
    tilting_character,
)
from bklkit.combinat import SignedSeq, antidominant, f_to_weight, typical, weight_to_f


def test_gl11_atypical_irreducible():
    # alternating multiplicities down the tie chain, within the window
    b = SignedSeq.parse("01")
    lam = f_to_weight(b, (2, 2))
    ch = irreducible_character(b, lam, k=5)
    assert ch.mult(lam) == 1
    seen = 0
    for t in range(1, 5):
        mu = f_to_weight(b, (2 - t, 2 - t))
        assert ch.mult(mu) == (-1) ** t
        seen += 1
    assert seen >= 3
    assert ch.window == 5


def test_gl11_atypical_tilting():
    b = SignedSeq.parse("01")
    lam = f_to_weight(b, (2, 2))
    ti = tilting_character(b, lam)
    mu = f_to_weight(b, (1, 1))
    assert ti.terms == {lam: 1, mu: 1}


def test_typical_single_verma():
    b = SignedSeq.parse("01")
    lam = f_to_weight(b, (0, 2))
    assert irreducible_character(b, lam).terms == {lam: 1}
    assert tilting_character(b, lam).terms == {lam: 1}


def test_head_term_and_lower_support():
    from bklkit.combinat import bruhat_leq

    b = SignedSeq.parse("010")
    lam = f_to_weight(b, (1, 1, 0))
    ch = irreducible_character(b, lam)
    assert ch.mult(lam) == 1
    f = weight_to_f(b, lam)
    for mu in ch.terms:
        assert bruhat_leq(b, weight_to_f(b, mu), f)


def test_classical_endpoint_matches_kl():
    # n = 0: the expansion comes from classical KL polynomials at q=1
    b = SignedSeq.standard(3, 0)
    lam = f_to_weight(b, (3, 2, 1))
    ch = irreducible_character(b, lam)
    # L(w0) for the regular block: all six Vermas with sign (-1)^{l(w)}
    from itertools import permutations

    def inv(p):
        return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])

    # Weyl character formula: sign (-1)^{l(w0) - l(w)}, head term +1
    expect = {}
    for p in permutations((1, 2, 3)):
        expect[f_to_weight(b, p)] = (-1) ** ((3 - inv(p)) % 2)
    assert ch.terms == expect


def test_odd_reflection_small():
    b = SignedSeq.parse("01")
    for f in product(range(0, 2), repeat=2):
        assert odd_reflection_check(b, 1, f_to_weight(b, f))
    assert odd_reflection_check(b, 1, f_to_weight(b, (2, 2)))


def test_odd_reflection_21():
    for bs, kappa in (("010", 1), ("010", 2), ("001", 2), ("100", 1)):
        b = SignedSeq.parse(bs)
        for f in [(1, 1, 0), (0, 0, 0), (1, 0, 1)]:
            assert odd_reflection_check(b, kappa, f_to_weight(b, f))


def test_odd_reflection_needs_mixed_pair():
    with pytest.raises(ValueError):
        odd_reflection_check(SignedSeq.parse("001"), 1, (0, 0, 0))


def test_expansion_json():
    b = SignedSeq.parse("01")
    lam = f_to_weight(b, (1, 1))
    data = irreducible_character(b, lam, k=4).to_json()
    assert data["b"] == "01" and data["kind"] == IRREDUCIBLE
    assert data["window"] == 4
    assert {"mu": ",".join(str(v) for v in lam), "mult": 1} in data["terms"]


def test_q1_values_match_columns():
    from bklkit.canonical import DUAL, bkl

    b = SignedSeq.parse("010")
    lam = f_to_weight(b, (1, 1, 1))
    k = 4
    ch = irreducible_character(b, lam, k=k)
    col = bkl(b, weight_to_f(b, lam), DUAL, k=k, check_stability=False)
    for g, c in col.entries.items():
        if c.ev(1):
            assert ch.mult(f_to_weight(b, g)) == c.ev(1)
